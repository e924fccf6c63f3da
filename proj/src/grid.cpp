#include "flatsurf/grid.hpp"

#include <cmath>

#include "flatsurf/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flatsurf {

namespace {

// One vertex of the sampling kernel.  The config is validated before the
// loop, so any Error raised here is a range failure of the generators at
// this particular point; the vertex is masked and tallied, never fatal.
void sample_vertex(const TorusParams& params, const GeneratorConfig& cfg, const GridSpec& grid,
                   double mask_threshold, long long k, EvalRecord& rec, std::uint8_t& mk,
                   long long& singular, long long& overflow) {
    const int i = (int)(k % grid.n1);
    const int j = (int)(k / grid.n1);
    const ParamPoint u{grid.u1(i), grid.u2(j)};
    try {
        rec = eval_record(params, cfg, u, mask_threshold);
        mk = rec.regular ? 0 : 1;
        if (mk) ++singular;
    } catch (const Error&) {
        rec = EvalRecord{};
        rec.point = u;
        mk = 1;
        ++overflow;
    }
}

SampledField field_shell(const TorusParams& params, const GeneratorConfig& cfg,
                         const GridSpec& grid, double mask_threshold) {
    validate_grid(grid);
    if (!(mask_threshold >= 0.0 && std::isfinite(mask_threshold)))
        fail(Errc::out_of_range, "mask_threshold must be finite and >= 0");
    SampledField f;
    f.params = params;
    f.cfg = validate_config(params, cfg);
    f.grid = grid;
    f.mask_threshold = mask_threshold;
    f.records.resize((std::size_t)grid.vertex_count());
    f.mask.assign((std::size_t)grid.vertex_count(), 0);
    return f;
}

}  // namespace

void validate_grid(const GridSpec& grid) {
    for (double v : {grid.u1_min, grid.u1_max, grid.u2_min, grid.u2_max})
        if (!std::isfinite(v)) fail(Errc::out_of_range, "grid bounds must be finite");
    if (!(grid.u1_min < grid.u1_max) || !(grid.u2_min < grid.u2_max))
        fail(Errc::out_of_range, "grid bounds must satisfy min < max on both axes");
    if (grid.n1 < 2 || grid.n2 < 2)
        fail(Errc::out_of_range, "grid needs at least 2 samples per axis");
    if (grid.vertex_count() > kGridVertexCap)
        fail(Errc::grid_too_large, "grid exceeds the vertex cap");
}

SampledField sample_grid(const TorusParams& params, const GeneratorConfig& cfg,
                         const GridSpec& grid, double mask_threshold, int threads) {
    SampledField f = field_shell(params, cfg, grid, mask_threshold);
    const long long n = grid.vertex_count();
    long long singular = 0, overflow = 0;
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt) reduction(+ : singular, overflow)
#else
    (void)threads;
#endif
    for (long long k = 0; k < n; ++k)
        sample_vertex(params, f.cfg, grid, mask_threshold, k, f.records[(std::size_t)k],
                      f.mask[(std::size_t)k], singular, overflow);
    f.singular_count = singular;
    f.overflow_count = overflow;
    return f;
}

SampledField sample_grid_serial(const TorusParams& params, const GeneratorConfig& cfg,
                                const GridSpec& grid, double mask_threshold) {
    SampledField f = field_shell(params, cfg, grid, mask_threshold);
    const long long n = grid.vertex_count();
    long long singular = 0, overflow = 0;
    for (long long k = 0; k < n; ++k)
        sample_vertex(params, f.cfg, grid, mask_threshold, k, f.records[(std::size_t)k],
                      f.mask[(std::size_t)k], singular, overflow);
    f.singular_count = singular;
    f.overflow_count = overflow;
    return f;
}

}  // namespace flatsurf
