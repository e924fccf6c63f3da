#pragma once

// Regular parameter-grid sampling of the transformed surface.  This is one
// of the two data-parallel kernels; sample_grid runs the OpenMP version and
// sample_grid_serial is the reference implementation the tests compare
// against (outputs are required to match bit for bit).

#include <cstdint>
#include <vector>

#include "flatsurf/surface.hpp"

namespace flatsurf {

inline constexpr long long kGridVertexCap = 4'000'000;

struct GridSpec {
    double u1_min = -1.0, u1_max = 1.0;
    double u2_min = -1.0, u2_max = 1.0;
    int n1 = 2, n2 = 2;

    // Endpoint-exact affine sample positions.
    double u1(int i) const {
        return (u1_min * double(n1 - 1 - i) + u1_max * double(i)) / double(n1 - 1);
    }
    double u2(int j) const {
        return (u2_min * double(n2 - 1 - j) + u2_max * double(j)) / double(n2 - 1);
    }
    long long vertex_count() const { return (long long)n1 * (long long)n2; }
    // Row-major vertex id, u1 varying fastest.
    long long index(int i, int j) const { return (long long)j * n1 + i; }
};

// Rejects degenerate extents, n < 2, or vertex counts beyond kGridVertexCap.
void validate_grid(const GridSpec& grid);

struct SampledField {
    TorusParams params;
    GeneratorConfig cfg;
    GridSpec grid;
    double mask_threshold = kMaskThresholdDefault;
    std::vector<EvalRecord> records;   // row-major, grid.index order
    std::vector<std::uint8_t> mask;    // 1 = masked (singular band or failed evaluation)
    long long singular_count = 0;      // masked because |margin| <= mask_threshold
    long long overflow_count = 0;      // masked because evaluation failed (range overflow)
};

SampledField sample_grid(const TorusParams& params, const GeneratorConfig& cfg,
                         const GridSpec& grid, double mask_threshold = kMaskThresholdDefault,
                         int threads = 0);

SampledField sample_grid_serial(const TorusParams& params, const GeneratorConfig& cfg,
                                const GridSpec& grid,
                                double mask_threshold = kMaskThresholdDefault);

}  // namespace flatsurf
