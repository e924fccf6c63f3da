#include "flatsurf/scan.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "flatsurf/errors.hpp"
#include "flatsurf/surface.hpp"

namespace flatsurf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct MinTracker {
    double value = std::numeric_limits<double>::infinity();
    ParamPoint at{};
    void offer(double v, ParamPoint u) {
        if (v < value) {
            value = v;
            at = u;
        }
    }
};

}  // namespace

double bisect_margin(const TorusParams& params, const GeneratorConfig& cfg, ParamPoint at,
                     int axis, double lo, double hi) {
    if (axis != 0 && axis != 1) fail(Errc::out_of_range, "bisect_margin axis must be 0 or 1");
    const auto eval = [&](double t) {
        ParamPoint u = at;
        (axis == 0 ? u.u1 : u.u2) = t;
        return singularity_margin(params, cfg, u);
    };
    double flo = eval(lo);
    double fhi = eval(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        fail(Errc::constraint_violated, "bisect_margin requires a margin sign change");
    // Plain bisection down to the spacing of doubles around the root.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fmid = eval(mid);
        if (fmid == 0.0) return mid;
        if (std::signbit(fmid) == std::signbit(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

CompletenessScan completeness_scan(const TorusParams& params, const GeneratorConfig& cfg,
                                   const GridSpec& grid, double mask_threshold) {
    validate_grid(grid);
    const GeneratorConfig checked = validate_config(params, cfg);
    if (!(mask_threshold >= 0.0 && std::isfinite(mask_threshold)))
        fail(Errc::out_of_range, "mask_threshold must be finite and >= 0");

    CompletenessScan out;
    out.grid = grid;
    out.mask_threshold = mask_threshold;

    const double a = params.a();
    const long long n1 = grid.n1, n2 = grid.n2;
    std::vector<double> margin((std::size_t)(n1 * n2), kNaN);
    MinTracker min1, min2;
    double boundary_dev = 0.0;
    double diagonal_dev = 0.0;

    for (long long j = 0; j < n2; ++j) {
        for (long long i = 0; i < n1; ++i) {
            const ParamPoint u{grid.u1(i), grid.u2(j)};
            double m = kNaN;
            try {
                const auto [psi1, psi2] = metric_coefficients(params, checked, u);
                m = singularity_margin(params, checked, u);
                min1.offer(std::abs(psi1), u);
                min2.offer(std::abs(psi2), u);
                const double dev =
                    std::max(std::abs(std::abs(psi1) - a), std::abs(std::abs(psi2) - a));
                if (i == 0 || i == n1 - 1) boundary_dev = std::max(boundary_dev, dev);
                if ((i == 0 || i == n1 - 1) && (j == 0 || j == n2 - 1))
                    diagonal_dev = std::max(diagonal_dev, dev);
            } catch (const Error& e) {
                if (e.code() != Errc::overflow) throw;
                ++out.overflow_samples;
            }
            margin[(std::size_t)grid.index(i, j)] = m;
            if (std::isfinite(m) && std::abs(m) <= mask_threshold) ++out.singular_samples;
        }
    }

    out.min_abs_psi1 = min1.value;
    out.argmin_psi1 = min1.at;
    out.min_abs_psi2 = min2.value;
    out.argmin_psi2 = min2.at;
    out.max_boundary_dev = boundary_dev;
    out.diagonal_dev = diagonal_dev;

    // Localize margin sign changes: first along each column (u2 varies),
    // then along each row (u1 varies).
    const auto at = [&](long long i, long long j) {
        return margin[(std::size_t)grid.index(i, j)];
    };
    const auto full = [&] { return (long long)out.margin_roots.size() >= kMaxScanRoots; };
    for (long long i = 0; i < n1 && !full(); ++i) {
        for (long long j = 0; j + 1 < n2 && !full(); ++j) {
            const double m0 = at(i, j), m1 = at(i, j + 1);
            if (!std::isfinite(m0) || !std::isfinite(m1)) continue;
            if (m0 == 0.0) {
                out.margin_roots.push_back({grid.u1(i), grid.u2(j)});
                continue;
            }
            if (m1 == 0.0 || std::signbit(m0) == std::signbit(m1)) continue;
            const double root = bisect_margin(params, checked, {grid.u1(i), 0.0}, 1,
                                              grid.u2(j), grid.u2(j + 1));
            out.margin_roots.push_back({grid.u1(i), root});
        }
    }
    for (long long j = 0; j < n2 && !full(); ++j) {
        for (long long i = 0; i + 1 < n1 && !full(); ++i) {
            const double m0 = at(i, j), m1 = at(i + 1, j);
            if (!std::isfinite(m0) || !std::isfinite(m1) || m0 == 0.0 || m1 == 0.0) continue;
            if (std::signbit(m0) == std::signbit(m1)) continue;
            const double root = bisect_margin(params, checked, {0.0, grid.u2(j)}, 0,
                                              grid.u1(i), grid.u1(i + 1));
            out.margin_roots.push_back({root, grid.u2(j)});
        }
    }
    return out;
}

CompletenessScan completeness_scan_seed(const TorusParams& params, const GridSpec& grid) {
    validate_grid(grid);
    CompletenessScan out;
    out.grid = grid;
    out.seed_metric = true;
    // The seed torus is flat with both metric coefficients identically r1 r2,
    // so every sample ties for the minimum and there are no margin zeros.
    out.min_abs_psi1 = out.min_abs_psi2 = params.a();
    out.argmin_psi1 = out.argmin_psi2 = ParamPoint{grid.u1(0), grid.u2(0)};
    out.max_boundary_dev = 0.0;
    out.diagonal_dev = 0.0;
    return out;
}

}  // namespace flatsurf
