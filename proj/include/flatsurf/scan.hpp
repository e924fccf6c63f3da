#pragma once

// Completeness / singular-set scan.  Samples the metric coefficients over a
// grid, tracks how close |psi_i| comes to zero and how fast it approaches
// the flat-torus value r1 r2 at the u1 extremes (the completeness
// asymptotics), and localizes margin zero crossings by bisection along grid
// lines.

#include <vector>

#include "flatsurf/grid.hpp"

namespace flatsurf {

inline constexpr int kMaxScanRoots = 256;

struct CompletenessScan {
    GridSpec grid;
    double mask_threshold = kMaskThresholdDefault;
    bool seed_metric = false;  // scan of the untransformed torus instead

    double min_abs_psi1 = 0.0, min_abs_psi2 = 0.0;
    ParamPoint argmin_psi1{}, argmin_psi2{};

    // max over sampled u2 of | |psi_i(u1 extreme, u2)| - r1 r2 |.
    double max_boundary_dev = 0.0;
    // informational: the same deviation at the grid corners (diagonal rays).
    double diagonal_dev = 0.0;

    std::vector<ParamPoint> margin_roots;  // bisection-refined zero crossings
    long long singular_samples = 0;        // grid samples with |margin| <= mask_threshold
    long long overflow_samples = 0;
};

CompletenessScan completeness_scan(const TorusParams& params, const GeneratorConfig& cfg,
                                   const GridSpec& grid,
                                   double mask_threshold = kMaskThresholdDefault);

// The seed torus has constant metric coefficient r1 r2; the scan of it is
// trivial and kept as a baseline.
CompletenessScan completeness_scan_seed(const TorusParams& params, const GridSpec& grid);

// Bisection refinement of a margin zero along one coordinate line:
// axis = 0 varies u1 (u.u2 fixed), axis = 1 varies u2 (u.u1 fixed).
// Requires a sign change of the margin between lo and hi.
double bisect_margin(const TorusParams& params, const GeneratorConfig& cfg, ParamPoint at,
                     int axis, double lo, double hi);

}  // namespace flatsurf
