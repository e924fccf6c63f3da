#include <cmath>

#include "doctest.h"

#include "flatsurf/checks.hpp"
#include "flatsurf/scan.hpp"
#include "flatsurf/surface.hpp"

using namespace flatsurf;

namespace {

const TorusParams kTp = TorusParams::from_r1(0.6);

GeneratorConfig fast_cosh_sinh() {
    GeneratorConfig cfg;
    cfg.c = 4.0;
    cfg.family = Family::cosh_sinh;
    return cfg;
}

// Zeros of the two metric coefficients on the u1 = 0 line: g/f = 4 and 2/3.
const double kRootPsi1 = std::asinh(3.0) / 1.2;
const double kRootPsi2 = std::asinh(0.5) / 1.2;

}  // namespace

TEST_CASE("bisection refines a margin zero to full precision") {
    const GeneratorConfig cfg = fast_cosh_sinh();

    const double r1 = bisect_margin(kTp, cfg, {0.0, 0.0}, 1, 1.0, 2.0);
    CHECK(r1 == kRootPsi1);
    CHECK(std::abs(singularity_margin(kTp, cfg, {0.0, r1})) <= 1e-12);

    const double r2 = bisect_margin(kTp, cfg, {0.0, 0.0}, 1, 0.1, 1.0);
    CHECK(std::abs(r2 - kRootPsi2) <= 1e-12);

    // Axis 0 varies u1; on the u2 = 2 line the first coefficient vanishes
    // where cosh(1.6 u1) = sinh(2.4) / 3.
    const double r3 = bisect_margin(kTp, cfg, {0.0, 2.0}, 0, 0.5, 1.0);
    CHECK(std::abs(r3 - std::acosh(std::sinh(2.4) / 3.0) / 1.6) <= 1e-12);
}

TEST_CASE("bisection validates its bracket and axis") {
    const GeneratorConfig cfg = fast_cosh_sinh();
    try {
        (void)bisect_margin(kTp, cfg, {0.0, 0.0}, 1, 0.1, 0.2);
        FAIL("expected constraint_violated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::constraint_violated);
    }
    try {
        (void)bisect_margin(kTp, cfg, {0.0, 0.0}, 2, 0.0, 1.0);
        FAIL("expected out_of_range");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::out_of_range);
    }
}

TEST_CASE("the scan localizes every singular crossing in a window") {
    const GridSpec grid{-1.0, 1.0, 0.0, 2.0, 5, 41};
    const CompletenessScan scan = completeness_scan(kTp, fast_cosh_sinh(), grid);

    CHECK_FALSE(scan.seed_metric);
    REQUIRE(!scan.margin_roots.empty());
    CHECK((long long)scan.margin_roots.size() < kMaxScanRoots);

    bool found1 = false, found2 = false;
    for (const ParamPoint& r : scan.margin_roots) {
        CHECK(std::abs(singularity_margin(kTp, fast_cosh_sinh(), r)) <= 1e-9);
        if (std::abs(r.u1) <= 1e-15 && std::abs(r.u2 - kRootPsi1) <= 1e-9) found1 = true;
        if (std::abs(r.u1) <= 1e-15 && std::abs(r.u2 - kRootPsi2) <= 1e-9) found2 = true;
    }
    CHECK(found1);
    CHECK(found2);

    // Both coefficients vanish somewhere in this window, so the tracked
    // minima are far below the flat-torus value r1 r2 = 0.48.
    CHECK(scan.min_abs_psi1 < 0.3);
    CHECK(scan.min_abs_psi2 < 0.3);
    CHECK(scan.argmin_psi1.u2 >= 0.0);
    CHECK(scan.argmin_psi1.u2 <= 2.0);
    CHECK(scan.overflow_samples == 0);
}

TEST_CASE("metric coefficients approach the flat-torus value at the u1 extremes") {
    const GridSpec grid{-20.0, 20.0, -1.0, 1.0, 2, 3};
    const CompletenessScan scan = completeness_scan(kTp, fast_cosh_sinh(), grid);
    CHECK(scan.max_boundary_dev < kTolCompleteness);
    CHECK(scan.diagonal_dev < kTolCompleteness);
    CHECK(scan.margin_roots.empty());
}

TEST_CASE("samples past the generator range are tallied, not fatal") {
    const GridSpec grid{400.0, 500.0, 0.0, 1.0, 2, 2};
    const CompletenessScan scan = completeness_scan(kTp, fast_cosh_sinh(), grid);
    CHECK(scan.overflow_samples == 2);  // the u1 = 500 column
    CHECK(scan.min_abs_psi1 == doctest::Approx(kTp.a()).epsilon(1e-9));
    CHECK(scan.margin_roots.empty());
}

TEST_CASE("the seed-torus scan is the constant baseline") {
    const GridSpec grid{-2.0, 2.0, -2.5, 2.5, 11, 11};
    const CompletenessScan scan = completeness_scan_seed(kTp, grid);
    CHECK(scan.seed_metric);
    CHECK(scan.min_abs_psi1 == kTp.a());
    CHECK(scan.min_abs_psi2 == kTp.a());
    CHECK(scan.max_boundary_dev == 0.0);
    CHECK(scan.diagonal_dev == 0.0);
    CHECK(scan.margin_roots.empty());
    CHECK(scan.argmin_psi1.u1 == -2.0);
}

TEST_CASE("scan inputs are validated") {
    CHECK_THROWS_AS((void)completeness_scan(kTp, fast_cosh_sinh(),
                                            {-1.0, 1.0, 0.0, 1.0, 5, 5}, -0.5),
                    Error);
    CHECK_THROWS_AS((void)completeness_scan(kTp, fast_cosh_sinh(), {1.0, -1.0, 0.0, 1.0, 5, 5}),
                    Error);
    GeneratorConfig bad = fast_cosh_sinh();
    bad.c = -1.0;
    CHECK_THROWS_AS((void)completeness_scan(kTp, bad, {-1.0, 1.0, 0.0, 1.0, 5, 5}), Error);
}
