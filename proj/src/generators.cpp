#include "flatsurf/generators.hpp"

#include <cmath>
#include <sstream>

namespace flatsurf {

namespace {

double sqr(double x) { return x * x; }

void check_params(const TorusParams& params) {
    if (!(params.r1 > 0.0 && params.r1 < 1.0))
        fail(Errc::out_of_range, "params.r1 must lie in (0,1)");
    const double dev = std::abs(sqr(params.r1) + sqr(params.r2) - 1.0);
    if (!(dev <= 4.0 * std::numeric_limits<double>::epsilon()))
        fail(Errc::out_of_range, "params.r2 must satisfy r1^2 + r2^2 = 1");
}

void check_eps(int eps, const char* key) {
    if (eps != 1 && eps != -1)
        fail(Errc::out_of_range, std::string(key) + " must be +1 or -1");
}

}  // namespace

GeneratorConfig validate_config(const TorusParams& params, GeneratorConfig cfg) {
    check_params(params);
    if (!(std::isfinite(cfg.c) && cfg.c > 0.0))
        fail(Errc::out_of_range, "c must be a positive finite number");
    for (double v : {cfg.a1, cfg.a2, cfg.b1, cfg.b2})
        if (!std::isfinite(v)) fail(Errc::out_of_range, "generator coefficients must be finite");

    cfg.canonical.reset();
    switch (cfg.family) {
        case Family::cosh_sinh:
        case Family::sinh_cosh:
            break;
        case Family::exp:
            check_eps(cfg.eps1, "eps1");
            check_eps(cfg.eps2, "eps2");
            if (cfg.a1 == 0.0 && cfg.b1 == 0.0)
                fail(Errc::degenerate_generator, "exp family with a1 = b1 = 0 gives S == 0");
            break;
        case Family::general: {
            const double lhs = (sqr(cfg.a1) - sqr(cfg.a2)) * sqr(params.r2);
            const double rhs = (sqr(cfg.b2) - sqr(cfg.b1)) * sqr(params.r1);
            const double scale = std::max(std::abs(lhs), std::abs(rhs));
            if (std::abs(lhs - rhs) > kConstraintRelTol * scale) {
                std::ostringstream os;
                os << "general-family constraint (a1^2-a2^2) r2^2 == (b2^2-b1^2) r1^2 "
                      "violated: lhs = "
                   << lhs << ", rhs = " << rhs;
                fail(Errc::constraint_violated, os.str());
            }
            if (cfg.a1 == 0.0 && cfg.a2 == 0.0 && cfg.b1 == 0.0 && cfg.b2 == 0.0)
                fail(Errc::degenerate_generator, "general family with all coefficients 0 gives S == 0");
            cfg.canonical = canonical_form(params, cfg);
            break;
        }
    }
    return cfg;
}

CanonicalForm canonical_form(const TorusParams& params, const GeneratorConfig& cfg) {
    CanonicalForm cf;
    if (cfg.family != Family::general) {
        cf.family = cfg.family;
        cf.eps1 = cfg.eps1;
        cf.eps2 = cfg.eps2;
        return cf;
    }

    const double A1 = sqr(cfg.a1) - sqr(cfg.a2);
    if (A1 > 0.0) {
        // f = sigma K cosh(alpha + A2), g = sigma K (r2/r1) sinh(beta + B2).
        const double K = std::sqrt(A1);
        const double sigma = cfg.a1 > 0.0 ? 1.0 : -1.0;
        const double Kg = K * params.r2 / params.r1;
        cf.family = Family::cosh_sinh;
        cf.scale = sigma * K;
        cf.shift_a = std::asinh(cfg.a2 / (sigma * K));
        cf.shift_b = std::asinh(cfg.b1 / (sigma * Kg));
        cf.mirrored = (cfg.b2 > 0.0 ? 1.0 : -1.0) != sigma;
    } else if (A1 < 0.0) {
        // f = sigma K sinh(alpha + A2), g = sigma K (r2/r1) cosh(beta + B2).
        const double K = std::sqrt(-A1);
        const double sigma = cfg.a2 > 0.0 ? 1.0 : -1.0;
        const double Kg = K * params.r2 / params.r1;
        cf.family = Family::sinh_cosh;
        cf.scale = sigma * K;
        cf.shift_a = std::asinh(cfg.a1 / (sigma * K));
        cf.shift_b = std::asinh(cfg.b2 / (sigma * Kg));
        cf.mirrored = (cfg.b1 > 0.0 ? 1.0 : -1.0) != sigma;
    } else {
        // a2 = +/- a1, b2 = +/- b1: already an exp pair with the same a1, b1.
        cf.family = Family::exp;
        cf.eps1 = (cfg.a1 != 0.0 && cfg.a2 / cfg.a1 < 0.0) ? -1 : +1;
        cf.eps2 = (cfg.b1 != 0.0 && cfg.b2 / cfg.b1 < 0.0) ? -1 : +1;
    }
    return cf;
}

GeneratorValues eval_generators(const TorusParams& params, const GeneratorConfig& cfg,
                                ParamPoint u) {
    const double sc = std::sqrt(cfg.c);
    const double ka = params.r2 * sc;  // d(alpha)/d(u1)
    const double kb = params.r1 * sc;  // d(beta)/d(u2)
    const double alpha = ka * u.u1;
    const double beta = kb * u.u2;
    if (!(std::abs(alpha) <= kMaxGeneratorArg && std::abs(beta) <= kMaxGeneratorArg)) {
        std::ostringstream os;
        os << "generator argument out of range: |alpha| = " << std::abs(alpha)
           << ", |beta| = " << std::abs(beta) << " (limit " << kMaxGeneratorArg << ")";
        fail(Errc::overflow, os.str());
    }

    GeneratorValues gv;
    switch (cfg.family) {
        case Family::cosh_sinh:
            gv.f = std::cosh(alpha);
            gv.fp = ka * std::sinh(alpha);
            gv.g = (params.r2 / params.r1) * std::sinh(beta);
            gv.gp = params.r2 * sc * std::cosh(beta);
            break;
        case Family::sinh_cosh:
            gv.f = std::sinh(alpha);
            gv.fp = ka * std::cosh(alpha);
            gv.g = (params.r2 / params.r1) * std::cosh(beta);
            gv.gp = params.r2 * sc * std::sinh(beta);
            break;
        case Family::exp:
            gv.f = cfg.a1 * std::exp(cfg.eps1 * alpha);
            gv.fp = cfg.eps1 * ka * gv.f;
            gv.g = cfg.b1 * std::exp(cfg.eps2 * beta);
            gv.gp = cfg.eps2 * kb * gv.g;
            break;
        case Family::general: {
            const double ca = std::cosh(alpha), sa = std::sinh(alpha);
            const double cb = std::cosh(beta), sb = std::sinh(beta);
            gv.f = cfg.a1 * ca + cfg.a2 * sa;
            gv.fp = ka * (cfg.a1 * sa + cfg.a2 * ca);
            gv.g = cfg.b1 * cb + cfg.b2 * sb;
            gv.gp = kb * (cfg.b1 * sb + cfg.b2 * cb);
            break;
        }
    }
    if (!(std::isfinite(gv.f) && std::isfinite(gv.fp) && std::isfinite(gv.g) &&
          std::isfinite(gv.gp)))
        fail(Errc::overflow, "generator value left double range");
    return gv;
}

}  // namespace flatsurf
