#pragma once

// Generator pairs (f(u1), g(u2)) driving the Ribaucour transformation of the
// flat torus.  Flatness of the transformed surface forces
//
//   f'' = c r2^2 f,   g'' = c r1^2 g,   c > 0,
//
// whose solutions we expose in four parametrizations:
//
//   cosh_sinh:  f = cosh(r2 sqrt(c) u1),        g = (r2/r1) sinh(r1 sqrt(c) u2)
//   sinh_cosh:  f = sinh(r2 sqrt(c) u1),        g = (r2/r1) cosh(r1 sqrt(c) u2)
//   exp:        f = a1 exp(eps1 r2 sqrt(c) u1), g = b1 exp(eps2 r1 sqrt(c) u2)
//   general:    f = a1 cosh(alpha) + a2 sinh(alpha),
//               g = b1 cosh(beta)  + b2 sinh(beta),
//               subject to (a1^2 - a2^2) r2^2 = (b2^2 - b1^2) r1^2.
//
// A general pair reduces, up to an ambient isometry, to one of the first
// three: parameter shifts (A2, B2) plus a joint coefficient rescaling, which
// the transformed surface is invariant under.

#include <optional>

#include "flatsurf/torus.hpp"

namespace flatsurf {

// Generator arguments beyond this bound would push cosh/sinh/exp past the
// double range; eval_generators refuses them.
inline constexpr double kMaxGeneratorArg = 700.0;

// Relative tolerance on the general-family coefficient constraint.
inline constexpr double kConstraintRelTol = 1e-12;

enum class Family { cosh_sinh, sinh_cosh, exp, general };

constexpr const char* family_name(Family f) {
    switch (f) {
        case Family::cosh_sinh: return "cosh-sinh";
        case Family::sinh_cosh: return "sinh-cosh";
        case Family::exp: return "exp";
        case Family::general: return "general";
    }
    return "unknown";
}

// Reduction of a general-family config to its canonical equivalent.
// With K = scale (sign included), the general pair satisfies
//   f(u1) = K * f0(u1 + shift_a / (r2 sqrt c)),
//   g(u2) = K * g0(u2 + shift_b / (r1 sqrt c)),
// where (f0, g0) is the canonical pair of `family`.  `mirrored` marks the
// case where f and g carry opposite signs relative to the canonical pair,
// which no joint rescaling can absorb.
struct CanonicalForm {
    Family family = Family::cosh_sinh;
    double scale = 1.0;
    double shift_a = 0.0;  // A2
    double shift_b = 0.0;  // B2
    int eps1 = +1, eps2 = +1;  // only for the exp reduction
    bool mirrored = false;
};

struct GeneratorConfig {
    double c = 1.0;
    Family family = Family::cosh_sinh;
    double a1 = 1.0, a2 = 0.0;  // f coefficients (exp: a1 only; general: both)
    double b1 = 1.0, b2 = 0.0;  // g coefficients (exp: b1 only; general: both)
    int eps1 = +1, eps2 = +1;   // exponent signs, exp family only
    std::optional<CanonicalForm> canonical;  // filled by validate_config for general
};

struct GeneratorValues {
    double f = 0.0, fp = 0.0;  // f(u1), f'(u1)
    double g = 0.0, gp = 0.0;  // g(u2), g'(u2)
};

// Checks params and cfg (ranges, coefficient constraint, degenerate pairs)
// and returns the config with the canonical reduction attached when the
// family is `general`.
GeneratorConfig validate_config(const TorusParams& params, GeneratorConfig cfg);

// Canonical reduction of a general config (identity for the fixed families).
CanonicalForm canonical_form(const TorusParams& params, const GeneratorConfig& cfg);

// f, g and their derivatives at a parameter point.  Throws Errc::overflow
// when an argument exceeds kMaxGeneratorArg or a value leaves double range.
GeneratorValues eval_generators(const TorusParams& params, const GeneratorConfig& cfg,
                                ParamPoint u);

}  // namespace flatsurf
