#include "flatsurf/surface.hpp"

#include <cmath>

namespace flatsurf {

namespace {

double sqr(double x) { return x * x; }

// All quantities entering the transformed surface are homogeneous of degree
// zero in a joint rescaling of (f, g).  To keep the evaluation finite for
// large generator arguments, work with f, g divided by a power of two m ~
// max(|f|, |g|); every derived value below carries the scaled meaning, and
// the raw bundle is recovered by multiplying the appropriate power of m
// (exact, since m is a power of two).
struct Core {
    double m = 1.0;
    double f = 0, fp = 0, g = 0, gp = 0;           // scaled by 1/m
    double omega = 0, omega1 = 0, omega2 = 0, w = 0;  // scaled by 1/m
    double s = 0;                                  // scaled by 1/m^2
    double t1 = 0, t2 = 0;                         // scaled by 1/m
    double theta = 0;                              // scale-free
    double hyp1 = 0, hyp2 = 0;                     // scaled by 1/m^2
    // Normalized singular-set factors: p1/d and p2/d are the two factors
    // whose product is the margin; psi_i = r1 r2 * p_i / d.
    double p1 = 0, p2 = 0, d = 0;
    // Shape-eigenvalue quotients lt_i = num_i / den_i.
    double num1 = 0, den1 = 0, num2 = 0, den2 = 0;
};

Core make_core(const TorusParams& params, const GeneratorConfig& cfg, ParamPoint u) {
    const GeneratorValues gv = eval_generators(params, cfg, u);
    const double r1 = params.r1, r2 = params.r2, a = params.a();
    const double l1 = params.lambda1(), l2 = params.lambda2();

    Core k;
    const double big = std::max(std::abs(gv.f), std::abs(gv.g));
    k.m = big > 0.0 ? std::exp2(std::ilogb(big)) : 1.0;
    k.f = gv.f / k.m;
    k.fp = gv.fp / k.m;
    k.g = gv.g / k.m;
    k.gp = gv.gp / k.m;

    k.omega = a * (k.f + k.g);
    k.omega1 = k.fp;
    k.omega2 = k.gp;
    k.w = sqr(r2) * k.f - sqr(r1) * k.g;
    k.s = (1.0 + cfg.c) * (sqr(k.omega) + sqr(k.w));
    if (!(k.s > 0.0))
        fail(Errc::degenerate_point, "S == 0: transformation undefined at this point");
    k.t1 = 2.0 * r2 * (1.0 + cfg.c) * k.f / r1;
    k.t2 = 2.0 * r1 * (1.0 + cfg.c) * k.g / r2;
    k.theta = std::atan2(k.omega, k.w);
    k.hyp1 = k.w * (k.w + l1 * k.omega);
    k.hyp2 = k.w * (k.w + l2 * k.omega);

    const double tff = sqr(r2) * sqr(k.f);
    const double tgg = sqr(r1) * sqr(k.g);
    const double tfg = k.f * k.g;
    k.d = tff + tgg;
    k.p1 = tgg - tff - 2.0 * sqr(r2) * tfg;
    k.p2 = tff - tgg - 2.0 * sqr(r1) * tfg;

    k.num1 = k.w * k.t1 + l1 * k.s;
    k.den1 = k.s - k.omega * k.t1;
    k.num2 = k.w * k.t2 + l2 * k.s;
    k.den2 = k.s - k.omega * k.t2;
    return k;
}

double margin_of(const Core& k) { return (k.p1 / k.d) * (k.p2 / k.d); }

ScalarBundle bundle_from(const Core& k) {
    ScalarBundle sb;
    const double m = k.m, m2 = k.m * k.m;
    sb.f = k.f * m;
    sb.fp = k.fp * m;
    sb.g = k.g * m;
    sb.gp = k.gp * m;
    sb.omega = k.omega * m;
    sb.omega1 = k.omega1 * m;
    sb.omega2 = k.omega2 * m;
    sb.w = k.w * m;
    sb.s = k.s * m2;
    sb.t1 = k.t1 * m;
    sb.t2 = k.t2 * m;
    sb.theta = k.theta;
    sb.hyp1 = k.hyp1 * m2;
    sb.hyp2 = k.hyp2 * m2;
    for (double v : {sb.f, sb.fp, sb.g, sb.gp, sb.omega, sb.omega1, sb.omega2, sb.w, sb.s,
                     sb.t1, sb.t2, sb.hyp1, sb.hyp2})
        if (!std::isfinite(v)) fail(Errc::overflow, "scalar bundle left double range");
    return sb;
}

struct Trig {
    double c1, s1, c2, s2;
};

Trig trig_at(const TorusParams& params, ParamPoint u) {
    const double a1 = params.r2 * u.u1, a2 = params.r1 * u.u2;
    return {std::cos(a1), std::sin(a1), std::cos(a2), std::sin(a2)};
}

Vec4 point_from_core(const TorusParams& params, const Core& k, ParamPoint u) {
    const double r1 = params.r1, r2 = params.r2;
    const Trig t = trig_at(params, u);
    const double invS = 1.0 / k.s;
    // Component expansion of X - (2 Omega/S)(Omega X + Omega1 e1 + Omega2 e2 - W N).
    const double A = (r1 * k.s - 2.0 * r1 * sqr(k.omega) - 2.0 * r2 * k.omega * k.w) * invS;
    const double B = 2.0 * k.fp * k.omega * invS;
    const double C = (r2 * k.s - 2.0 * r2 * sqr(k.omega) + 2.0 * r1 * k.omega * k.w) * invS;
    const double D = 2.0 * k.gp * k.omega * invS;
    return {A * t.c1 + B * t.s1, A * t.s1 - B * t.c1, C * t.c2 + D * t.s2,
            C * t.s2 - D * t.c2};
}

Vec4 combo_u(const Core& k, const TorusFrame& fr) {
    return k.omega * fr.x + k.omega1 * fr.e1 + k.omega2 * fr.e2 - k.w * fr.n;
}

}  // namespace

ScalarBundle eval_scalars(const TorusParams& params, const GeneratorConfig& cfg,
                          ParamPoint u) {
    return bundle_from(make_core(params, cfg, u));
}

Vec4 transformed_point(const TorusParams& params, const GeneratorConfig& cfg, ParamPoint u) {
    return point_from_core(params, make_core(params, cfg, u), u);
}

Vec4 transformed_point_frame(const TorusParams& params, const GeneratorConfig& cfg,
                             ParamPoint u) {
    const Core k = make_core(params, cfg, u);
    const TorusFrame fr = torus_frame(params, u);
    return fr.x - (2.0 * k.omega / k.s) * combo_u(k, fr);
}

Vec4 transformed_normal(const TorusParams& params, const GeneratorConfig& cfg, ParamPoint u) {
    const Core k = make_core(params, cfg, u);
    const TorusFrame fr = torus_frame(params, u);
    return fr.n + (2.0 * k.w / k.s) * combo_u(k, fr);
}

Vec4 transformed_normal_variant(const TorusParams& params, const GeneratorConfig& cfg,
                                ParamPoint u) {
    const Core k = make_core(params, cfg, u);
    const double r1 = params.r1, r2 = params.r2;
    const Trig t = trig_at(params, u);
    const double invS = 1.0 / k.s;
    // Flawed coefficients, kept verbatim: the W^2 / Omega W pair in each
    // bracket carries the wrong signs and the derivative terms multiply
    // Omega instead of W.  See transformed_normal for the correct form.
    const double A = (-r2 * k.s - 2.0 * r2 * sqr(k.w) + 2.0 * r1 * k.omega * k.w) * invS;
    const double B = 2.0 * k.fp * k.omega * invS;
    const double C = (r1 * k.s + 2.0 * r1 * sqr(k.w) - 2.0 * r2 * k.omega * k.w) * invS;
    const double D = 2.0 * k.gp * k.omega * invS;
    return {A * t.c1 + B * t.s1, A * t.s1 - B * t.c1, C * t.c2 + D * t.s2,
            C * t.s2 - D * t.c2};
}

std::pair<double, double> metric_coefficients(const TorusParams& params,
                                              const GeneratorConfig& cfg, ParamPoint u) {
    const Core k = make_core(params, cfg, u);
    const double a = params.a();
    return {a * k.p1 / k.d, a * k.p2 / k.d};
}

std::pair<double, double> principal_curvatures(const TorusParams& params,
                                               const GeneratorConfig& cfg, ParamPoint u) {
    const Core k = make_core(params, cfg, u);
    if (!(std::abs(margin_of(k)) > kRegularityEps))
        fail(Errc::singular_point, "shape eigenvalues undefined: |margin| <= regularity bound");
    return {k.num1 / k.den1, k.num2 / k.den2};
}

double singularity_margin(const TorusParams& params, const GeneratorConfig& cfg,
                          ParamPoint u) {
    return margin_of(make_core(params, cfg, u));
}

Vec4 sphere_congruence_point(const TorusParams& params, const GeneratorConfig& cfg,
                             ParamPoint u) {
    const Core k = make_core(params, cfg, u);
    const TorusFrame fr = torus_frame(params, u);
    const double ct = std::cos(k.theta), st = std::sin(k.theta);
    return ct * fr.x + st * fr.n;
}

double congruence_shift_check(const TorusParams& params, const GeneratorConfig& cfg,
                              ParamPoint u) {
    if (cfg.family != Family::general)
        fail(Errc::constraint_violated, "congruence check requires a general-family config");
    const CanonicalForm cf =
        cfg.canonical ? *cfg.canonical : canonical_form(params, cfg);
    if (cf.family == Family::exp)
        fail(Errc::constraint_violated,
             "config reduces to the exp family; no shift reduction applies");
    if (cf.mirrored)
        fail(Errc::constraint_violated,
             "f and g carry opposite signs relative to the canonical pair");

    const double sc = std::sqrt(cfg.c);
    GeneratorConfig canon;
    canon.c = cfg.c;
    canon.family = cf.family;

    const ParamPoint shifted{u.u1 + cf.shift_a / (params.r2 * sc),
                             u.u2 + cf.shift_b / (params.r1 * sc)};
    const Vec4 lhs = transformed_point(params, cfg, u);
    // Parameter shifts (t, s) on the canonical surface act as the ambient
    // rotation by (r2 t, r1 s); undoing the shifts above rotates by
    // (-A2/sqrt c, -B2/sqrt c).
    const Vec4 rhs = rotate_torus(-cf.shift_a / sc, -cf.shift_b / sc,
                                  transformed_point(params, canon, shifted));
    return max_abs_diff(lhs, rhs);
}

EvalRecord eval_record(const TorusParams& params, const GeneratorConfig& cfg, ParamPoint u,
                       double regularity_eps) {
    const Core k = make_core(params, cfg, u);
    EvalRecord rec;
    rec.point = u;
    rec.frame = torus_frame(params, u);
    rec.scalars = bundle_from(k);
    rec.xt = point_from_core(params, k, u);
    rec.nt = rec.frame.n + (2.0 * k.w / k.s) * combo_u(k, rec.frame);
    const double a = params.a();
    rec.psi1 = a * k.p1 / k.d;
    rec.psi2 = a * k.p2 / k.d;
    rec.margin = margin_of(k);
    rec.regular = std::isfinite(rec.margin) && std::abs(rec.margin) > regularity_eps &&
                  all_finite(rec.xt) && all_finite(rec.nt);
    rec.lt1 = k.num1 / k.den1;
    rec.lt2 = k.num2 / k.den2;
    return rec;
}

}  // namespace flatsurf
