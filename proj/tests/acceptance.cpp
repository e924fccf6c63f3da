// Acceptance gate: ten end-to-end criteria, one [PASS]/[FAIL] line each.
// Exit code 0 only when every criterion holds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "flatsurf/checks.hpp"
#include "flatsurf/mesh.hpp"
#include "flatsurf/presets.hpp"
#include "flatsurf/scan.hpp"

using namespace flatsurf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

GeneratorConfig family_config(Family fam, double c) {
    GeneratorConfig cfg;
    cfg.c = c;
    cfg.family = fam;
    return cfg;
}

Rect rect_for(double c) {
    if (c == 4.0) return {-2.0, 2.0, -2.5, 2.5};
    if (c == 1.0) return {-4.0, 4.0, -4.0, 4.0};
    return {-60.0, 60.0, -60.0, 60.0};
}

// Deterministic sample points with margin above a floor.
std::vector<ParamPoint> regular_points(const TorusParams& params, const GeneratorConfig& cfg,
                                       const Rect& rect, long long n, double min_margin) {
    Sobol2D seq;
    std::vector<ParamPoint> pts;
    for (long long tries = 0; (long long)pts.size() < n && tries < 100 * n; ++tries) {
        const ParamPoint u = seq.next_in(rect.u1_min, rect.u1_max, rect.u2_min, rect.u2_max);
        try {
            if (std::abs(singularity_margin(params, cfg, u)) > min_margin) pts.push_back(u);
        } catch (const Error&) {
        }
    }
    return pts;
}

struct InvariantMaxima {
    long long points = 0;
    double pos = 0, nrm = 0, orth = 0, lt = 0, flat = 0, sdef = 0, cong = 0;
    double elapsed = 0;
};

// Criteria 1 and 2 share one deterministic sampling pass: three generator
// families crossed with three (r1, c) choices, 1200 points each.
InvariantMaxima invariant_sweep() {
    const auto t0 = std::chrono::steady_clock::now();
    InvariantMaxima m;
    const std::pair<double, double> regimes[3] = {{0.6, 4.0}, {0.6, 0.001}, {0.5, 1.0}};
    const Family families[3] = {Family::cosh_sinh, Family::sinh_cosh, Family::exp};
    for (const auto& [r1, c] : regimes) {
        const TorusParams tp = TorusParams::from_r1(r1);
        const Rect rect = rect_for(c);
        for (Family fam : families) {
            const GeneratorConfig cfg = family_config(fam, c);
            Sobol2D seq;
            for (int i = 0; i < 1200; ++i) {
                const ParamPoint u =
                    seq.next_in(rect.u1_min, rect.u1_max, rect.u2_min, rect.u2_max);
                const EvalRecord rec = eval_record(tp, cfg, u);
                const ScalarBundle& sb = rec.scalars;
                ++m.points;
                m.pos = std::max(m.pos, std::abs(norm2(rec.xt) - 1.0));
                m.nrm = std::max(m.nrm, std::abs(norm2(rec.nt) - 1.0));
                m.orth = std::max(m.orth, std::abs(dot(rec.xt, rec.nt)));
                if (std::abs(rec.margin) > kMaskThresholdDefault)
                    m.lt = std::max(m.lt, std::abs(rec.lt1 * rec.lt2 + 1.0));
                const double o2w2 = sb.omega * sb.omega + sb.w * sb.w;
                const double o1o2 = sb.omega1 * sb.omega1 + sb.omega2 * sb.omega2;
                m.flat = std::max(m.flat, std::abs(o1o2 - c * o2w2) / sb.s);
                m.sdef = std::max(m.sdef, std::abs(sb.s - (1.0 + c) * o2w2) / sb.s);
                const double ct = std::cos(sb.theta), st = std::sin(sb.theta);
                m.cong = std::max(
                    m.cong, max_abs_diff(ct * rec.frame.x + st * rec.frame.n,
                                         ct * rec.xt + st * rec.nt));
            }
        }
    }
    m.elapsed = seconds_since(t0);
    return m;
}

Outcome criterion_3() {
    const TorusParams tp = TorusParams::from_r1(0.6);
    const GeneratorConfig cfg = family_config(Family::cosh_sinh, 4.0);
    const EvalRecord rec = eval_record(tp, cfg, {0.0, 0.0});
    const Vec4 xt{0.36, 0.0, 0.8, -0.48};
    const Vec4 nt{-0.48, 0.0, 0.6, 0.64};
    const Vec4 cp{0.0, 0.0, 1.0, 0.0};
    double worst = 0.0;
    worst = std::max(worst, max_abs_diff(rec.xt, xt));
    worst = std::max(worst, max_abs_diff(rec.nt, nt));
    worst = std::max(worst, std::abs(rec.scalars.omega - 0.48));
    worst = std::max(worst, std::abs(rec.scalars.w - 0.64));
    worst = std::max(worst, std::abs(rec.scalars.s - 3.2));
    worst = std::max(worst, std::abs(rec.psi1 + 0.48));
    worst = std::max(worst, std::abs(rec.psi2 - 0.48));
    worst = std::max(worst, std::abs(rec.lt1 + 4.0 / 3.0));
    worst = std::max(worst, std::abs(rec.lt2 - 0.75));
    worst = std::max(worst, max_abs_diff(sphere_congruence_point(tp, cfg, {0.0, 0.0}), cp));
    return {worst <= 1e-13,
            fmt("closed-form anchor values at the origin (worst %.2e, bound 1e-13)", worst)};
}

Outcome criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const TorusParams tp = TorusParams::from_r1(0.6);
    const GeneratorConfig cfg = family_config(Family::cosh_sinh, 4.0);
    const auto pts = regular_points(tp, cfg, rect_for(4.0), 1000, kFdMarginSkip);
    if ((long long)pts.size() < 1000)
        return {false, fmt("only %lld usable FD points", (long long)pts.size())};

    double metric = 0, shape = 0, system = 0;
    long long used = 0;
    for (const ParamPoint& u : pts) {
        const auto surf = check_surface_point(tp, cfg, u);
        const auto sys = check_ribaucour_system(tp, cfg, u);
        if (!surf[0].value || !sys[0].value) continue;
        ++used;
        metric = std::max({metric, *surf[0].value, *surf[1].value, *surf[2].value});
        shape = std::max({shape, *surf[3].value, *surf[4].value, *surf[5].value,
                          *surf[6].value});
        for (const auto& r : sys) system = std::max(system, *r.value);
    }
    const double dt = seconds_since(t0);
    const bool pass = used >= 900 && metric < kTolFdFirst && shape < kTolFdShape &&
                      system < kTolFdFirst && dt < 10.0;
    return {pass, fmt("FD oracles at %lld regular points: metric %.2e < 1e-6, "
                      "second form %.2e < 1e-5, system %.2e < 1e-6 (%.1f s)",
                      used, metric, shape, system, dt)};
}

Outcome criterion_5() {
    double worst_k = 0, worst_lt = 0;
    for (const Preset& p : all_presets()) {
        const RunConfig& c = p.config;
        const Rect rect{c.grid.u1_min, c.grid.u1_max, c.grid.u2_min, c.grid.u2_max};
        const auto pts = regular_points(c.params, c.cfg, rect, 100, kFdMarginSkip);
        if ((long long)pts.size() < 100)
            return {false, fmt("preset %s: only %lld regular points", p.name.c_str(),
                               (long long)pts.size())};
        for (const ParamPoint& u : pts) {
            worst_k = std::max(worst_k, std::abs(gauss_curvature_fd(c.params, c.cfg, u)));
            const auto [l1, l2] = principal_curvatures(c.params, c.cfg, u);
            worst_lt = std::max(worst_lt, std::abs(l1 * l2 + 1.0));
        }
    }
    const bool pass = worst_k < kTolCurvatureFd && worst_lt <= 1e-12;
    return {pass, fmt("flatness per preset, 100 points each: |K| %.2e < 1e-4, "
                      "|1 + lt1 lt2| %.2e <= 1e-12",
                      worst_k, worst_lt)};
}

Outcome criterion_6() {
    const TorusParams tp = TorusParams::from_r1(0.6);
    GeneratorConfig base;
    base.c = 4.0;
    base.family = Family::general;
    base.a1 = std::cosh(0.7);
    base.a2 = std::sinh(0.7);
    base.b1 = (4.0 / 3.0) * std::sinh(-0.3);
    base.b2 = (4.0 / 3.0) * std::cosh(-0.3);
    GeneratorConfig scaled = base;
    scaled.a1 *= 2.0;
    scaled.a2 *= 2.0;
    scaled.b1 *= 2.0;
    scaled.b2 *= 2.0;

    const auto pts = regular_points(tp, validate_config(tp, base), rect_for(4.0), 1000,
                                    kMaskThresholdDefault);
    if ((long long)pts.size() < 1000)
        return {false, fmt("only %lld regular points", (long long)pts.size())};
    double worst = 0.0;
    for (const ParamPoint& u : pts) {
        worst = std::max(worst, congruence_shift_check(tp, base, u));
        worst = std::max(worst, congruence_shift_check(tp, scaled, u));
    }
    return {worst < 1e-10,
            fmt("general configs match their rotated canonical surfaces at 1000 "
                "points (max %.2e < 1e-10)",
                worst)};
}

Outcome criterion_7() {
    const TorusParams tp = TorusParams::from_r1(0.6);
    const GeneratorConfig cfg = family_config(Family::cosh_sinh, 4.0);
    const double target = std::asinh(3.0) / 1.2;

    const CompletenessScan scan = completeness_scan(tp, cfg, {-1.0, 1.0, 0.0, 2.0, 5, 41});
    double best = 1e9;
    for (const ParamPoint& r : scan.margin_roots)
        if (std::abs(r.u1) <= 1e-9) best = std::min(best, std::abs(r.u2 - target));
    if (!(best <= 1e-6)) return {false, fmt("root localization off by %.2e", best)};

    const SampledField field = sample_grid(tp, cfg, {-1.0, 1.0, 0.0, 2.0, 21, 21});
    const SurfaceMesh mesh = tessellate(field, {});
    bool has_pos = false, has_neg = false, uniform = true, banded = true;
    for (std::size_t k = 0; k < mesh.vertices4.size(); ++k) {
        if (!mesh.mask[k]) (std::signbit(mesh.attr.margin[k]) ? has_neg : has_pos) = true;
        if (std::abs(field.records[k].margin) <= field.mask_threshold && !mesh.mask[k])
            banded = false;
    }
    for (const auto& f : mesh.faces) {
        const bool sb = std::signbit(mesh.attr.margin[(std::size_t)f[0]]);
        for (long long id : f)
            uniform = uniform && !mesh.mask[(std::size_t)id] &&
                      std::signbit(mesh.attr.margin[(std::size_t)id]) == sb;
    }
    const bool pass = has_pos && has_neg && uniform && banded && !mesh.faces.empty();
    return {pass, fmt("singular curve localized to %.2e of asinh(3)/1.2; mesh faces "
                      "stay on one side of it",
                      best)};
}

Outcome criterion_8() {
    const TorusParams tp = TorusParams::from_r1(0.6);
    const GeneratorConfig cfg = family_config(Family::cosh_sinh, 4.0);
    const CompletenessScan scan = completeness_scan(tp, cfg, {-20.0, 20.0, -1.0, 1.0, 2, 3});
    const bool located = std::isfinite(scan.min_abs_psi1) && std::isfinite(scan.min_abs_psi2) &&
                         std::abs(scan.argmin_psi1.u1) == 20.0;
    const bool pass = scan.max_boundary_dev < kTolCompleteness && located;
    return {pass, fmt("| |psi_i(+-20, u2)| - r1 r2 | = %.2e < 1e-6 for u2 in {-1, 0, 1}; "
                      "min |psi_i| tracked with location",
                      scan.max_boundary_dev)};
}

Outcome criterion_9() {
    double worst_fraction = 0.0, worst_unit = 0.0, slowest = 0.0;
    for (const Preset& p : all_presets()) {
        const auto t0 = std::chrono::steady_clock::now();
        const RunConfig& c = p.config;
        const SampledField f1 = sample_grid(c.params, c.cfg, c.grid, c.mask_threshold,
                                            c.threads);
        const SurfaceMesh m1 = tessellate(f1, c.projection);
        const std::string obj1 = obj_string(m1);
        const std::string json1 = mesh_json_string(m1, f1);

        const SampledField f2 = sample_grid(c.params, c.cfg, c.grid, c.mask_threshold,
                                            c.threads);
        const SurfaceMesh m2 = tessellate(f2, c.projection);
        if (obj_string(m2) != obj1 || mesh_json_string(m2, f2) != json1)
            return {false, fmt("preset %s: repeated export differs", p.name.c_str())};

        if (m1.faces.empty()) return {false, fmt("preset %s: no faces", p.name.c_str())};
        for (std::size_t k = 0; k < m1.vertices4.size(); ++k) {
            if (!all_finite(m1.vertices4[k]))
                return {false, fmt("preset %s: non-finite vertex", p.name.c_str())};
            if (!m1.mask[k])
                worst_unit = std::max(worst_unit, std::abs(norm2(m1.vertices4[k]) - 1.0));
        }
        const double fraction =
            (double)m1.masked_count() / (double)m1.vertices4.size();
        worst_fraction = std::max(worst_fraction, fraction);
        slowest = std::max(slowest, seconds_since(t0));
    }
    const bool pass = worst_fraction < 0.1 && worst_unit < 1e-9 && slowest < 30.0;
    return {pass, fmt("six 400x400 presets export deterministically: masked fraction "
                      "<= %.2e < 0.1, unit-sphere error %.2e, slowest %.1f s < 30 s",
                      worst_fraction, worst_unit, slowest)};
}

Outcome criterion_10(double crit1_normal_max) {
    const TorusParams tp = TorusParams::from_r1(0.6);
    const GeneratorConfig cfg = family_config(Family::cosh_sinh, 4.0);
    const double gap =
        std::abs(norm2(transformed_normal_variant(tp, cfg, {0.0, 0.0})) - 1.0);
    const double good =
        std::abs(norm2(transformed_normal(tp, cfg, {0.0, 0.0})) - 1.0);
    const bool pass = gap > kVariantGapMin && good < 1e-11 && crit1_normal_max < 1e-11;
    return {pass, fmt("the alternative printed normal misses unit length by %.6f while "
                      "the adopted form stays within %.2e",
                      gap, good)};
}

int emit(int n, const Outcome& o) {
    std::printf("[%s] criterion %d: %s\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str());
    return o.pass ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;

    const InvariantMaxima m = invariant_sweep();
    const double worst16 =
        std::max({m.pos, m.nrm, m.orth, m.lt, m.flat, m.sdef});
    Outcome c1{m.points >= 10000 && worst16 < 1e-11 && m.elapsed < 5.0,
               fmt("surface/normal/curvature/flatness invariants on %lld points across "
                   "nine family-parameter configs (max %.2e < 1e-11, %.2f s < 5 s)",
                   m.points, worst16, m.elapsed)};
    failures += emit(1, c1);

    Outcome c2{m.cong < 1e-11,
               fmt("sphere-congruence identity on the same samples (max %.2e < 1e-11)",
                   m.cong)};
    failures += emit(2, c2);

    failures += emit(3, criterion_3());
    failures += emit(4, criterion_4());
    failures += emit(5, criterion_5());
    failures += emit(6, criterion_6());
    failures += emit(7, criterion_7());
    failures += emit(8, criterion_8());
    failures += emit(9, criterion_9());
    failures += emit(10, criterion_10(m.nrm));

    return failures == 0 ? 0 : 1;
}
