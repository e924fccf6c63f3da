#include "flatsurf/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <string_view>

#include "json.hpp"

namespace flatsurf {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

[[noreturn]] void parse_fail(const std::string& msg) { fail(Errc::parse_error, msg); }

void expect_keys(const json& obj, const char* what,
                 std::initializer_list<std::string_view> allowed) {
    for (const auto& item : obj.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](std::string_view k) { return k == item.key(); });
        if (!known)
            parse_fail("unknown key \"" + item.key() + "\" in " + what);
    }
}

double num_at(const json& obj, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_number()) parse_fail(std::string("\"") + key + "\" must be a number");
    return v.get<double>();
}

long long int_at(const json& obj, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) parse_fail(std::string("\"") + key + "\" must be an integer");
    return v.get<long long>();
}

std::string str_at(const json& obj, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_string()) parse_fail(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

std::pair<double, double> num_pair_at(const json& obj, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        parse_fail(std::string("\"") + key + "\" must be an array of two numbers");
    return {v[0].get<double>(), v[1].get<double>()};
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::cosh_sinh, Family::sinh_cosh, Family::exp, Family::general})
        if (name == family_name(f)) return f;
    parse_fail("unknown family \"" + name +
               "\" (expected cosh-sinh, sinh-cosh, exp, or general)");
}

ordered_json vec_json(const Vec4& p) { return ordered_json{p[0], p[1], p[2], p[3]}; }

ordered_json config_obj(const RunConfig& c) {
    ordered_json j;
    j["r1"] = c.params.r1;
    j["c"] = c.cfg.c;
    j["family"] = family_name(c.cfg.family);
    j["a1"] = c.cfg.a1;
    j["a2"] = c.cfg.a2;
    j["b1"] = c.cfg.b1;
    j["b2"] = c.cfg.b2;
    j["eps1"] = c.cfg.eps1;
    j["eps2"] = c.cfg.eps2;
    j["grid"] = {{"u1", {c.grid.u1_min, c.grid.u1_max}},
                 {"u2", {c.grid.u2_min, c.grid.u2_max}},
                 {"n", {c.grid.n1, c.grid.n2}}};
    j["projection"] = {{"kind", projection_kind_name(c.projection.kind)},
                       {"pre_rotate", {c.projection.pre_rotate_theta, c.projection.pre_rotate_phi}},
                       {"pole_tol", c.projection.pole_tol}};
    j["mask_threshold"] = c.mask_threshold;
    j["fd_step"] = c.fd.step;
    j["samples"] = c.samples;
    return j;
}

ordered_json check_row_obj(const CheckRow& r) {
    ordered_json j;
    j["name"] = r.name;
    j["count"] = r.count;
    j["skipped"] = r.skipped;
    j["max_abs"] = r.max_abs;
    j["mean_abs"] = r.mean_abs;
    j["argmax"] = {r.argmax.u1, r.argmax.u2};
    j["tolerance"] = r.tolerance;
    if (r.exceeds) j["exceeds"] = true;
    if (!r.status.empty()) j["status"] = r.status;
    j["pass"] = r.pass;
    return j;
}

ordered_json scan_obj(const CompletenessScan& s) {
    ordered_json j;
    j["min_abs_psi1"] = {{"value", s.min_abs_psi1}, {"at", {s.argmin_psi1.u1, s.argmin_psi1.u2}}};
    j["min_abs_psi2"] = {{"value", s.min_abs_psi2}, {"at", {s.argmin_psi2.u1, s.argmin_psi2.u2}}};
    j["max_boundary_dev"] = s.max_boundary_dev;
    j["diagonal_dev"] = s.diagonal_dev;
    ordered_json roots = ordered_json::array();
    for (const ParamPoint& r : s.margin_roots) roots.push_back({r.u1, r.u2});
    j["margin_roots"] = std::move(roots);
    j["singular_samples"] = s.singular_samples;
    j["overflow_samples"] = s.overflow_samples;
    return j;
}

void write_file(const fs::path& path, const std::string& bytes, std::ostream& log) {
    std::ofstream os(path, std::ios::binary);
    if (!os) fail(Errc::io_failure, "cannot open " + path.string() + " for writing");
    os << bytes;
    os.flush();
    if (!os) fail(Errc::io_failure, "failed writing " + path.string());
    log << "wrote " << path.string() << "\n";
}

void ensure_outdir(const fs::path& outdir) {
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec) fail(Errc::io_failure, "cannot create output directory " + outdir.string());
}

}  // namespace

RunConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) parse_fail("config must be a JSON object");
    expect_keys(j, "config",
                {"r1", "c", "family", "a1", "a2", "b1", "b2", "eps1", "eps2", "grid",
                 "projection", "mask_threshold", "fd_step", "samples", "record"});

    RunConfig c;
    if (j.contains("r1")) c.params = TorusParams::from_r1(num_at(j, "r1"));
    if (j.contains("c")) c.cfg.c = num_at(j, "c");
    if (j.contains("family")) c.cfg.family = family_from_name(str_at(j, "family"));
    if (j.contains("a1")) c.cfg.a1 = num_at(j, "a1");
    if (j.contains("a2")) c.cfg.a2 = num_at(j, "a2");
    if (j.contains("b1")) c.cfg.b1 = num_at(j, "b1");
    if (j.contains("b2")) c.cfg.b2 = num_at(j, "b2");
    if (j.contains("eps1")) c.cfg.eps1 = (int)int_at(j, "eps1");
    if (j.contains("eps2")) c.cfg.eps2 = (int)int_at(j, "eps2");

    if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (!g.is_object()) parse_fail("\"grid\" must be an object");
        expect_keys(g, "\"grid\"", {"u1", "u2", "n"});
        if (g.contains("u1")) std::tie(c.grid.u1_min, c.grid.u1_max) = num_pair_at(g, "u1");
        if (g.contains("u2")) std::tie(c.grid.u2_min, c.grid.u2_max) = num_pair_at(g, "u2");
        if (g.contains("n")) {
            const json& n = g.at("n");
            if (!n.is_array() || n.size() != 2 || !n[0].is_number_integer() ||
                !n[1].is_number_integer())
                parse_fail("\"n\" must be an array of two integers");
            c.grid.n1 = n[0].get<int>();
            c.grid.n2 = n[1].get<int>();
        }
    }

    if (j.contains("projection")) {
        const json& p = j.at("projection");
        if (!p.is_object()) parse_fail("\"projection\" must be an object");
        expect_keys(p, "\"projection\"", {"kind", "pre_rotate", "pole_tol"});
        if (p.contains("kind")) {
            const std::string kind = str_at(p, "kind");
            if (kind == "stereographic")
                c.projection.kind = ProjectionKind::stereographic;
            else if (kind == "none")
                c.projection.kind = ProjectionKind::none;
            else
                parse_fail("projection kind must be \"stereographic\" or \"none\"");
        }
        if (p.contains("pre_rotate"))
            std::tie(c.projection.pre_rotate_theta, c.projection.pre_rotate_phi) =
                num_pair_at(p, "pre_rotate");
        if (p.contains("pole_tol")) c.projection.pole_tol = num_at(p, "pole_tol");
    }

    if (j.contains("mask_threshold")) c.mask_threshold = num_at(j, "mask_threshold");
    if (j.contains("fd_step")) c.fd.step = num_at(j, "fd_step");
    if (j.contains("samples")) c.samples = int_at(j, "samples");

    // Semantic validation on top of the syntactic parse.
    c.cfg = validate_config(c.params, c.cfg);
    validate_grid(c.grid);
    if (!(std::isfinite(c.mask_threshold) && c.mask_threshold >= 0.0))
        fail(Errc::out_of_range, "mask_threshold must be finite and >= 0");
    if (!(std::isfinite(c.fd.step) && c.fd.step > 0.0))
        fail(Errc::out_of_range, "fd_step must be finite and > 0");
    if (!(std::isfinite(c.projection.pole_tol) && c.projection.pole_tol > 0.0))
        fail(Errc::out_of_range, "pole_tol must be finite and > 0");
    if (!std::isfinite(c.projection.pre_rotate_theta) ||
        !std::isfinite(c.projection.pre_rotate_phi))
        fail(Errc::out_of_range, "pre_rotate angles must be finite");
    if (c.samples < 1) fail(Errc::out_of_range, "samples must be >= 1");
    return c;
}

std::string config_json(const RunConfig& c) { return config_obj(c).dump(2) + "\n"; }

int run_generate(const RunConfig& c, const std::string& name, const fs::path& outdir,
                 MeshFormat format, std::ostream& log) {
    const SampledField field = sample_grid(c.params, c.cfg, c.grid, c.mask_threshold, c.threads);
    const SurfaceMesh mesh = tessellate(field, c.projection);

    ensure_outdir(outdir);
    if (format == MeshFormat::obj || format == MeshFormat::both)
        write_file(outdir / (name + ".obj"), obj_string(mesh), log);
    if (format == MeshFormat::json || format == MeshFormat::both)
        write_file(outdir / (name + ".mesh.json"), mesh_json_string(mesh, field), log);

    const long long nverts = (long long)mesh.vertices4.size();
    const long long masked = mesh.masked_count();
    const int components = component_count(mesh);
    ordered_json s;
    s["name"] = name;
    s["vertices"] = nverts;
    s["unmasked_vertices"] = nverts - masked;
    s["faces"] = (long long)mesh.faces.size();
    s["masked"] = masked;
    s["masked_fraction"] = (double)masked / (double)nverts;
    s["singular_masked"] = field.singular_count;
    s["overflow_masked"] = field.overflow_count;
    s["pole_masked"] = mesh.pole_count;
    s["components"] = components;
    write_file(outdir / (name + ".summary.json"), s.dump(2) + "\n", log);

    char pct[32];
    std::snprintf(pct, sizeof pct, "%.2f%%", 100.0 * (double)masked / (double)nverts);
    log << "generate " << name << ": " << nverts << " vertices, " << mesh.faces.size()
        << " faces, " << masked << " masked (" << pct << "), " << components
        << " component(s)\n";
    return 0;
}

int run_verify(const RunConfig& c, const std::string& name,
               const std::optional<fs::path>& outdir, const std::vector<std::string>& only,
               std::ostream& log) {
    SuiteConfig sc;
    sc.rect = Rect{c.grid.u1_min, c.grid.u1_max, c.grid.u2_min, c.grid.u2_max};
    sc.n_algebraic = c.samples;
    sc.n_fd = std::max<long long>(1, c.samples / 10);
    sc.n_curvature = std::max<long long>(1, c.samples / 100);
    sc.fd = c.fd;
    sc.margin_skip = c.mask_threshold;
    sc.threads = c.threads;
    sc.only = only;

    const ResidualReport report = run_suite(c.params, c.cfg, sc);
    const CompletenessScan scan = completeness_scan(c.params, c.cfg, c.grid, c.mask_threshold);

    for (const CheckRow& r : report.checks) {
        log << (r.pass ? "PASS " : "FAIL ") << r.name << ": n=" << r.count
            << " skipped=" << r.skipped << " max=" << r.max_abs << " at (" << r.argmax.u1
            << ", " << r.argmax.u2 << ") " << (r.exceeds ? "required > " : "tolerance ")
            << r.tolerance;
        if (!r.status.empty()) log << " [" << r.status << "]";
        log << "\n";
    }
    log << "scan: min|psi1| = " << scan.min_abs_psi1 << " at (" << scan.argmin_psi1.u1 << ", "
        << scan.argmin_psi1.u2 << "), min|psi2| = " << scan.min_abs_psi2 << " at ("
        << scan.argmin_psi2.u1 << ", " << scan.argmin_psi2.u2 << ")\n";
    log << "scan: boundary dev = " << scan.max_boundary_dev
        << ", margin roots = " << scan.margin_roots.size()
        << ", singular samples = " << scan.singular_samples
        << ", overflow samples = " << scan.overflow_samples << "\n";

    if (outdir) {
        ensure_outdir(*outdir);
        ordered_json j;
        j["name"] = name;
        j["config"] = config_obj(c);
        ordered_json checks = ordered_json::array();
        for (const CheckRow& r : report.checks) checks.push_back(check_row_obj(r));
        j["checks"] = std::move(checks);
        j["scan"] = scan_obj(scan);
        j["pass"] = report.all_pass();
        write_file(*outdir / (name + ".report.json"), j.dump(2) + "\n", log);
    }

    const bool ok = report.all_pass();
    log << "verify " << name << ": " << (ok ? "PASS" : "FAIL") << " (" << report.checks.size()
        << " checks)\n";
    return ok ? 0 : 3;
}

std::string info_json(const RunConfig& c) {
    ordered_json j = config_obj(c);
    const ParamPoint origin{0.0, 0.0};
    const EvalRecord rec = eval_record(c.params, c.cfg, origin);

    ordered_json r;
    r["point"] = {origin.u1, origin.u2};
    r["x"] = vec_json(rec.frame.x);
    r["e1"] = vec_json(rec.frame.e1);
    r["e2"] = vec_json(rec.frame.e2);
    r["n"] = vec_json(rec.frame.n);
    r["scalars"] = {{"f", rec.scalars.f},       {"fp", rec.scalars.fp},
                    {"g", rec.scalars.g},       {"gp", rec.scalars.gp},
                    {"omega", rec.scalars.omega}, {"omega1", rec.scalars.omega1},
                    {"omega2", rec.scalars.omega2}, {"w", rec.scalars.w},
                    {"s", rec.scalars.s},       {"t1", rec.scalars.t1},
                    {"t2", rec.scalars.t2},     {"theta", rec.scalars.theta},
                    {"hyp1", rec.scalars.hyp1}, {"hyp2", rec.scalars.hyp2}};
    r["xt"] = vec_json(rec.xt);
    r["nt"] = vec_json(rec.nt);
    r["psi1"] = rec.psi1;
    r["psi2"] = rec.psi2;
    r["lt1"] = rec.lt1;
    r["lt2"] = rec.lt2;
    r["margin"] = rec.margin;
    r["regular"] = rec.regular;
    r["congruence_point"] = vec_json(sphere_congruence_point(c.params, c.cfg, origin));
    j["record"] = r;
    return j.dump(2) + "\n";
}

}  // namespace flatsurf
