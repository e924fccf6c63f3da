// flatsurf: construct, verify, and export flat surfaces in S^3 obtained by
// Ribaucour transformations of the Clifford torus.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flatsurf/presets.hpp"
#include "flatsurf/run.hpp"

namespace {

using namespace flatsurf;
namespace fs = std::filesystem;

struct Flags {
    std::string preset, config_path, grid, projection, pre_rotate;
    std::string format = "obj", output = "out";
    double mask_threshold = 0.0, fd_step = 0.0;
    int threads = 0;
    long long samples = 0;
    std::vector<std::string> checks;
    std::string resolved_name = "surface";

    CLI::Option *preset_opt = nullptr, *config_opt = nullptr, *grid_opt = nullptr,
                *projection_opt = nullptr, *pre_rotate_opt = nullptr, *mask_opt = nullptr,
                *fd_opt = nullptr, *threads_opt = nullptr, *samples_opt = nullptr,
                *output_opt = nullptr;
};

void add_common(CLI::App* cmd, Flags& f) {
    f.preset_opt = cmd->add_option("--preset", f.preset,
                                   "named preset: fig1, fig2, fig3a, fig3b, fig4a, fig4b");
    f.config_opt = cmd->add_option("--config", f.config_path, "JSON config file");
    f.preset_opt->excludes(f.config_opt);
    f.grid_opt = cmd->add_option("--grid", f.grid, "u1min,u1max,u2min,u2max,n1,n2");
    f.projection_opt = cmd->add_option("--projection", f.projection, "stereographic or none");
    f.pre_rotate_opt =
        cmd->add_option("--pre-rotate", f.pre_rotate, "theta,phi rotation before projecting");
    f.mask_opt = cmd->add_option("--mask-threshold", f.mask_threshold,
                                 "mask vertices with |margin| at or below this");
    f.fd_opt = cmd->add_option("--fd-step", f.fd_step, "finite-difference step");
    f.threads_opt = cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
    f.samples_opt =
        cmd->add_option("--samples", f.samples, "algebraic sample count for the verify suite");
}

void apply_grid_flag(const std::string& s, GridSpec& g) {
    double a, b, c, d;
    int n1, n2, consumed = 0;
    if (std::sscanf(s.c_str(), " %lf , %lf , %lf , %lf , %d , %d %n", &a, &b, &c, &d, &n1, &n2,
                    &consumed) != 6 ||
        s.c_str()[consumed] != '\0')
        fail(Errc::parse_error, "--grid expects u1min,u1max,u2min,u2max,n1,n2");
    g = GridSpec{a, b, c, d, n1, n2};
}

void apply_pre_rotate_flag(const std::string& s, ProjectionSpec& p) {
    double theta, phi;
    int consumed = 0;
    if (std::sscanf(s.c_str(), " %lf , %lf %n", &theta, &phi, &consumed) != 2 ||
        s.c_str()[consumed] != '\0')
        fail(Errc::parse_error, "--pre-rotate expects theta,phi");
    p.pre_rotate_theta = theta;
    p.pre_rotate_phi = phi;
}

ProjectionKind parse_projection(const std::string& s) {
    if (s == "stereographic") return ProjectionKind::stereographic;
    if (s == "none") return ProjectionKind::none;
    fail(Errc::parse_error, "--projection must be stereographic or none");
}

MeshFormat parse_format(const std::string& s) {
    if (s == "obj") return MeshFormat::obj;
    if (s == "json") return MeshFormat::json;
    if (s == "both") return MeshFormat::both;
    fail(Errc::parse_error, "--format must be obj, json, or both");
}

RunConfig resolve(Flags& f) {
    RunConfig c;
    if (f.preset_opt->count()) {
        const Preset* p = find_preset(f.preset);
        if (!p) fail(Errc::parse_error, "unknown preset \"" + f.preset + "\"");
        c = p->config;
        f.resolved_name = p->name;
    }
    if (f.config_opt->count()) {
        std::ifstream is(f.config_path);
        if (!is) fail(Errc::parse_error, "cannot read config file " + f.config_path);
        std::stringstream ss;
        ss << is.rdbuf();
        c = parse_config_json(ss.str());
        const std::string stem = fs::path(f.config_path).stem().string();
        f.resolved_name = stem.empty() ? "surface" : stem;
    }
    if (f.grid_opt->count()) apply_grid_flag(f.grid, c.grid);
    if (f.projection_opt->count()) c.projection.kind = parse_projection(f.projection);
    if (f.pre_rotate_opt->count()) apply_pre_rotate_flag(f.pre_rotate, c.projection);
    if (f.mask_opt->count()) c.mask_threshold = f.mask_threshold;
    if (f.fd_opt->count()) c.fd.step = f.fd_step;
    if (f.threads_opt->count()) c.threads = f.threads;
    if (f.samples_opt->count()) c.samples = f.samples;

    // Route the merged config through the canonical serialization so flag
    // combinations face exactly the validation a config file would.
    const int threads = c.threads;
    c = parse_config_json(config_json(c));
    c.threads = threads;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat surfaces in S^3 from Ribaucour transformations of the Clifford torus"};
    app.require_subcommand(1);

    CLI::App* gen = app.add_subcommand("generate", "sample a surface and export mesh files");
    CLI::App* ver = app.add_subcommand("verify", "run the residual report against the config");
    CLI::App* inf = app.add_subcommand("info", "print the resolved config and (0,0) record");

    Flags fg, fv, fi;
    add_common(gen, fg);
    add_common(ver, fv);
    add_common(inf, fi);
    fg.output_opt = gen->add_option("-o,--output", fg.output, "output directory (default out)");
    gen->add_option("--format", fg.format, "obj, json, or both (default obj)");
    fv.output_opt = ver->add_option("-o,--output", fv.output,
                                    "directory for <name>.report.json (omitted otherwise)");
    ver->add_option("--check", fv.checks, "run only the named checks (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            const MeshFormat fmt = parse_format(fg.format);
            const RunConfig c = resolve(fg);
            return run_generate(c, fg.resolved_name, fs::path(fg.output), fmt, std::cout);
        }
        if (ver->parsed()) {
            const RunConfig c = resolve(fv);
            std::optional<fs::path> outdir;
            if (fv.output_opt->count()) outdir = fs::path(fv.output);
            return run_verify(c, fv.resolved_name, outdir, fv.checks, std::cout);
        }
        const RunConfig c = resolve(fi);
        std::cout << info_json(c);
        return 0;
    } catch (const flatsurf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_validation_error(e.code()) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
