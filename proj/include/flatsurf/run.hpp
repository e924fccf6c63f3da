#pragma once

// Run configuration (JSON file + flag overrides) and the three CLI verbs:
// generate (mesh export), verify (residual report), info (anchor record).

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "flatsurf/checks.hpp"
#include "flatsurf/mesh.hpp"

namespace flatsurf {

struct RunConfig {
    TorusParams params{0.6, 0.8};
    GeneratorConfig cfg;
    GridSpec grid{-2.0, 2.0, -2.5, 2.5, 101, 101};
    ProjectionSpec projection;
    double mask_threshold = kMaskThresholdDefault;
    FDConfig fd;
    long long samples = 10000;  // algebraic sample count; FD and curvature use /10, /100
    int threads = 0;            // 0 = library default
};

enum class MeshFormat { obj, json, both };

// Strict parse of the JSON config schema:
//   { "r1", "c", "family", "a1", "a2", "b1", "b2", "eps1", "eps2",
//     "grid": {"u1": [min,max], "u2": [min,max], "n": [n1,n2]},
//     "projection": {"kind", "pre_rotate": [theta,phi], "pole_tol"},
//     "mask_threshold", "fd_step", "samples" }
// Unknown keys are rejected (except "record", which `info` appends so its
// output round-trips as a config).  Values are validated on top of parsing.
RunConfig parse_config_json(const std::string& text);

// Canonical serialization; parse_config_json(config_json(c)) == c.
std::string config_json(const RunConfig& c);

// Writes <name>.obj (projected) and/or <name>.mesh.json plus
// <name>.summary.json into outdir.  Returns 0.
int run_generate(const RunConfig& c, const std::string& name,
                 const std::filesystem::path& outdir, MeshFormat format, std::ostream& log);

// Runs the residual suite and the completeness scan, logs one line per
// check, writes <name>.report.json when outdir is given.  Returns 0 when
// every check passes, 3 otherwise.
int run_verify(const RunConfig& c, const std::string& name,
               const std::optional<std::filesystem::path>& outdir,
               const std::vector<std::string>& only, std::ostream& log);

// Resolved config plus the evaluated record at (0,0), as JSON.
std::string info_json(const RunConfig& c);

}  // namespace flatsurf
