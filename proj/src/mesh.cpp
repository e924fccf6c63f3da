#include "flatsurf/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "flatsurf/generators.hpp"

namespace flatsurf {

namespace {

double sanitized(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace

long long SurfaceMesh::masked_count() const {
    long long n = 0;
    for (std::uint8_t m : mask) n += m;
    return n;
}

SurfaceMesh tessellate(const SampledField& field, const ProjectionSpec& projection) {
    const GridSpec& g = field.grid;
    const std::size_t n = field.records.size();
    SurfaceMesh mesh;
    mesh.mask = field.mask;
    mesh.vertices4.assign(n, Vec4{});
    mesh.attr.psi1.assign(n, 0.0);
    mesh.attr.psi2.assign(n, 0.0);
    mesh.attr.lt1.assign(n, 0.0);
    mesh.attr.lt2.assign(n, 0.0);
    mesh.attr.margin.assign(n, 0.0);

    for (std::size_t k = 0; k < n; ++k) {
        const EvalRecord& rec = field.records[k];
        mesh.vertices4[k] = rec.xt;
        mesh.attr.psi1[k] = rec.psi1;
        mesh.attr.psi2[k] = rec.psi2;
        mesh.attr.lt1[k] = rec.lt1;
        mesh.attr.lt2[k] = rec.lt2;
        mesh.attr.margin[k] = rec.margin;
        if (mesh.mask[k]) {
            // Masked vertices may carry non-finite quotients; zero them so
            // every serialization stays valid.
            for (int c = 0; c < 4; ++c) mesh.vertices4[k][c] = sanitized(mesh.vertices4[k][c]);
            mesh.attr.psi1[k] = sanitized(mesh.attr.psi1[k]);
            mesh.attr.psi2[k] = sanitized(mesh.attr.psi2[k]);
            mesh.attr.lt1[k] = sanitized(mesh.attr.lt1[k]);
            mesh.attr.lt2[k] = sanitized(mesh.attr.lt2[k]);
            mesh.attr.margin[k] = sanitized(mesh.attr.margin[k]);
        }
    }

    if (projection.kind == ProjectionKind::stereographic) {
        mesh.projected = true;
        mesh.vertices3.assign(n, Vec3{});
        for (std::size_t k = 0; k < n; ++k) {
            if (mesh.mask[k]) continue;
            try {
                mesh.vertices3[k] = project_stereographic(mesh.vertices4[k], projection);
            } catch (const Error& e) {
                if (e.code() != Errc::near_pole) throw;
                mesh.mask[k] = 1;
                ++mesh.pole_count;
            }
        }
    }

    // A cell becomes two triangles only when all four corners survived the
    // masking and the margin keeps one sign across it, so no face bridges a
    // singular curve.
    for (int j = 0; j + 1 < g.n2; ++j) {
        for (int i = 0; i + 1 < g.n1; ++i) {
            const long long k00 = g.index(i, j), k10 = g.index(i + 1, j);
            const long long k01 = g.index(i, j + 1), k11 = g.index(i + 1, j + 1);
            if (mesh.mask[(std::size_t)k00] || mesh.mask[(std::size_t)k10] ||
                mesh.mask[(std::size_t)k01] || mesh.mask[(std::size_t)k11])
                continue;
            const bool sb = std::signbit(mesh.attr.margin[(std::size_t)k00]);
            if (std::signbit(mesh.attr.margin[(std::size_t)k10]) != sb ||
                std::signbit(mesh.attr.margin[(std::size_t)k01]) != sb ||
                std::signbit(mesh.attr.margin[(std::size_t)k11]) != sb)
                continue;
            mesh.faces.push_back({k00, k10, k11});
            mesh.faces.push_back({k00, k11, k01});
        }
    }
    return mesh;
}

int component_count(const SurfaceMesh& mesh) {
    const std::size_t n = mesh.vertices4.size();
    std::vector<long long> parent(n);
    std::iota(parent.begin(), parent.end(), 0ll);
    const auto find = [&](long long x) {
        while (parent[(std::size_t)x] != x) {
            parent[(std::size_t)x] = parent[(std::size_t)parent[(std::size_t)x]];
            x = parent[(std::size_t)x];
        }
        return x;
    };
    const auto unite = [&](long long x, long long y) { parent[(std::size_t)find(x)] = find(y); };
    std::vector<std::uint8_t> used(n, 0);
    for (const auto& f : mesh.faces) {
        unite(f[0], f[1]);
        unite(f[0], f[2]);
        used[(std::size_t)f[0]] = used[(std::size_t)f[1]] = used[(std::size_t)f[2]] = 1;
    }
    int components = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (used[k] && find((long long)k) == (long long)k) ++components;
    return components;
}

void export_obj(const SurfaceMesh& mesh, std::ostream& out) {
    if (!mesh.projected) fail(Errc::unprojected_mesh, "export_obj requires a projected mesh");
    if (mesh.faces.empty()) fail(Errc::empty_mesh, "mesh has no faces to export");

    std::vector<long long> remap(mesh.vertices4.size(), 0);
    long long next = 0;
    char line[160];
    for (std::size_t k = 0; k < mesh.vertices3.size(); ++k) {
        if (mesh.mask[k]) continue;
        remap[k] = ++next;
        std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", mesh.vertices3[k][0],
                      mesh.vertices3[k][1], mesh.vertices3[k][2]);
        out << line;
    }
    for (const auto& f : mesh.faces) {
        std::snprintf(line, sizeof line, "f %lld %lld %lld\n", remap[(std::size_t)f[0]],
                      remap[(std::size_t)f[1]], remap[(std::size_t)f[2]]);
        out << line;
    }
    if (!out) fail(Errc::io_failure, "writing OBJ stream failed");
}

std::string obj_string(const SurfaceMesh& mesh) {
    std::ostringstream os;
    export_obj(mesh, os);
    return os.str();
}

std::string mesh_json_string(const SurfaceMesh& mesh, const SampledField& field) {
    using ordered_json = nlohmann::ordered_json;
    ordered_json j;

    ordered_json params;
    params["r1"] = field.params.r1;
    params["r2"] = field.params.r2;
    params["c"] = field.cfg.c;
    params["family"] = family_name(field.cfg.family);
    switch (field.cfg.family) {
        case Family::exp:
            params["a1"] = field.cfg.a1;
            params["b1"] = field.cfg.b1;
            params["eps1"] = field.cfg.eps1;
            params["eps2"] = field.cfg.eps2;
            break;
        case Family::general:
            params["a1"] = field.cfg.a1;
            params["a2"] = field.cfg.a2;
            params["b1"] = field.cfg.b1;
            params["b2"] = field.cfg.b2;
            break;
        default:
            break;
    }
    params["mask_threshold"] = field.mask_threshold;
    j["params"] = params;

    j["grid"] = {{"u1", {field.grid.u1_min, field.grid.u1_max}},
                 {"u2", {field.grid.u2_min, field.grid.u2_max}},
                 {"n", {field.grid.n1, field.grid.n2}}};

    ordered_json verts = ordered_json::array();
    for (const Vec4& p : mesh.vertices4) verts.push_back({p[0], p[1], p[2], p[3]});
    j["vertices"] = std::move(verts);

    ordered_json msk = ordered_json::array();
    for (std::uint8_t m : mesh.mask) msk.push_back((int)m);
    j["mask"] = std::move(msk);

    ordered_json faces = ordered_json::array();
    for (const auto& f : mesh.faces) faces.push_back({f[0], f[1], f[2]});
    j["faces"] = std::move(faces);

    j["attributes"] = {{"psi1", mesh.attr.psi1},
                       {"psi2", mesh.attr.psi2},
                       {"lt1", mesh.attr.lt1},
                       {"lt2", mesh.attr.lt2},
                       {"margin", mesh.attr.margin}};
    return j.dump();
}

}  // namespace flatsurf
