#include <cmath>

#include "doctest.h"

#include "flatsurf/mesh.hpp"

using namespace flatsurf;

namespace {

const TorusParams kTp = TorusParams::from_r1(0.6);

GeneratorConfig fast_cosh_sinh() {
    GeneratorConfig cfg;
    cfg.c = 4.0;
    cfg.family = Family::cosh_sinh;
    return cfg;
}

// Small all-regular window: the margin is near -1 throughout.
SampledField tiny_field(double threshold = kMaskThresholdDefault) {
    return sample_grid(kTp, fast_cosh_sinh(), {-0.2, 0.2, -0.2, 0.2, 3, 2}, threshold);
}

// Window straddling both singular curves on the u1 = 0 column.
SampledField window_field() {
    return sample_grid(kTp, fast_cosh_sinh(), {-1.0, 1.0, 0.0, 2.0, 21, 21});
}

}  // namespace

TEST_CASE("cells split along the fixed diagonal with consistent ids") {
    const SurfaceMesh mesh = tessellate(tiny_field(), {});
    REQUIRE(mesh.vertices4.size() == 6);
    CHECK(mesh.masked_count() == 0);
    REQUIRE(mesh.faces.size() == 4);
    CHECK(mesh.faces[0] == std::array<long long, 3>{0, 1, 4});
    CHECK(mesh.faces[1] == std::array<long long, 3>{0, 4, 3});
    CHECK(mesh.faces[2] == std::array<long long, 3>{1, 2, 5});
    CHECK(mesh.faces[3] == std::array<long long, 3>{1, 5, 4});
    CHECK(component_count(mesh) == 1);
    CHECK(mesh.projected);
    CHECK(mesh.vertices3.size() == 6);
    CHECK(mesh.pole_count == 0);
}

TEST_CASE("faces never touch masked vertices or bridge a sign change") {
    const SampledField field = window_field();
    const SurfaceMesh mesh = tessellate(field, {});

    for (const auto& f : mesh.faces) {
        const bool sb = std::signbit(mesh.attr.margin[(std::size_t)f[0]]);
        for (long long id : f) {
            CHECK(mesh.mask[(std::size_t)id] == 0);
            CHECK(std::signbit(mesh.attr.margin[(std::size_t)id]) == sb);
        }
    }

    // Face count matches an independent evaluation of the cell predicate.
    const GridSpec& g = field.grid;
    long long keep = 0;
    for (int j = 0; j + 1 < g.n2; ++j) {
        for (int i = 0; i + 1 < g.n1; ++i) {
            const long long ids[4] = {g.index(i, j), g.index(i + 1, j), g.index(i, j + 1),
                                      g.index(i + 1, j + 1)};
            bool ok = true;
            for (long long id : ids) ok = ok && mesh.mask[(std::size_t)id] == 0;
            if (!ok) continue;
            const bool sb = std::signbit(mesh.attr.margin[(std::size_t)ids[0]]);
            for (long long id : ids)
                ok = ok && std::signbit(mesh.attr.margin[(std::size_t)id]) == sb;
            if (ok) ++keep;
        }
    }
    CHECK((long long)mesh.faces.size() == 2 * keep);
    CHECK(mesh.faces.size() < 2u * 20u * 20u);  // sign changes cost cells

    // The singular curves genuinely separate the patch.
    CHECK(component_count(mesh) >= 2);

    // Everything serializable is finite, including attributes at masked ids.
    for (std::size_t k = 0; k < mesh.vertices4.size(); ++k) {
        CHECK(all_finite(mesh.vertices4[k]));
        CHECK(std::isfinite(mesh.attr.psi1[k]));
        CHECK(std::isfinite(mesh.attr.psi2[k]));
        CHECK(std::isfinite(mesh.attr.lt1[k]));
        CHECK(std::isfinite(mesh.attr.lt2[k]));
        CHECK(std::isfinite(mesh.attr.margin[k]));
    }
}

TEST_CASE("the pole guard masks vertices instead of emitting infinities") {
    ProjectionSpec close_pole;
    close_pole.pole_tol = 2.0;  // every point of S^3 with x4 > -1 trips it
    const SurfaceMesh mesh = tessellate(tiny_field(), close_pole);
    CHECK(mesh.pole_count == 6);
    CHECK(mesh.masked_count() == 6);
    CHECK(mesh.faces.empty());
    CHECK(component_count(mesh) == 0);
}

TEST_CASE("projection geometry: denominator, pole, pre-rotation") {
    const Vec4 anchor{0.36, 0.0, 0.8, -0.48};
    const Vec3 p = project_stereographic(anchor, {});
    CHECK(p[0] == anchor[0] / 1.48);
    CHECK(p[1] == 0.0);
    CHECK(p[2] == anchor[2] / 1.48);

    try {
        (void)project_stereographic({0.0, 0.0, 0.0, 1.0 - 1e-9}, {});
        FAIL("expected near_pole");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::near_pole);
    }

    ProjectionSpec rot;
    rot.pre_rotate_theta = 0.3;
    rot.pre_rotate_phi = -0.7;
    const Vec3 a = project_stereographic(anchor, rot);
    const Vec3 b = project_stereographic(rotate_torus(0.3, -0.7, anchor), {});
    for (int i = 0; i < 3; ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("unprojected meshes keep 4-D data and refuse OBJ export") {
    ProjectionSpec none;
    none.kind = ProjectionKind::none;
    const SurfaceMesh mesh = tessellate(tiny_field(), none);
    CHECK_FALSE(mesh.projected);
    CHECK(mesh.vertices3.empty());
    CHECK(mesh.faces.size() == 4);
    try {
        (void)obj_string(mesh);
        FAIL("expected unprojected_mesh");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unprojected_mesh);
    }
}

TEST_CASE("a fully masked field produces an empty mesh") {
    const SurfaceMesh mesh = tessellate(tiny_field(10.0), {});
    CHECK(mesh.masked_count() == 6);
    CHECK(mesh.faces.empty());
    CHECK(component_count(mesh) == 0);
    try {
        (void)obj_string(mesh);
        FAIL("expected empty_mesh");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::empty_mesh);
    }
}
