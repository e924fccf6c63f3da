#pragma once

// Stereographic projection of S^3 to R^3 for rendering:
// pi(x) = (x1, x2, x3) / (1 - x4), optionally after a torus rotation that
// moves the surface away from the pole x = (0,0,0,1).

#include "flatsurf/errors.hpp"
#include "flatsurf/geom.hpp"

namespace flatsurf {

inline constexpr double kPoleTolDefault = 1e-6;

enum class ProjectionKind { none, stereographic };

constexpr const char* projection_kind_name(ProjectionKind k) {
    return k == ProjectionKind::none ? "none" : "stereographic";
}

struct ProjectionSpec {
    ProjectionKind kind = ProjectionKind::stereographic;
    double pre_rotate_theta = 0.0;  // (x1,x2)-plane angle applied before projecting
    double pre_rotate_phi = 0.0;    // (x3,x4)-plane angle
    double pole_tol = kPoleTolDefault;
};

// Throws Errc::near_pole when 1 - x4 < pole_tol after the pre-rotation.
Vec3 project_stereographic(const Vec4& p, const ProjectionSpec& spec);

}  // namespace flatsurf
