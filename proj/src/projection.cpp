#include "flatsurf/projection.hpp"

namespace flatsurf {

Vec3 project_stereographic(const Vec4& p, const ProjectionSpec& spec) {
    const Vec4 q = rotate_torus(spec.pre_rotate_theta, spec.pre_rotate_phi, p);
    const double denom = 1.0 - q[3];
    if (!(denom >= spec.pole_tol))
        fail(Errc::near_pole, "point too close to the projection pole (0,0,0,1)");
    return Vec3{q[0] / denom, q[1] / denom, q[2] / denom};
}

}  // namespace flatsurf
