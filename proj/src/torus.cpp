#include "flatsurf/torus.hpp"

#include <cmath>

namespace flatsurf {

TorusParams TorusParams::from_r1(double r1) {
    if (!(r1 > 0.0 && r1 < 1.0))
        fail(Errc::out_of_range, "r1 must lie in (0,1), got " + std::to_string(r1));
    return {r1, std::sqrt(1.0 - r1 * r1)};
}

Vec4 torus_point(const TorusParams& params, ParamPoint u) {
    const double a1 = params.r2 * u.u1, a2 = params.r1 * u.u2;
    return {params.r1 * std::cos(a1), params.r1 * std::sin(a1),
            params.r2 * std::cos(a2), params.r2 * std::sin(a2)};
}

TorusFrame torus_frame(const TorusParams& params, ParamPoint u) {
    const double a1 = params.r2 * u.u1, a2 = params.r1 * u.u2;
    const double c1 = std::cos(a1), s1 = std::sin(a1);
    const double c2 = std::cos(a2), s2 = std::sin(a2);

    TorusFrame fr;
    fr.x = {params.r1 * c1, params.r1 * s1, params.r2 * c2, params.r2 * s2};
    fr.e1 = {-s1, c1, 0.0, 0.0};
    fr.e2 = {0.0, 0.0, -s2, c2};
    // dN e1 = lambda1 e1 with lambda1 = -r2/r1, dN e2 = lambda2 e2.
    fr.n = {-params.r2 * c1, -params.r2 * s1, params.r1 * c2, params.r1 * s2};
    fr.lambda1 = params.lambda1();
    fr.lambda2 = params.lambda2();
    return fr;
}

}  // namespace flatsurf
