#pragma once

// The flat (Clifford) torus in S^3 and its curvature-line frame.
//
//   X(u1,u2) = (r1 cos(r2 u1), r1 sin(r2 u1), r2 cos(r1 u2), r2 sin(r1 u2)),
//   r1^2 + r2^2 = 1,
//
// parametrized by lines of curvature with induced metric
// (r1 r2)^2 (du1^2 + du2^2) and principal curvature functions
// lambda1 = -r2/r1, lambda2 = r1/r2 of the chosen unit normal N
// (dN e_i = lambda_i e_i, and lambda1 * lambda2 = -1).

#include "flatsurf/errors.hpp"
#include "flatsurf/geom.hpp"

namespace flatsurf {

struct ParamPoint {
    double u1 = 0.0;
    double u2 = 0.0;
};

struct TorusParams {
    double r1 = 0.0;
    double r2 = 0.0;

    // Radius pair from r1 alone; rejects r1 outside (0,1).
    static TorusParams from_r1(double r1);

    double a() const { return r1 * r2; }  // metric scale of the seed torus
    double lambda1() const { return -r2 / r1; }
    double lambda2() const { return r1 / r2; }
};

// Orthonormal curvature-line frame {X, e1, e2, N} at a parameter point.
struct TorusFrame {
    Vec4 x;   // surface point, |x| = 1
    Vec4 e1;  // unit tangent along u1
    Vec4 e2;  // unit tangent along u2
    Vec4 n;   // unit normal in S^3
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

Vec4 torus_point(const TorusParams& params, ParamPoint u);
TorusFrame torus_frame(const TorusParams& params, ParamPoint u);

}  // namespace flatsurf
