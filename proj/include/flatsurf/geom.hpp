#pragma once

// Small fixed-size vectors for points in R^3 / R^4 (ambient space of S^3),
// plus the two-angle torus rotation used throughout.

#include <array>
#include <cmath>

namespace flatsurf {

struct Vec3 {
    double v[3]{0.0, 0.0, 0.0};

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }
};

struct Vec4 {
    double v[4]{0.0, 0.0, 0.0, 0.0};

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }
};

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Vec4 operator-(const Vec4& a, const Vec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline Vec4 operator*(double s, const Vec4& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

inline double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double norm2(const Vec4& a) { return dot(a, a); }

inline double norm(const Vec4& a) { return std::sqrt(norm2(a)); }

inline double max_abs(const Vec4& a) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

inline double max_abs_diff(const Vec4& a, const Vec4& b) { return max_abs(a - b); }

inline bool all_finite(const Vec4& a) {
    return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]) &&
           std::isfinite(a[3]);
}

// Rotation acting as angle theta on the (x1,x2) plane and phi on (x3,x4).
// These rotations act transitively on the product-of-circles tori:
// rotate(r2*t, r1*s, X(u1,u2)) = X(u1+t, u2+s) for the standard flat torus.
inline Vec4 rotate_torus(double theta, double phi, const Vec4& p) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    return {ct * p[0] - st * p[1], st * p[0] + ct * p[1],
            cp * p[2] - sp * p[3], sp * p[2] + cp * p[3]};
}

}  // namespace flatsurf
