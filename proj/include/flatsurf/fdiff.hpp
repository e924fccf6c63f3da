#pragma once

// Finite-difference machinery for the independent verification layer.
// The closed forms in surface.hpp are never differentiated analytically
// here; everything is checked against central differences.

#include <cmath>
#include <functional>

#include "flatsurf/surface.hpp"

namespace flatsurf {

inline constexpr double kFdStepDefault = 1e-5;
// Nested second differences lose ~eps/h^2; the curvature estimator uses a
// larger step so roundoff stays well under its 1e-4 acceptance bound.
inline constexpr double kFdStepCurvature = 1e-3;

struct FDConfig {
    double step = kFdStepDefault;
    bool richardson = true;  // combine stencils at h and h/2: (4 D(h/2) - D(h)) / 3
};

// A field over the parameter plane, with an optional margin guard.  When a
// guard is present, central_diff refuses stencils that touch or straddle
// the singular set.
template <class T>
struct Field {
    std::function<T(ParamPoint)> eval;
    std::function<double(ParamPoint)> margin;  // may be empty
};

namespace detail {

inline ParamPoint offset(ParamPoint u, int axis, double h) {
    return axis == 0 ? ParamPoint{u.u1 + h, u.u2} : ParamPoint{u.u1, u.u2 + h};
}

template <class T>
void guard_stencil(const Field<T>& field, ParamPoint u, int axis, double h, bool richardson) {
    if (!field.margin) return;
    const double m0 = field.margin(u);
    const double offsets[4] = {h, -h, h / 2, -h / 2};
    const int n = richardson ? 4 : 2;
    for (int i = 0; i < n; ++i) {
        const double mi = field.margin(offset(u, axis, offsets[i]));
        if (!(std::abs(m0) > kRegularityEps) || !(std::abs(mi) > kRegularityEps) ||
            std::signbit(mi) != std::signbit(m0))
            fail(Errc::stencil_hits_singularity,
                 "finite-difference stencil touches or crosses the singular set");
    }
}

}  // namespace detail

// Central difference along the given axis (0 = u1, 1 = u2).
template <class T>
T central_diff(const Field<T>& field, ParamPoint u, int axis, const FDConfig& fd = {}) {
    detail::guard_stencil(field, u, axis, fd.step, fd.richardson);
    auto slope = [&](double h) -> T {
        return (1.0 / (2.0 * h)) * (field.eval(detail::offset(u, axis, h)) -
                                    field.eval(detail::offset(u, axis, -h)));
    };
    if (!fd.richardson) return slope(fd.step);
    return (1.0 / 3.0) * (4.0 * slope(fd.step / 2) - slope(fd.step));
}

// Plain second central difference (f(u+h) - 2 f(u) + f(u-h)) / h^2.
template <class T>
T second_diff(const Field<T>& field, ParamPoint u, int axis, double h) {
    detail::guard_stencil(field, u, axis, h, false);
    return (1.0 / (h * h)) *
           (field.eval(detail::offset(u, axis, h)) - 2.0 * field.eval(u) +
            field.eval(detail::offset(u, axis, -h)));
}

}  // namespace flatsurf
