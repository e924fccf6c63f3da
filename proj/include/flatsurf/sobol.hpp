#pragma once

// Two-dimensional Sobol sequence (direction numbers for the first two
// dimensions), used wherever the verification layer needs deterministic,
// well-spread sample points.  Random access: point(i) depends only on i.

#include <array>
#include <cstdint>

#include "flatsurf/torus.hpp"

namespace flatsurf {

class Sobol2D {
  public:
    // skip = index of the first point returned by next(); skipping 0 avoids
    // the degenerate corner sample (0, 0).
    explicit Sobol2D(std::uint64_t skip = 1) : index_(skip) {}

    std::array<double, 2> point(std::uint64_t i) const;

    std::array<double, 2> next() { return point(index_++); }

    // Next point mapped affinely into [u1_min,u1_max] x [u2_min,u2_max].
    ParamPoint next_in(double u1_min, double u1_max, double u2_min, double u2_max) {
        const auto p = next();
        return {u1_min + p[0] * (u1_max - u1_min), u2_min + p[1] * (u2_max - u2_min)};
    }

  private:
    std::uint64_t index_;
};

}  // namespace flatsurf
