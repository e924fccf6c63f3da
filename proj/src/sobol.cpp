#include "flatsurf/sobol.hpp"

namespace flatsurf {

namespace {

constexpr int kBits = 32;

struct Directions {
    std::uint32_t v[2][kBits];

    constexpr Directions() : v{} {
        // Dimension 0: van der Corput, v_k = 2^(31-k).
        for (int k = 0; k < kBits; ++k) v[0][k] = 1u << (31 - k);
        // Dimension 1: primitive polynomial x + 1, m_1 = 1,
        // m_k = 2 m_{k-1} XOR m_{k-1}  ->  1, 3, 5, 15, 17, 51, ...
        std::uint32_t m[kBits] = {};
        m[0] = 1;
        for (int k = 1; k < kBits; ++k) m[k] = (2 * m[k - 1]) ^ m[k - 1];
        for (int k = 0; k < kBits; ++k) v[1][k] = m[k] << (31 - k);
    }
};

constexpr Directions kDir{};

}  // namespace

std::array<double, 2> Sobol2D::point(std::uint64_t i) const {
    const std::uint64_t gray = i ^ (i >> 1);
    std::uint32_t x0 = 0, x1 = 0;
    for (int k = 0; k < kBits; ++k) {
        if (gray & (std::uint64_t{1} << k)) {
            x0 ^= kDir.v[0][k];
            x1 ^= kDir.v[1][k];
        }
    }
    constexpr double scale = 1.0 / 4294967296.0;  // 2^-32
    return {x0 * scale, x1 * scale};
}

}  // namespace flatsurf
