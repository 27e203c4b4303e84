#include "hypercast/gf256.hpp"

#include <array>
#include <stdexcept>

namespace hypercast::gf256 {

namespace {

std::uint8_t mul_shift_add(std::uint8_t a, std::uint8_t b) {
    std::uint16_t acc = 0;
    for (int bit = 0; bit < 8; ++bit)
        if (b & (1u << bit)) acc ^= static_cast<std::uint16_t>(a << bit);
    // reduce the 15-bit product
    for (int bit = 14; bit >= 8; --bit)
        if (acc & (1u << bit)) acc ^= static_cast<std::uint16_t>(kPolynomial << (bit - 8));
    return static_cast<std::uint8_t>(acc);
}

struct Tables {
    std::array<std::array<std::uint8_t, 256>, 256> mul{};
    std::array<std::uint8_t, 256> inv{};

    Tables() {
        for (int a = 0; a < 256; ++a)
            for (int b = 0; b < 256; ++b)
                mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    mul_shift_add(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
        for (int a = 1; a < 256; ++a)
            for (int b = 1; b < 256; ++b)
                if (mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 1) {
                    inv[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
                    break;
                }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) { return tables().mul[a][b]; }

std::uint8_t inv(std::uint8_t a) {
    if (a == 0) throw std::invalid_argument("gf256::inv: 0 has no inverse");
    return tables().inv[a];
}

}  // namespace hypercast::gf256
