#pragma once

#include <cstdint>

namespace hypercast::gf256 {

// GF(2^8) with reducing polynomial x^8 + x^4 + x^3 + x + 1 (0x11B).
inline constexpr std::uint16_t kPolynomial = 0x11B;

inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }

std::uint8_t mul(std::uint8_t a, std::uint8_t b);

// errors: rejects 0
std::uint8_t inv(std::uint8_t a);

}  // namespace hypercast::gf256
