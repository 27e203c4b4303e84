#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hypercast {

// Recorded in run manifests: names the exact bit stream, so a run can be
// reproduced by an independent implementation from the manifest alone.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64+u53";

// Seeded generator with fully pinned output. Doubles come from the fixed
// 53-bit construction below, never from std::uniform_real_distribution,
// whose mapping is implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Uniform in [0, n) by rejection; n > 0.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % n;
    }

    std::uint8_t next_byte() { return static_cast<std::uint8_t>(engine_() & 0xFF); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace hypercast
