#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

namespace haarmi {

/// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw; SC'11),
/// bit-compatible with the Random123 reference implementation.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr std::string_view kName = "philox4x32-10";

    static constexpr Counter encrypt(Counter counter, Key key) {
        counter = round(counter, key);
        for (int r = 1; r < 10; ++r) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
            counter = round(counter, key);
        }
        return counter;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static constexpr Counter round(const Counter& c, const Key& k) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
};

/// Independent stream for one Monte Carlo sample: key = run seed, counter high
/// words = sample index, counter low words = block number. Any (seed, index)
/// pair is reproducible without touching other streams.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          index_lo_(static_cast<std::uint32_t>(index)),
          index_hi_(static_cast<std::uint32_t>(index >> 32)) {}

    /// Next 128 random bits as two 64-bit words.
    std::pair<std::uint64_t, std::uint64_t> next_block();

    /// Uniform on the open interval (0, 1) with 52 random bits; the half-step offset keeps
    /// both endpoints out, and the largest value 1 - 2^-53 is exactly representable.
    static double to_open_unit(std::uint64_t bits) {
        return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
    }

    /// Two independent standard normals (Box-Muller on one block).
    std::pair<double, double> next_normal_pair();

private:
    Philox4x32::Key key_;
    std::uint32_t index_lo_;
    std::uint32_t index_hi_;
    std::uint64_t block_ = 0;
};

}  // namespace haarmi
