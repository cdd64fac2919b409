#include "haarmi/rng.hpp"

#include <cmath>
#include <numbers>

namespace haarmi {

std::pair<std::uint64_t, std::uint64_t> SampleStream::next_block() {
    const Philox4x32::Counter counter{static_cast<std::uint32_t>(block_),
                                      static_cast<std::uint32_t>(block_ >> 32), index_lo_, index_hi_};
    ++block_;
    const auto out = Philox4x32::encrypt(counter, key_);
    return {(static_cast<std::uint64_t>(out[1]) << 32) | out[0],
            (static_cast<std::uint64_t>(out[3]) << 32) | out[2]};
}

std::pair<double, double> SampleStream::next_normal_pair() {
    const auto [a, b] = next_block();
    const double radius = std::sqrt(-2.0 * std::log(to_open_unit(a)));
    const double angle = 2.0 * std::numbers::pi * to_open_unit(b);
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace haarmi
