#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "haarmi/rng.hpp"

namespace haarmi {
namespace {

// Known-answer vectors published with Random123 (kat_vectors, philox4x32_10).
TEST(Philox4x32, KnownAnswerVectors) {
    EXPECT_EQ(Philox4x32::encrypt({0, 0, 0, 0}, {0, 0}),
              (Philox4x32::Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
    EXPECT_EQ(Philox4x32::encrypt({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                  {0xffffffffu, 0xffffffffu}),
              (Philox4x32::Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
    EXPECT_EQ(Philox4x32::encrypt({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                  {0xa4093822u, 0x299f31d0u}),
              (Philox4x32::Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(SampleStream, ReproducibleAndDistinctAcrossIndices) {
    SampleStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    std::set<std::uint64_t> firsts;
    for (int i = 0; i < 4; ++i) {
        const auto x = a.next_block();
        EXPECT_EQ(x, b.next_block());
        firsts.insert(x.first);
    }
    EXPECT_EQ(firsts.size(), 4u);
    SampleStream fresh(42, 7);
    const auto first = fresh.next_block();
    EXPECT_NE(first, c.next_block());
    EXPECT_NE(first, d.next_block());
}

TEST(SampleStream, OpenUnitInterval) {
    EXPECT_GT(SampleStream::to_open_unit(0), 0.0);
    EXPECT_LT(SampleStream::to_open_unit(~std::uint64_t{0}), 1.0);
}

TEST(SampleStream, NormalMoments) {
    SampleStream s(1, 0);
    const int n = 200000;
    double sum = 0, sum2 = 0, sum4 = 0;
    for (int i = 0; i < n / 2; ++i) {
        const auto [x, y] = s.next_normal_pair();
        for (double v : {x, y}) {
            sum += v;
            sum2 += v * v;
            sum4 += v * v * v * v;
        }
    }
    EXPECT_NEAR(sum / n, 0.0, 5.0 / std::sqrt(n));
    EXPECT_NEAR(sum2 / n, 1.0, 5.0 * std::sqrt(2.0 / n));
    EXPECT_NEAR(sum4 / n, 3.0, 5.0 * std::sqrt(96.0 / n));
}

}  // namespace
}  // namespace haarmi
