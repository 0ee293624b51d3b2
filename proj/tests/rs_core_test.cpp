#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "rs3127/rs_core.hpp"

namespace rs3127 {
namespace {

Message random_message(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, 31);
  Message m{};
  for (auto& s : m) s = GfElement(d(rng));
  return m;
}

// Expands prod (x + alpha^i) as a list of coefficients, low degree first,
// using repeated multiplication instead of the table.
std::vector<unsigned> expand_generator_oracle() {
  const auto mul = [](unsigned a, unsigned b) {
    unsigned r = 0;
    for (int i = 0; i < 5; ++i) {
      if ((b >> i) & 1U) r ^= a << i;
    }
    for (int d = 8; d >= 5; --d) {
      if ((r >> d) & 1U) r ^= kPrimitivePoly << (d - 5);
    }
    return r;
  };
  std::vector<unsigned> poly{1};
  unsigned root = 1;
  for (int i = 1; i <= 4; ++i) {
    root = mul(root, 2);
    std::vector<unsigned> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] ^= poly[d];
      next[d] ^= mul(poly[d], root);
    }
    poly = next;
  }
  return poly;
}

TEST(GeneratorPoly, MonicWithExpectedRoots) {
  const GeneratorPoly g = build_generator_poly();
  EXPECT_EQ(g[4], kOne);
  for (int i = 0; i < kGroupOrder; ++i) {
    const bool is_root = g.evaluate(gf_alpha_pow(i)).is_zero();
    EXPECT_EQ(is_root, i >= 1 && i <= 4) << "alpha^" << i;
  }
}

TEST(GeneratorPoly, MatchesProductExpansion) {
  const std::vector<unsigned> oracle = expand_generator_oracle();
  // Frozen from the oracle: g(x) = x^4 + 30x^3 + 6x^2 + 9x + 17.
  ASSERT_EQ(oracle, (std::vector<unsigned>{17, 9, 6, 30, 1}));
  const GeneratorPoly g = build_generator_poly();
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(g[d].value(), oracle[static_cast<std::size_t>(d)]);
}

TEST(EncodeReference, ZeroMessage) {
  const Codeword cw = encode_reference(Message{});
  for (GfElement s : cw) EXPECT_EQ(s, kZero);
}

TEST(EncodeReference, LowestDegreeUnitGivesX4ModG) {
  Message m{};
  m[26] = kOne;
  const Codeword cw = encode_reference(m);
  // x^4 mod g = g3 x^3 + g2 x^2 + g1 x + g0, emitted highest degree first.
  const GeneratorPoly& g = generator_poly();
  EXPECT_EQ(cw[27], g[3]);
  EXPECT_EQ(cw[28], g[2]);
  EXPECT_EQ(cw[29], g[1]);
  EXPECT_EQ(cw[30], g[0]);
  EXPECT_EQ(cw[27].value(), 30);
  EXPECT_EQ(cw[30].value(), 17);
}

TEST(EncodeReference, SystematicAndValid) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const Message m = random_message(rng);
    const Codeword cw = encode_reference(m);
    ASSERT_EQ(message_of(cw), m);
    ASSERT_TRUE(is_codeword(cw));
  }
}

TEST(EncodeReference, Linearity) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const Message a = random_message(rng);
    const Message b = random_message(rng);
    Message sum{};
    for (int j = 0; j < kMessageLength; ++j) sum[j] = a[j] + b[j];
    ASSERT_EQ(encode_reference(sum), encode_reference(a) + encode_reference(b));
  }
}

TEST(IsCodeword, SingleSymbolChangeIsDetected) {
  std::mt19937_64 rng(13);
  EXPECT_TRUE(is_codeword(Codeword{}));
  for (int t = 0; t < 20; ++t) {
    const Codeword cw = encode_reference(random_message(rng));
    for (int j = 0; j < kCodeLength; ++j) {
      for (unsigned e = 1; e < 32; ++e) {
        Codeword bad = cw;
        bad[j] += GfElement(e);
        ASSERT_FALSE(is_codeword(bad)) << "pos " << j << " err " << e;
      }
    }
  }
}

TEST(IsCodeword, MinimumDistanceSpotCheck) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const Codeword a = encode_reference(random_message(rng));
    const Codeword b = encode_reference(random_message(rng));
    if (a == b) continue;
    int diff = 0;
    for (int j = 0; j < kCodeLength; ++j) diff += a[j] == b[j] ? 0 : 1;
    EXPECT_GE(diff, 5);
  }
}

}  // namespace
}  // namespace rs3127
