#include <gtest/gtest.h>

#include <set>

#include "analysis.hpp"
#include "error.hpp"
#include "golden.hpp"
#include "recursion.hpp"

using namespace csforge;
using namespace csforge::testing;

namespace {

std::vector<double> rounded(const std::vector<double>& v) {
  std::vector<double> out;
  for (double x : v) out.push_back(std::round(x * 1e9) / 1e9 + 0.0);
  return out;
}

}  // namespace

TEST(SeedPair, ValidatesComplementarity) {
  EXPECT_NO_THROW(SeedPair({1, 1}, {1, -1}));
  EXPECT_THROW(SeedPair({1, 1}, {1, 1}), InvalidSeed);
  EXPECT_THROW(SeedPair({1, 1}, {1}), InvalidSeed);
  EXPECT_THROW(SeedPair({}, {}), InvalidSeed);
  EXPECT_THROW(SeedPair({0}, {0}), InvalidSeed);
  EXPECT_NO_THROW(SeedPair(long_seed_a(), long_seed_b()));
}

TEST(UnitExpElement, Value) {
  const UnitExpElement e{log3_exponent(), 1.0, 4, false};
  EXPECT_NEAR(std::abs(e.value() - cplx(0, 3)), 0.0, 1e-12);
  EXPECT_EQ((UnitExpElement{1.0, 1.0, 4, true}.value()), cplx(0, 0));
  EXPECT_NEAR(std::abs(UnitExpElement{0, 5.0, 4, false}.value() - cplx(0, 1)), 0.0, 1e-12);
}

TEST(EncoderParams, Validation) {
  auto p = EncoderParams::neutral(3, 4);
  EXPECT_NO_THROW(p.validate());
  p.H = 3;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = EncoderParams::neutral(3, 4);
  p.k[0] = 4.0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = EncoderParams::neutral(3, 4);
  p.d[1] = -1;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = EncoderParams::neutral(3, 4);
  p.pi = {1, 1, 2};
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = EncoderParams::neutral(3, 4);
  p.e.pop_back();
  EXPECT_THROW(p.validate(), InvalidArgument);
}

TEST(ComponentFunctions, AmplitudeAndPhaseTables) {
  const auto fn = build_component_functions(scaled_pair_params());
  const double e1 = log3_exponent();
  EXPECT_EQ(rounded(fn.f_r.to_sequence()), rounded({0, 0, e1, e1, e1, e1, 0, 0}));
  // 2 (x_2 x_1 + x_1 x_3) mod 4
  EXPECT_EQ(fn.f_i.to_sequence(), (std::vector<double>{0, 0, 0, 0, 0, 2, 2, 0}));
  EXPECT_EQ(fn.f_s.to_sequence(), std::vector<double>(8, 0.0));
}

TEST(ComponentFunctions, ZeroAmplitudeGivesZeroFunction) {
  auto p = EncoderParams::neutral(4, 8);
  p.pi = {4, 2, 1, 3};
  p.k = {1, 2, 3, 4};
  const auto fn = build_component_functions(p);
  EXPECT_TRUE(fn.f_r.is_zero());
  EXPECT_TRUE(fn.g_r.is_zero());
}

TEST(ComponentFunctions, MatePhaseDiffersByHalfTurnOnLastVariable) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int H = 2 << (rng() % 3);
    const auto p = random_params(rng, m, H, SeedPair::trivial(), Shifts::Any);
    const auto fn = build_component_functions(p);
    const auto fi = fn.f_i.to_sequence();
    const auto gi = fn.g_i.to_sequence();
    for (std::uint32_t x = 0; x < (1U << m); ++x) {
      const int last = BitVector(m, x).bit(p.pi[m - 1]);
      const double expect = reduce_phase(fi[x] + H / 2.0 * last + p.k_dprime - p.k_prime, H);
      const double diff = std::abs(reduce_phase(gi[x] - expect, H));
      EXPECT_LT(std::min(diff, H - diff), 1e-9);
    }
  }
}

TEST(OrderFunction, SelectsSeedByFirstPermutedVariable) {
  auto p = EncoderParams::neutral(3, 2);
  p.pi = {2, 1, 3};
  EXPECT_EQ(order_function(p, BitVector::from_bits({0, 0, 0})), SeedChoice::A);
  EXPECT_EQ(order_function(p, BitVector::from_bits({0, 1, 0})), SeedChoice::B);
  p.pi = {3, 1, 2};
  EXPECT_EQ(order_function(p, BitVector::from_bits({0, 0, 1})), SeedChoice::B);
  EXPECT_THROW(order_function(p, BitVector(2, 0)), InvalidArgument);
}

TEST(EncodePair, ScaledPair) {
  const auto out = encode_pair(scaled_pair_params());
  EXPECT_LT(relative_error(out.c, scaled_pair_expected()), 1e-9);
  EXPECT_TRUE(is_gcp(out.c, out.d).ok);
  EXPECT_FALSE(out.overlap);
}

TEST(EncodePair, LongSeedBlocks) {
  const auto out = encode_pair(long_seed_params());
  EXPECT_EQ(out.c.size(), 48u);
  EXPECT_LT(relative_error(out.c, long_seed_expected()), 1e-9);
  EXPECT_TRUE(is_gcp(out.c, out.d).ok);
}

TEST(EncodePair, ReversedPermutationChangesSeedOrder) {
  const auto out = encode_pair(long_seed_reversed_params());
  EXPECT_LT(relative_error(out.c, long_seed_reversed_expected()), 1e-9);
  EXPECT_GT(relative_error(out.c, long_seed_expected()), 0.1);
  EXPECT_TRUE(is_gcp(out.c, out.d).ok);
}

TEST(EncodePair, GappedSequence) {
  const auto out = encode_pair(gapped_params());
  EXPECT_EQ(out.c.size(), 84u);
  EXPECT_LT(relative_error(out.c, gapped_expected()), 1e-9);
  EXPECT_FALSE(out.overlap);
  const auto clusters = support_clusters(std::span<const cplx>(out.c.values()));
  ASSERT_EQ(clusters.size(), 2u);
  EXPECT_EQ(clusters[1].first - clusters[0].second, 60u);
  EXPECT_TRUE(is_gcp(out.c, out.d).ok);
}

TEST(EncodePair, TrivialSingleStep) {
  const auto out = encode_pair(EncoderParams::neutral(1, 2));
  EXPECT_LT(relative_error(out.c, ComplexSequence(std::vector<cplx>{1, 1})), 1e-12);
  EXPECT_LT(relative_error(out.d, ComplexSequence(std::vector<cplx>{1, -1})), 1e-12);
}

TEST(EncodePair, InterleavedBlocksWithoutCollision) {
  // The shift condition fails, yet the block offsets 0,6,2,8,5,11,7,13 are distinct.
  auto p = EncoderParams::neutral(3, 2);
  p.d = {1, 0, 5};
  EXPECT_FALSE(check_no_overlap(p.d, p.pi));
  const auto out = encode_pair(p);
  EXPECT_FALSE(out.overlap);
  EXPECT_EQ(out.c.size(), 8u + 6u);
  EXPECT_EQ(out.c.support().size(), 8u);
  EXPECT_TRUE(is_gcp(out.c, out.d).ok);
}

TEST(EncodePair, OverlapIsSummedAndFlagged) {
  // Offsets 4 x_1 + 3 x_2 + x_3: x = 011 and x = 100 both land on 4.
  auto p = EncoderParams::neutral(3, 2);
  p.d = {0, 1, 0};
  const auto out = encode_pair(p);
  EXPECT_TRUE(out.overlap);
  EXPECT_EQ(out.c.size(), 9u);
  EXPECT_TRUE(is_gcp(out.c, out.d).ok);
}

TEST(EncodePair, RandomisedComplementarityAndLength) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int H = 2 << (rng() % 3);
    const int N = 1 + static_cast<int>(rng() % 3);
    const auto shifts = static_cast<Shifts>(rng() % 3);
    const auto p = random_params(rng, m, H, random_seed(rng, N), shifts);
    const auto out = encode_pair(p);
    std::size_t expect_len = static_cast<std::size_t>(N) << m;
    for (int v : p.d) expect_len += v;
    ASSERT_EQ(out.c.size(), expect_len);
    const auto check = is_gcp(out.c, out.d, 1e-9);
    EXPECT_TRUE(check.ok) << "m=" << m << " H=" << H << " N=" << N << " violation " << check.max_violation;
    if (shifts != Shifts::Any) EXPECT_FALSE(out.overlap);
  }
}

TEST(EncodePair, DisjointClustersKeepSeedModuli) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int N = 1 + static_cast<int>(rng() % 3);
    const auto seed = random_seed(rng, N);
    const auto p = random_params(rng, m, 4, seed, Shifts::Disjoint);
    ASSERT_TRUE(check_no_overlap(p.d, p.pi));
    const auto out = encode_pair(p);
    EXPECT_FALSE(out.overlap);
    const auto fr = build_component_functions(p).f_r.to_sequence();
    std::set<long long> allowed;
    for (std::uint32_t x = 0; x < (1U << m); ++x)
      for (const auto* s : {&seed.a(), &seed.b()})
        for (const auto& v : *s) allowed.insert(std::llround(std::abs(v) * std::exp(std::numbers::pi / 2 * fr[x]) * 1e9));
    for (const auto& v : out.c.values())
      if (v != cplx{}) EXPECT_TRUE(allowed.count(std::llround(std::abs(v) * 1e9))) << std::abs(v);
  }
}

TEST(RecursionConversion, NeutralParametersMapToNeutral) {
  const auto p = recursion_to_closed_form(RecursionParams::neutral(3, 4));
  EXPECT_EQ(p.e, std::vector<double>(3, 0.0));
  EXPECT_EQ(p.k, std::vector<double>(3, 0.0));
  EXPECT_EQ(p.e_prime, 0.0);
  EXPECT_EQ(p.k_prime, 0.0);
  EXPECT_EQ(p.k_dprime, 0.0);
  EXPECT_EQ(p.pi, (std::vector<int>{1, 2, 3}));
}

TEST(RecursionConversion, ScaleOnSecondHalf) {
  auto rp = RecursionParams::neutral(3, 4);
  rp.c_b[2] = 4.0 / (2.0 * std::numbers::pi) * std::log(3.0);
  const auto p = recursion_to_closed_form(rp);
  EXPECT_NEAR(p.e[2], 0.6994, 1e-4);
  EXPECT_EQ(p.e_prime, 0.0);
}

TEST(RecursionConversion, ScaledPairFromRecursion) {
  auto rp = RecursionParams::neutral(3, 4);
  rp.psi = PermutationPsi::from_pi({2, 1, 3}).values();
  rp.c_b[0] = log3_exponent();
  EXPECT_LT(relative_error(direct_recursion(rp).c, scaled_pair_expected()), 1e-9);
  EXPECT_LT(relative_error(encode_pair(recursion_to_closed_form(rp)).c, scaled_pair_expected()), 1e-9);
}

TEST(DirectRecursion, SingleStep) {
  const auto out = direct_recursion(RecursionParams::neutral(1, 2));
  EXPECT_LT(relative_error(out.c, ComplexSequence(std::vector<cplx>{1, 1})), 1e-12);
  EXPECT_LT(relative_error(out.d, ComplexSequence(std::vector<cplx>{1, -1})), 1e-12);
}

TEST(DirectRecursion, MatchesClosedFormRandomised) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int H = 2 << (rng() % 3);
    const int N = 1 + static_cast<int>(rng() % 3);
    const auto rp = random_recursion(rng, m, H, random_seed(rng, N), trial % 2 == 1);
    const auto direct = direct_recursion(rp);
    const auto closed = encode_pair(recursion_to_closed_form(rp));
    EXPECT_LT(relative_error(closed.c, direct.c), 1e-9);
    EXPECT_LT(relative_error(closed.d, direct.d), 1e-9);
    EXPECT_EQ(closed.overlap, direct.overlap);
  }
}
