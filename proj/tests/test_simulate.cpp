#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "error.hpp"
#include "qam.hpp"
#include "simulate.hpp"

using namespace csforge;

namespace {

Codebook two_words() {
  return Codebook({ComplexSequence(std::vector<cplx>{1, 1}), ComplexSequence(std::vector<cplx>{1, -1})});
}

Codebook green_book() {
  EnumerationOptions opt;
  opt.pi = std::vector<int>{1, 2};
  return Codebook(distinct_rule_outputs(QamRule::Green, 1, 2, SeedPair::trivial(), opt));
}

}  // namespace

TEST(QFunction, Values) {
  EXPECT_DOUBLE_EQ(q_function(0.0), 0.5);
  EXPECT_NEAR(q_function(1.0), 0.15865525393145707, 1e-15);
  EXPECT_NEAR(q_function(3.0), 0.0013498980316301, 1e-15);
}

TEST(Codebook, Construction) {
  const auto book = green_book();
  EXPECT_EQ(book.size(), 64u);
  EXPECT_EQ(book.bits(), 6);
  EXPECT_EQ(book.length(), 4u);
  EXPECT_DOUBLE_EQ(book.symbol_energy(), 4.0);

  std::vector<ComplexSequence> three{ComplexSequence(std::vector<cplx>{1}), ComplexSequence(std::vector<cplx>{-1}),
                                     ComplexSequence(std::vector<cplx>{{0, 1}})};
  const Codebook trimmed(three);
  EXPECT_EQ(trimmed.size(), 2u);
  EXPECT_EQ(trimmed.bits(), 1);
}

TEST(Codebook, Rejections) {
  EXPECT_THROW(Codebook({ComplexSequence(std::vector<cplx>{1})}), InvalidArgument);
  EXPECT_THROW(Codebook({ComplexSequence(std::vector<cplx>{1}), ComplexSequence(std::vector<cplx>{1})}),
               InvalidArgument);
  EXPECT_THROW(Codebook({ComplexSequence(std::vector<cplx>{1}), ComplexSequence(std::vector<cplx>{1, 1})}),
               InvalidArgument);
  std::vector<ComplexSequence> many;
  for (std::size_t i = 0; i <= kMaxCodebookSize; ++i)
    many.emplace_back(std::vector<cplx>{static_cast<double>(i)});
  EXPECT_THROW(Codebook(std::move(many)), LimitExceeded);
}

TEST(Simulate, NoiselessIsErrorFree) {
  SimConfig cfg;
  cfg.ebn0_db = {std::numeric_limits<double>::infinity()};
  cfg.trials = 5000;
  const auto r = simulate(green_book(), cfg);
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_EQ(r.points[0].bit_errors, 0u);
  EXPECT_EQ(r.points[0].bits, 5000u * 6);
  EXPECT_EQ(r.bits_per_word, 6);
  EXPECT_LE(r.papr_p90_db, 3.0103 + 1e-9);
  EXPECT_GT(r.peak_power_p90, 0.0);
}

TEST(Simulate, DeterministicForASeed) {
  SimConfig cfg;
  cfg.ebn0_db = {0.0, 4.0};
  cfg.trials = 10000;
  cfg.seed = 99;
  const auto book = green_book();
  const auto a = simulate(book, cfg);
  const auto b = simulate(book, cfg);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].bit_errors, b.points[i].bit_errors);
    EXPECT_EQ(a.points[i].word_errors, b.points[i].word_errors);
  }
  cfg.seed = 100;
  const auto c = simulate(book, cfg);
  EXPECT_NE(a.points[0].bit_errors, c.points[0].bit_errors);
  EXPECT_GT(a.points[0].ber(), a.points[1].ber());
}

TEST(Simulate, AntipodalPairMatchesQFunction) {
  SimConfig cfg;
  cfg.ebn0_db = {-10.0, 0.0, 6.0};
  cfg.trials = 100000;
  cfg.seed = 7;
  const auto r = simulate(two_words(), cfg);
  for (const auto& p : r.points) {
    const double expected = q_function(std::sqrt(std::pow(10.0, p.ebn0_db / 10.0)));
    const double sd = std::sqrt(expected * (1 - expected) / cfg.trials);
    EXPECT_NEAR(p.ber(), expected, 5 * sd + 1e-5) << "Eb/N0 " << p.ebn0_db;
  }
  EXPECT_NEAR(q_function(std::sqrt(0.1)), 0.3759, 1e-4);
}

TEST(Simulate, Rejections) {
  SimConfig cfg;
  cfg.trials = 0;
  cfg.ebn0_db = {0.0};
  EXPECT_THROW(simulate(two_words(), cfg), InvalidArgument);
  cfg.trials = 10;
  cfg.ebn0_db = {};
  EXPECT_THROW(simulate(two_words(), cfg), InvalidArgument);
  cfg.ebn0_db = {std::nan("")};
  EXPECT_THROW(simulate(two_words(), cfg), InvalidArgument);
}
