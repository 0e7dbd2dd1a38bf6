#pragma once

#include <cstdint>
#include <vector>

#include "sequence.hpp"

namespace csforge {

inline constexpr std::size_t kMaxCodebookSize = std::size_t{1} << 16;

/// A power-of-two set of equal-length codewords addressed by index bits.
class Codebook {
 public:
  /// Keeps the first 2^floor(log2(n)) entries of `words`, which must be
  /// distinct and of equal length. Throws LimitExceeded above kMaxCodebookSize.
  explicit Codebook(std::vector<ComplexSequence> words);

  std::size_t size() const { return words_.size(); }
  int bits() const { return bits_; }
  std::size_t length() const { return words_.front().size(); }
  const std::vector<ComplexSequence>& words() const { return words_; }
  /// Mean codeword energy.
  double symbol_energy() const;

 private:
  std::vector<ComplexSequence> words_;
  int bits_ = 0;
};

struct SimConfig {
  /// Eb/N0 grid in dB; +infinity means a noiseless channel.
  std::vector<double> ebn0_db;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
};

struct SimPoint {
  double ebn0_db = 0.0;
  std::uint64_t bit_errors = 0;
  std::uint64_t bits = 0;
  std::uint64_t word_errors = 0;
  double ber() const { return bits ? static_cast<double>(bit_errors) / bits : 0.0; }
};

struct SimReport {
  std::vector<SimPoint> points;
  std::uint64_t trials = 0;
  std::size_t codebook_size = 0;
  int bits_per_word = 0;
  std::uint64_t seed = 0;
  /// 90th percentiles over the codebook of the oversampled PAPR (dB) and of
  /// the peak instantaneous power.
  double papr_p90_db = 0.0;
  double peak_power_p90 = 0.0;
};

/// Uniform index bits, complex AWGN with variance N0 per sample
/// (N0/2 per real dimension, Eb = Es / bits), minimum Euclidean distance
/// decoding. Deterministic for a given seed regardless of thread count.
SimReport simulate(const Codebook& book, const SimConfig& cfg);

/// Q(x) = P(N(0,1) > x).
double q_function(double x);

}  // namespace csforge
