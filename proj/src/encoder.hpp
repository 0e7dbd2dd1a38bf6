#pragma once

#include <vector>

#include "boolean.hpp"
#include "sequence.hpp"

namespace csforge {

/// Relative tolerance used for seed validation and equality checks.
inline constexpr double kPairTolerance = 1e-9;

/// Upper limit on the length of any encoded sequence.
inline constexpr std::size_t kMaxSequenceLength = std::size_t{1} << 24;

/// A Golay complementary pair (a, b) of common length N >= 1, validated on
/// construction.
class SeedPair {
 public:
  /// Throws InvalidSeed if the lengths differ, are zero, or the pair is not
  /// complementary within kPairTolerance.
  SeedPair(std::vector<cplx> a, std::vector<cplx> b);

  /// a = b = (1).
  static SeedPair trivial();

  const std::vector<cplx>& a() const { return a_; }
  const std::vector<cplx>& b() const { return b_; }
  std::size_t length() const { return a_.size(); }

 private:
  std::vector<cplx> a_;
  std::vector<cplx> b_;
};

/// Closed-form encoder parameters. Vectors are indexed by step n = 1..m at
/// position n-1; pi is a permutation of {1, ..., m}.
struct EncoderParams {
  int m = 1;
  int H = 2;
  std::vector<int> pi;
  std::vector<double> e;
  double e_prime = 0.0;
  std::vector<double> k;
  double k_prime = 0.0;
  double k_dprime = 0.0;
  std::vector<int> d;
  SeedPair seed = SeedPair::trivial();

  /// m steps, pi = (1, ..., m), everything else zero.
  static EncoderParams neutral(int m, int H, SeedPair seed = SeedPair::trivial());

  /// Throws InvalidArgument naming the violated invariant.
  void validate() const;
  std::size_t output_length() const;
};

struct ComponentFunctions {
  BooleanFunction f_r;  // amplitude exponent of c
  BooleanFunction g_r;  // amplitude exponent of d
  BooleanFunction f_i;  // phase exponent of c, modulus H
  BooleanFunction g_i;  // phase exponent of d, modulus H
  BooleanFunction f_s;  // shift of each block
};

ComponentFunctions build_component_functions(const EncoderParams& p);

struct EncodedPair {
  ComplexSequence c;
  ComplexSequence d;
  /// Set when two blocks landed on a common position and were summed.
  bool overlap = false;
};

EncodedPair encode_pair(const EncoderParams& p);

enum class SeedChoice { A, B };

/// Which seed sequence feeds the block at x: A iff x_{pi_1} = 0.
SeedChoice order_function(const EncoderParams& p, const BitVector& x);

/// Parameters of the two-branch recursion
///
///   a_n = gamma_a zeta_a a_{n-1} + gamma_b zeta_b gamma_n b_{n-1} z^(d_n + N 2^psi_n)
///   b_n = conj(gamma_b) zeta_b a_{n-1} - conj(gamma_a) zeta_a gamma_n b_{n-1} z^(d_n + N 2^psi_n)
///
/// with zeta = xi^c and gamma = e^(j 2 pi k / H).
struct RecursionParams {
  int H = 2;
  std::vector<int> psi;
  std::vector<double> c_a;
  std::vector<double> c_b;
  std::vector<double> k_a;
  std::vector<double> k_b;
  std::vector<double> k;
  std::vector<int> d;
  SeedPair seed = SeedPair::trivial();

  static RecursionParams neutral(int m, int H, SeedPair seed = SeedPair::trivial());
  int steps() const { return static_cast<int>(psi.size()); }
  void validate() const;
};

/// Maps recursion parameters onto closed-form parameters producing the same
/// pair. Phases are reduced into [0, H).
EncoderParams recursion_to_closed_form(const RecursionParams& rp);

/// Evaluates the recursion literally on coefficient arrays.
EncodedPair direct_recursion(const RecursionParams& rp);

/// Reduces v into [0, H).
double reduce_phase(double v, int H);

}  // namespace csforge
