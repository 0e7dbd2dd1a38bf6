#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "boolean.hpp"

namespace csforge {

/// Selects, for one step of a two-branch recursion
///
///   f_n = O11(f_{n-1}) + O12(g_{n-1}) w^(2^psi_n)
///   g_n = O21(f_{n-1}) + O22(g_{n-1}) w^(2^psi_n),
///
/// which of the two step operators (index 0 or 1) sits in each slot.
struct ConfigurationVector {
  std::uint8_t v11 = 0;
  std::uint8_t v12 = 0;
  std::uint8_t v21 = 0;
  std::uint8_t v22 = 0;

  /// Packed form v11 v12 v21 v22 read as a 4-bit number (v11 most significant).
  static ConfigurationVector from_packed(unsigned packed);
  unsigned packed() const { return (v11 << 3) | (v12 << 2) | (v21 << 1) | v22; }

  friend bool operator==(const ConfigurationVector&, const ConfigurationVector&) = default;
};

/// The shift-exponent permutation psi of {0, ..., m-1}. Step n multiplies the
/// second term by w^(2^psi_n); the matching variable index is pi_n = m - psi_n.
class PermutationPsi {
 public:
  explicit PermutationPsi(std::vector<int> psi);
  /// Builds psi from pi, a permutation of {1, ..., m}.
  static PermutationPsi from_pi(const std::vector<int>& pi);

  int size() const { return static_cast<int>(psi_.size()); }
  /// psi_n for 1 <= n <= m.
  int psi(int n) const { return psi_.at(n - 1); }
  /// pi_n = m - psi_n for 1 <= n <= m.
  int pi(int n) const { return size() - psi(n); }
  const std::vector<int>& values() const { return psi_; }
  std::vector<int> pi_values() const;

 private:
  std::vector<int> psi_;
};

/// Validates that pi is a permutation of {1, ..., m}; throws InvalidArgument.
void validate_pi(const std::vector<int>& pi);

enum class Branch { F, G };

/// Boolean function whose table is the n-th construction sequence of the
/// final f (or g) polynomial: at position x it names the operator index that
/// step n contributed to the coefficient of w^x.
BooleanFunction construction_anf(int n, const ConfigurationVector& v, const PermutationPsi& psi,
                                 Branch branch);

/// Result of literally unrolling the recursion over abstract operators.
/// f_words[x][n-1] is the operator index step n applied to the coefficient
/// of w^x in f_m (likewise g_words).
struct OperatorWords {
  std::vector<std::vector<std::uint8_t>> f_words;
  std::vector<std::vector<std::uint8_t>> g_words;

  /// Construction sequence of step n for the given branch.
  std::vector<int> step_indices(int n, Branch branch) const;
};

inline constexpr int kMaxSymbolicDepth = 12;

/// Unrolls the recursion term by term with one configuration vector per step.
/// Throws LimitExceeded for m > kMaxSymbolicDepth.
OperatorWords symbolic_expand(std::span<const ConfigurationVector> configs,
                              const PermutationPsi& psi);

/// The individual operators the complementary-pair recursion is built from.
enum class OperatorKind {
  ScaleA,
  ScaleB,
  PhaseA,
  PhaseAConj,
  PhaseB,
  PhaseBConj,
  Sign,
  PhaseGolay,
  Shift,
  OrderA,
  OrderB,
};

/// Slot assignment of each operator inside the pair recursion.
ConfigurationVector operator_config(OperatorKind kind);
OperatorKind operator_kind_from_name(std::string_view name);

}  // namespace csforge
