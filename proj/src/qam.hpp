#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "encoder.hpp"

namespace csforge {

/// All QAM rules work on quaternary phases.
inline constexpr int kQamH = 4;

/// Counts attached to a 4s^2-QAM constellation.
struct QamGeometry {
  int s = 1;
  int n_quad = 1;  // s^2 points per quadrant
  int n_h = 1;     // s diagonal points
  int n_nh = 0;    // s(s-1)/2 points strictly on one side of the diagonal
  int n_tri = 1;   // s(s+1)/2 points on or below the diagonal

  static QamGeometry of(int s);
};

/// Polar description of the first-quadrant point (2u-1) + j(2v-1).
struct LatticeGeometry {
  double d = 0.0;      // distance from the origin
  double gamma = 0.0;  // d / sqrt(2), scale relative to QPSK
  double theta = 0.0;  // atan((2v-1) / (2u-1))
  double phi = 0.0;    // pi/4 - theta, rotation relative to QPSK
  double mu = 0.0;     // 2 phi
};

LatticeGeometry geometry(int u, int v, int s);

enum class QamRule { Green, Yellow, Blue, Cyan, Orange };

inline constexpr QamRule kAllRules[] = {QamRule::Green, QamRule::Yellow, QamRule::Blue,
                                        QamRule::Cyan, QamRule::Orange};

std::string_view rule_name(QamRule r);
QamRule rule_from_name(std::string_view name);
/// Number of lattice indices the rule takes: 2 for green/yellow/orange,
/// 3 for blue (u, v, w), 4 for cyan (u, t, v, w).
int rule_index_count(QamRule r);

/// One concrete choice of rule parameters.
struct QamRuleSpec {
  QamRule rule = QamRule::Green;
  int s = 1;
  int u = 1, v = 1, w = 1, t = 1;
  /// Step that carries the scaling/rotation (yellow, blue, cyan, orange), 1..m.
  int ell = 1;
  /// Rotation sign of the a-half (blue half B, cyan) or of the displacement (orange).
  int sign_a = 1;
  /// Rotation sign of the b-half (blue half A, cyan).
  int sign_b = 1;
  /// Blue only: false puts the rotated point in the b-half, true in the a-half.
  bool blue_swap = false;
  /// Base phases k_n in Z_4, one per step.
  std::vector<int> base_k;
  /// Quadrant selector z in Z_4.
  int z = 0;

  /// Fills u, v, w, t from the rule's index list (see rule_index_count).
  void set_indices(const std::vector<int>& indices);
  std::vector<int> indices() const;

  /// Throws InvalidArgument for a violated index constraint.
  void validate(int m) const;
};

/// Recursion parameters for the yellow, blue and cyan rules (before the
/// quadrant selector z is applied).
RecursionParams rule_recursion_params(const QamRuleSpec& spec, const std::vector<int>& pi,
                                      SeedPair seed);

/// Closed-form parameters of a rule output over pi.
EncoderParams rule_params(const QamRuleSpec& spec, int m, const std::vector<int>& pi,
                          SeedPair seed = SeedPair::trivial(), int H = kQamH);

/// Lattice normalisation: rule outputs are built on the QPSK alphabet
/// {1, j, -1, -j}, which maps onto the 4s^2-QAM grid after multiplying by 1 + j.
inline cplx lattice_normalize(cplx v) { return v * cplx{1.0, 1.0}; }

/// True iff value lies within tol of some point (2u-1) + j(2v-1) with
/// u, v in {-s+1, ..., s}.
bool is_qam_point(cplx value, int s, double tol = 1e-6);

enum class SeedClass { Unit, Longer };

struct SequenceCount {
  std::uint64_t units = 0;       // multiple of G0 (N = 1) or A0 (N > 1)
  std::uint64_t unit_value = 0;  // G0 or A0
  std::uint64_t absolute = 0;
};

/// G0 = (m!/2) 4^(m+1) and A0 = m! 4^(m+1).
std::uint64_t count_unit(int m, SeedClass n_class);
/// Closed-form number of sequences a rule generates. Throws LimitExceeded
/// on 64-bit overflow.
SequenceCount count_sequences(QamRule rule, int s, int m, SeedClass n_class);
/// ((s^4 - s^2)(m+1) + s) G0 for N = 1 and ((s^4 - s^2) m + s^2) A0 for N > 1.
SequenceCount total_count(int s, int m, SeedClass n_class);

/// Default enumeration guard; the CS_FORGE_MAX_ENUM environment variable
/// overrides it.
inline constexpr std::uint64_t kDefaultEnumLimit = 10'000'000;
std::uint64_t enumeration_limit();

struct EnumerationOptions {
  /// Restrict to a single permutation instead of all m!.
  std::optional<std::vector<int>> pi;
  std::uint64_t limit = 0;  // 0 means enumeration_limit()
};

/// Number of parameter combinations enumerate_rule would visit.
std::uint64_t enumeration_size(QamRule rule, int s, int m, const EnumerationOptions& opt = {});

using RuleVisitor = std::function<void(const QamRuleSpec&, const std::vector<int>& pi,
                                       const EncoderParams&, const EncodedPair&)>;

/// Visits every parameter combination the rule admits in lexicographic order:
/// pi, then base k, then z, then lattice indices, then ell, then signs.
/// Throws LimitExceeded if the combination count exceeds the guard.
void enumerate_rule(QamRule rule, int s, int m, const SeedPair& seed, const RuleVisitor& visit,
                    const EnumerationOptions& opt = {});

struct DedupReport {
  std::uint64_t visited = 0;
  std::uint64_t distinct = 0;
};

/// Distinct first sequences c, keyed on the values rounded to 12 decimals.
DedupReport dedup_rule(QamRule rule, int s, int m, const SeedPair& seed,
                       const EnumerationOptions& opt = {});

/// The distinct first sequences themselves, in enumeration order.
std::vector<ComplexSequence> distinct_rule_outputs(QamRule rule, int s, int m, const SeedPair& seed,
                                                   const EnumerationOptions& opt = {});

}  // namespace csforge
