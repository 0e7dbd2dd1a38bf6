#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "sequence.hpp"

namespace csforge {

/// Aperiodic autocorrelation rho(k) = sum_i conj(a_i) a_{i+k} for
/// -(N-1) <= k <= N-1.
class ApacProfile {
 public:
  ApacProfile(std::vector<cplx> nonneg);

  /// Sequence length N.
  std::size_t length() const { return nonneg_.size(); }
  /// rho(k); negative lags come from Hermitian symmetry.
  cplx at(long k) const;
  /// rho(0), ..., rho(N-1).
  const std::vector<cplx>& nonnegative() const { return nonneg_; }

 private:
  std::vector<cplx> nonneg_;
};

ApacProfile apac(std::span<const cplx> seq);
inline ApacProfile apac(const ComplexSequence& s) { return apac(std::span<const cplx>(s.values())); }

struct GcpCheck {
  bool ok = false;
  /// max over k != 0 of |rho_a(k) + rho_b(k)|.
  double max_violation = 0.0;
  /// rho_a(0) + rho_b(0).
  double energy = 0.0;
};

/// Complementarity test: ok iff max_violation <= tol * energy.
GcpCheck is_gcp(std::span<const cplx> a, std::span<const cplx> b, double tol = 1e-9);
inline GcpCheck is_gcp(const ComplexSequence& a, const ComplexSequence& b, double tol = 1e-9) {
  return is_gcp(std::span<const cplx>(a.values()), std::span<const cplx>(b.values()), tol);
}

/// 10 log10((rho(0) + 2 sum_{k>=1} |rho(k)|) / rho(0)).
double papr_bound_db(std::span<const cplx> seq);

inline constexpr int kDefaultOversampling = 16;

/// |S(t)|^2 sampled at t = n / (L * N) over one symbol, where
/// S(t) = sum_i a_i e^(j 2 pi i t).
struct PowerTrace {
  int oversampling = kDefaultOversampling;
  std::vector<double> power;
  double peak = 0.0;
  /// Time average of |S|^2 over the symbol, equal to rho(0).
  double mean = 0.0;

  /// Header `t_norm,power`, then one row per sample with t_norm in [0, 1).
  void write_csv(std::ostream& os) const;
};

struct PaprMeasurement {
  double papr_db = 0.0;
  PowerTrace trace;
};

/// Oversampled PAPR via a zero-padded inverse DFT of length L * N.
PaprMeasurement papr_oversampled(std::span<const cplx> seq, int oversampling = kDefaultOversampling);

/// True iff the shift encoder cannot make two blocks collide: for every
/// 1 <= a <= m-1, the shift attached to variable x_a is at least the sum of
/// the shifts attached to x_{a+1}, ..., x_m. d must be non-negative.
bool check_no_overlap(std::span<const int> d, std::span<const int> pi);

/// Maximal runs [begin, end) of exactly nonzero entries.
std::vector<std::pair<std::size_t, std::size_t>> support_clusters(std::span<const cplx> seq);

}  // namespace csforge
