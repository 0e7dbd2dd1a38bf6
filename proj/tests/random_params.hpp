#pragma once

// Random parameter generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "encoder.hpp"

namespace csforge::testing {

inline cplx unit_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, u(rng));
}

/// Random complementary seed pair of length n in {1, 2, 3}. With
/// equal_energy both sequences carry the same energy (always so for n = 3).
inline SeedPair random_seed(std::mt19937_64& rng, int n, bool equal_energy = false) {
  std::uniform_real_distribution<double> amp(0.5, 2.0);
  const double sa = amp(rng);
  const double sb = equal_energy ? sa : amp(rng);
  switch (n) {
    case 1: return SeedPair({sa * unit_phase(rng)}, {sb * unit_phase(rng)});
    case 2: {
      // conj(a0) a1 + conj(b0) b1 = 0
      const cplx a0 = sa * unit_phase(rng), a1 = sa * unit_phase(rng);
      const cplx b0 = sb * unit_phase(rng);
      const cplx b1 = -std::conj(a0) * a1 / std::conj(b0);
      return SeedPair({a0, a1}, {b0, b1});
    }
    default: {
      // (r, rj, r), (q, q, -q) is complementary only for |r| = |q|.
      const cplx ra = sa * unit_phase(rng), rb = sa * unit_phase(rng);
      return SeedPair({ra, ra * cplx{0, 1}, ra}, {rb, rb, -rb});
    }
  }
}

inline std::vector<int> random_pi(std::mt19937_64& rng, int m) {
  std::vector<int> pi(m);
  std::iota(pi.begin(), pi.end(), 1);
  std::shuffle(pi.begin(), pi.end(), rng);
  return pi;
}

/// Shifts satisfying the non-overlap condition for pi.
inline std::vector<int> disjoint_shifts(std::mt19937_64& rng, const std::vector<int>& pi, int slack) {
  const int m = static_cast<int>(pi.size());
  std::vector<int> shift_of(m + 1, 0);
  int tail = 0;
  for (int a = m; a >= 1; --a) {
    shift_of[a] = tail + static_cast<int>(rng() % (slack + 1));
    tail += shift_of[a];
  }
  std::vector<int> d(m);
  for (int n = 0; n < m; ++n) d[n] = shift_of[pi[n]];
  return d;
}

enum class Shifts { None, Any, Disjoint };

inline EncoderParams random_params(std::mt19937_64& rng, int m, int H, SeedPair seed, Shifts shifts) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, static_cast<double>(H));
  auto p = EncoderParams::neutral(m, H, std::move(seed));
  p.pi = random_pi(rng, m);
  for (auto& v : p.e) v = amp(rng);
  p.e_prime = amp(rng);
  for (auto& v : p.k) v = phase(rng);
  p.k_prime = phase(rng);
  p.k_dprime = phase(rng);
  switch (shifts) {
    case Shifts::None: break;
    case Shifts::Any:
      for (auto& v : p.d) v = static_cast<int>(rng() % 6);
      break;
    case Shifts::Disjoint: p.d = disjoint_shifts(rng, p.pi, 4); break;
  }
  return p;
}

inline RecursionParams random_recursion(std::mt19937_64& rng, int m, int H, SeedPair seed, bool shifts) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(-static_cast<double>(H), static_cast<double>(H));
  auto rp = RecursionParams::neutral(m, H, std::move(seed));
  std::vector<int> psi(m);
  std::iota(psi.begin(), psi.end(), 0);
  std::shuffle(psi.begin(), psi.end(), rng);
  rp.psi = psi;
  for (int n = 0; n < m; ++n) {
    rp.c_a[n] = amp(rng);
    rp.c_b[n] = amp(rng);
    rp.k_a[n] = phase(rng);
    rp.k_b[n] = phase(rng);
    rp.k[n] = phase(rng);
    rp.d[n] = shifts ? static_cast<int>(rng() % 5) : 0;
  }
  return rp;
}

/// max |x - y| relative to max |y|.
inline double relative_error(const ComplexSequence& x, const ComplexSequence& y) {
  if (x.size() != y.size()) return INFINITY;
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    err = std::max(err, std::abs(x[i] - y[i]));
    scale = std::max(scale, std::abs(y[i]));
  }
  return scale > 0.0 ? err / scale : err;
}

inline ComplexSequence concat(std::initializer_list<std::vector<cplx>> parts) {
  std::vector<cplx> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return ComplexSequence(std::move(out));
}

inline std::vector<cplx> scaled(const std::vector<cplx>& v, double s) {
  std::vector<cplx> out(v);
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace csforge::testing
