#include "encoder.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "analysis.hpp"
#include "error.hpp"
#include "recursion.hpp"

namespace csforge {

SeedPair::SeedPair(std::vector<cplx> a, std::vector<cplx> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_.size() != b_.size())
    throw InvalidSeed("seed sequences must be nonempty and of equal length");
  for (const auto& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw InvalidSeed("seed has non-finite entries");
  for (const auto& v : b_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw InvalidSeed("seed has non-finite entries");
  const auto check = is_gcp(std::span<const cplx>(a_), std::span<const cplx>(b_), kPairTolerance);
  if (check.energy <= 0.0) throw InvalidSeed("seed pair is identically zero");
  if (!check.ok)
    throw InvalidSeed("seed pair is not complementary (max sidelobe sum " +
                      std::to_string(check.max_violation) + ")");
}

SeedPair SeedPair::trivial() { return SeedPair({cplx{1.0, 0.0}}, {cplx{1.0, 0.0}}); }

double reduce_phase(double v, int H) {
  double r = std::fmod(v, static_cast<double>(H));
  if (r < 0) r += H;
  if (r >= H) r -= H;
  return r;
}

EncoderParams EncoderParams::neutral(int m, int H, SeedPair seed) {
  EncoderParams p;
  p.m = m;
  p.H = H;
  p.seed = std::move(seed);
  for (int n = 1; n <= m; ++n) p.pi.push_back(n);
  p.e.assign(m, 0.0);
  p.k.assign(m, 0.0);
  p.d.assign(m, 0);
  return p;
}

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

bool in_phase_range(double v, int H) { return std::isfinite(v) && v >= 0.0 && v < H; }

}  // namespace

void EncoderParams::validate() const {
  require(m >= 1 && m <= kMaxVariables, "m must be in [1, 24]");
  require(H >= 2 && H % 2 == 0, "H must be a positive even integer");
  require(static_cast<int>(pi.size()) == m, "pi must have m entries");
  validate_pi(pi);
  require(static_cast<int>(e.size()) == m, "e must have m entries");
  require(static_cast<int>(k.size()) == m, "k must have m entries");
  require(static_cast<int>(d.size()) == m, "d must have m entries");
  for (double v : e) require(std::isfinite(v), "e entries must be finite");
  require(std::isfinite(e_prime), "e' must be finite");
  for (double v : k) require(in_phase_range(v, H), "k entries must lie in [0, H)");
  require(in_phase_range(k_prime, H), "k' must lie in [0, H)");
  require(in_phase_range(k_dprime, H), "k'' must lie in [0, H)");
  for (int v : d) require(v >= 0, "shifts d must be non-negative");
  require(output_length() <= kMaxSequenceLength, "output length exceeds the supported maximum");
}

std::size_t EncoderParams::output_length() const {
  std::size_t len = seed.length() << m;
  for (int v : d) len += static_cast<std::size_t>(v);
  return len;
}

ComponentFunctions build_component_functions(const EncoderParams& p) {
  p.validate();
  const int m = p.m;
  auto x = [&](int n) { return BooleanFunction::variable(m, p.pi[n - 1]); };

  BooleanFunction chain_r(m);  // sum_{n<m} e_n (x_{pi_n} + x_{pi_{n+1}})_2
  BooleanFunction chain_i(m);  // sum_{n<m} x_{pi_n} x_{pi_{n+1}}
  for (int n = 1; n < m; ++n) {
    chain_r = chain_r + combine_mod2(x(n), x(n + 1), p.e[n - 1]);
    chain_i = chain_i + x(n) * x(n + 1);
  }
  BooleanFunction linear(m);
  BooleanFunction shift(m);
  for (int n = 1; n <= m; ++n) {
    linear = linear + x(n) * p.k[n - 1];
    shift = shift + x(n) * static_cast<double>(p.d[n - 1]);
  }
  const double half = p.H / 2.0;
  const auto last = x(m);

  return ComponentFunctions{
      .f_r = last * p.e[m - 1] + chain_r + p.e_prime,
      .g_r = (1.0 - last) * p.e[m - 1] + chain_r + p.e_prime,
      .f_i = (chain_i * half + linear + p.k_prime).with_modulus(p.H),
      .g_i = ((last + chain_i) * half + linear + p.k_dprime).with_modulus(p.H),
      .f_s = shift,
  };
}

SeedChoice order_function(const EncoderParams& p, const BitVector& x) {
  if (x.size() != p.m) throw InvalidArgument("bit vector size does not match m");
  validate_pi(p.pi);
  return x.bit(p.pi[0]) == 0 ? SeedChoice::A : SeedChoice::B;
}

EncodedPair encode_pair(const EncoderParams& p) {
  const auto fn = build_component_functions(p);
  const auto fr = fn.f_r.to_sequence();
  const auto gr = fn.g_r.to_sequence();
  const auto fi = fn.f_i.to_sequence();
  const auto gi = fn.g_i.to_sequence();
  const auto fs = fn.f_s.to_sequence();

  const std::size_t n_seed = p.seed.length();
  const std::size_t len = p.output_length();
  EncodedPair out{ComplexSequence(len), ComplexSequence(len), false};
  std::vector<unsigned char> used(len, 0);

  const double w = 2.0 * std::numbers::pi / p.H;
  const std::uint32_t select_bit = 1U << (p.m - p.pi[0]);
  for (std::uint32_t x = 0; x < (1U << p.m); ++x) {
    const auto& seed = (x & select_bit) ? p.seed.b() : p.seed.a();
    const cplx fc = std::exp(w * fr[x]) * std::polar(1.0, w * fi[x]);
    const cplx gc = std::exp(w * gr[x]) * std::polar(1.0, w * gi[x]);
    const std::size_t base = static_cast<std::size_t>(std::llround(fs[x])) + x * n_seed;
    for (std::size_t t = 0; t < n_seed; ++t) {
      if (used[base + t]) out.overlap = true;
      used[base + t] = 1;
      out.c[base + t] += seed[t] * fc;
      out.d[base + t] += seed[t] * gc;
    }
  }
  return out;
}

RecursionParams RecursionParams::neutral(int m, int H, SeedPair seed) {
  RecursionParams rp;
  rp.H = H;
  rp.seed = std::move(seed);
  for (int n = 1; n <= m; ++n) rp.psi.push_back(m - n);
  rp.c_a.assign(m, 0.0);
  rp.c_b.assign(m, 0.0);
  rp.k_a.assign(m, 0.0);
  rp.k_b.assign(m, 0.0);
  rp.k.assign(m, 0.0);
  rp.d.assign(m, 0);
  return rp;
}

void RecursionParams::validate() const {
  const int m = steps();
  require(m >= 1 && m <= kMaxVariables, "number of steps must be in [1, 24]");
  require(H >= 2 && H % 2 == 0, "H must be a positive even integer");
  PermutationPsi{psi};
  for (const auto* v : {&c_a, &c_b, &k_a, &k_b, &k}) {
    require(static_cast<int>(v->size()) == m, "every per-step vector must have m entries");
    for (double x : *v) require(std::isfinite(x), "recursion parameters must be finite");
  }
  require(static_cast<int>(d.size()) == m, "d must have m entries");
  for (int v : d) require(v >= 0, "shifts d must be non-negative");
}

EncoderParams recursion_to_closed_form(const RecursionParams& rp) {
  rp.validate();
  const int m = rp.steps();
  const int H = rp.H;
  EncoderParams p;
  p.m = m;
  p.H = H;
  p.seed = rp.seed;
  p.pi = PermutationPsi(rp.psi).pi_values();
  p.e.resize(m);
  p.k.resize(m);
  p.d = rp.d;
  double ka_sum = 0.0;
  for (int n = 0; n < m; ++n) {
    p.e[n] = rp.c_b[n] - rp.c_a[n];
    p.e_prime += rp.c_a[n];
    double kn = rp.k[n] + rp.k_b[n] - rp.k_a[n];
    if (n > 0) kn -= rp.k_b[n - 1] + rp.k_a[n - 1];
    p.k[n] = reduce_phase(kn, H);
    ka_sum += rp.k_a[n];
  }
  p.k_prime = reduce_phase(ka_sum, H);
  p.k_dprime = reduce_phase(ka_sum - rp.k_a[m - 1] - rp.k_b[m - 1], H);
  return p;
}

EncodedPair direct_recursion(const RecursionParams& rp) {
  rp.validate();
  const double w = 2.0 * std::numbers::pi / rp.H;
  const std::size_t n_seed = rp.seed.length();
  std::vector<cplx> a = rp.seed.a();
  std::vector<cplx> b = rp.seed.b();
  // Positions covered by some seed block; a collision means two blocks summed.
  std::vector<bool> used(n_seed, true);
  bool overlap = false;

  for (int n = 0; n < rp.steps(); ++n) {
    const double zeta_a = std::exp(w * rp.c_a[n]);
    const double zeta_b = std::exp(w * rp.c_b[n]);
    const cplx gamma_a = std::polar(1.0, w * rp.k_a[n]);
    const cplx gamma_b = std::polar(1.0, w * rp.k_b[n]);
    const cplx gamma_n = std::polar(1.0, w * rp.k[n]);
    const std::size_t shift = static_cast<std::size_t>(rp.d[n]) + (n_seed << rp.psi[n]);
    const std::size_t len = shift + b.size();
    if (len > kMaxSequenceLength) throw LimitExceeded("recursion output too long");

    std::vector<cplx> na(len), nb(len);
    std::vector<bool> next_used(len, false);
    for (std::size_t i = 0; i < used.size(); ++i) next_used[i] = used[i];
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (!used[i]) continue;
      if (next_used[shift + i]) overlap = true;
      next_used[shift + i] = true;
    }
    used = std::move(next_used);
    for (std::size_t i = 0; i < a.size(); ++i) {
      na[i] += gamma_a * zeta_a * a[i];
      nb[i] += std::conj(gamma_b) * zeta_b * a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      na[shift + i] += gamma_b * zeta_b * gamma_n * b[i];
      nb[shift + i] -= std::conj(gamma_a) * zeta_a * gamma_n * b[i];
    }
    a = std::move(na);
    b = std::move(nb);
  }
  return {ComplexSequence(std::move(a)), ComplexSequence(std::move(b)), overlap};
}

}  // namespace csforge
