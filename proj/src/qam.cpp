#include "qam.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <unordered_set>

#include "error.hpp"
#include "recursion.hpp"

namespace csforge {

namespace {

// Converts an angle or log-amplitude into an exponent of xi = e^(2 pi / 4).
constexpr double kExp = kQamH / (2.0 * std::numbers::pi);

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw LimitExceeded("count overflows 64 bits");
  return r;
}

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw LimitExceeded("count overflows 64 bits");
  return r;
}

void check_s(int s) {
  if (s < 1 || s > 1024) throw InvalidArgument("s must be in [1, 1024]");
}

void check_m(int m) {
  if (m < 1 || m > kMaxVariables) throw InvalidArgument("m must be in [1, 24]");
}

double log_gamma(int u, int v, int s) { return kExp * std::log(geometry(u, v, s).gamma); }
double rot(int u, int v, int s) { return kExp * geometry(u, v, s).phi; }

}  // namespace

QamGeometry QamGeometry::of(int s) {
  check_s(s);
  return {s, s * s, s, s * (s - 1) / 2, s * (s + 1) / 2};
}

LatticeGeometry geometry(int u, int v, int s) {
  check_s(s);
  if (u < 1 || u > s || v < 1 || v > s)
    throw InvalidArgument("lattice indices must lie in [1, s]");
  const double x = 2.0 * u - 1.0;
  const double y = 2.0 * v - 1.0;
  LatticeGeometry g;
  g.d = std::hypot(x, y);
  g.gamma = g.d / std::numbers::sqrt2;
  g.theta = std::atan(y / x);
  g.phi = std::numbers::pi / 4.0 - g.theta;
  g.mu = 2.0 * g.phi;
  return g;
}

std::string_view rule_name(QamRule r) {
  switch (r) {
    case QamRule::Green: return "green";
    case QamRule::Yellow: return "yellow";
    case QamRule::Blue: return "blue";
    case QamRule::Cyan: return "cyan";
    case QamRule::Orange: return "orange";
  }
  return "?";
}

QamRule rule_from_name(std::string_view name) {
  for (auto r : kAllRules)
    if (rule_name(r) == name) return r;
  throw InvalidArgument("unknown rule '" + std::string(name) + "'");
}

int rule_index_count(QamRule r) {
  switch (r) {
    case QamRule::Blue: return 3;
    case QamRule::Cyan: return 4;
    default: return 2;
  }
}

void QamRuleSpec::set_indices(const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) != rule_index_count(rule))
    throw InvalidArgument("rule " + std::string(rule_name(rule)) + " takes " +
                          std::to_string(rule_index_count(rule)) + " indices");
  switch (rule) {
    case QamRule::Blue: u = idx[0], v = idx[1], w = idx[2]; break;
    case QamRule::Cyan: u = idx[0], t = idx[1], v = idx[2], w = idx[3]; break;
    default: u = idx[0], v = idx[1]; break;
  }
}

std::vector<int> QamRuleSpec::indices() const {
  switch (rule) {
    case QamRule::Blue: return {u, v, w};
    case QamRule::Cyan: return {u, t, v, w};
    default: return {u, v};
  }
}

void QamRuleSpec::validate(int m) const {
  check_s(s);
  check_m(m);
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidArgument(what);
  };
  for (int i : indices()) require(i >= 1 && i <= s, "lattice indices must lie in [1, s]");
  switch (rule) {
    case QamRule::Green: break;
    case QamRule::Yellow: require(u != v, "yellow rule needs u != v"); break;
    case QamRule::Blue: require(v > w, "blue rule needs v > w"); break;
    case QamRule::Cyan:
      require(u > t, "cyan rule needs u > t");
      require(v > w, "cyan rule needs v > w");
      break;
    case QamRule::Orange: require(u > v, "orange rule needs u > v"); break;
  }
  require(ell >= 1 && ell <= m, "ell must lie in [1, m]");
  require(sign_a == 1 || sign_a == -1, "signs must be +1 or -1");
  require(sign_b == 1 || sign_b == -1, "signs must be +1 or -1");
  require(static_cast<int>(base_k.size()) == m, "base_k must have m entries");
  for (int k : base_k) require(k >= 0 && k < 4, "base phases must lie in Z_4");
  require(z >= 0 && z < 4, "z must lie in Z_4");
}

RecursionParams rule_recursion_params(const QamRuleSpec& spec, const std::vector<int>& pi,
                                      SeedPair seed) {
  const int m = static_cast<int>(pi.size());
  spec.validate(m);
  if (spec.rule == QamRule::Green || spec.rule == QamRule::Orange)
    throw InvalidArgument("green and orange rules map directly onto closed-form parameters");
  auto rp = RecursionParams::neutral(m, kQamH, std::move(seed));
  rp.psi = PermutationPsi::from_pi(pi).values();
  for (int n = 0; n < m; ++n) rp.k[n] = spec.base_k[n];

  const int l = spec.ell - 1;
  const int s = spec.s;
  switch (spec.rule) {
    case QamRule::Yellow:
      rp.c_a[l] = log_gamma(spec.u, spec.u, s);
      rp.c_b[l] = log_gamma(spec.v, spec.v, s);
      break;
    case QamRule::Blue:
      if (!spec.blue_swap) {
        rp.c_a[l] = log_gamma(spec.u, spec.u, s);
        rp.c_b[l] = log_gamma(spec.v, spec.w, s);
        rp.k_b[l] = spec.sign_b * rot(spec.v, spec.w, s);
      } else {
        rp.c_a[l] = log_gamma(spec.v, spec.w, s);
        rp.c_b[l] = log_gamma(spec.u, spec.u, s);
        rp.k_a[l] = spec.sign_a * rot(spec.v, spec.w, s);
      }
      break;
    case QamRule::Cyan:
      rp.c_a[l] = log_gamma(spec.u, spec.t, s);
      rp.c_b[l] = log_gamma(spec.v, spec.w, s);
      rp.k_a[l] = spec.sign_a * rot(spec.u, spec.t, s);
      rp.k_b[l] = spec.sign_b * rot(spec.v, spec.w, s);
      break;
    default: break;
  }
  return rp;
}

EncoderParams rule_params(const QamRuleSpec& spec, int m, const std::vector<int>& pi, SeedPair seed,
                          int H) {
  if (H != kQamH) throw InvalidArgument("QAM rules require H = 4");
  if (static_cast<int>(pi.size()) != m) throw InvalidArgument("pi must have m entries");
  spec.validate(m);
  validate_pi(pi);

  if (spec.rule == QamRule::Green || spec.rule == QamRule::Orange) {
    auto p = EncoderParams::neutral(m, kQamH, std::move(seed));
    p.pi = pi;
    for (int n = 0; n < m; ++n) p.k[n] = spec.base_k[n];
    p.e_prime = log_gamma(spec.u, spec.v, spec.s);
    if (spec.rule == QamRule::Green) {
      p.k_prime = reduce_phase(spec.z - rot(spec.u, spec.v, spec.s), kQamH);
    } else {
      const double mu = kExp * geometry(spec.u, spec.v, spec.s).mu;
      const int l = spec.ell - 1;
      p.k[l] = reduce_phase(p.k[l] - spec.sign_a * mu, kQamH);
      p.k_prime = reduce_phase(spec.z + spec.sign_a * rot(spec.u, spec.v, spec.s), kQamH);
    }
    // The mate gets the same rotation so that it lands on the grid as well.
    p.k_dprime = p.k_prime;
    return p;
  }

  auto p = recursion_to_closed_form(rule_recursion_params(spec, pi, std::move(seed)));
  p.k_prime = reduce_phase(p.k_prime + spec.z, kQamH);
  p.k_dprime = reduce_phase(p.k_dprime + spec.z, kQamH);
  return p;
}

bool is_qam_point(cplx value, int s, double tol) {
  check_s(s);
  // Nearest odd integer, clamped to the constellation edge.
  auto nearest = [s](double x) {
    double odd = 2.0 * std::floor(x / 2.0) + 1.0;
    return std::clamp(odd, -(2.0 * s - 1.0), 2.0 * s - 1.0);
  };
  const cplx p{nearest(value.real()), nearest(value.imag())};
  return std::abs(value - p) <= tol;
}

std::uint64_t count_unit(int m, SeedClass n_class) {
  check_m(m);
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f = mul(f, i);
  if (2 * (m + 1) > 62) throw LimitExceeded("count overflows 64 bits");
  const std::uint64_t a0 = mul(f, std::uint64_t{1} << (2 * (m + 1)));
  return n_class == SeedClass::Unit ? a0 / 2 : a0;
}

SequenceCount count_sequences(QamRule rule, int s, int m, SeedClass n_class) {
  check_s(s);
  check_m(m);
  const std::uint64_t S = s;
  const std::uint64_t factor = n_class == SeedClass::Unit ? m + 1 : m;
  std::uint64_t units = 0;
  switch (rule) {
    case QamRule::Green: units = mul(S, S); break;
    case QamRule::Yellow: units = mul(mul(S, S - 1), factor); break;
    case QamRule::Blue: units = mul(mul(mul(2 * S, S), S - 1), factor); break;
    case QamRule::Cyan:
      units = s < 2 ? 0 : mul(mul(mul(mul(S + 1, S), S - 1), S - 2), factor);
      break;
    case QamRule::Orange: units = mul(mul(S, S - 1), m); break;
  }
  const auto unit = count_unit(m, n_class);
  return {units, unit, mul(units, unit)};
}

SequenceCount total_count(int s, int m, SeedClass n_class) {
  check_s(s);
  check_m(m);
  const std::uint64_t S = s;
  const std::uint64_t quartic = mul(mul(S, S), mul(S, S) - 1);  // s^4 - s^2
  const std::uint64_t units = n_class == SeedClass::Unit ? add(mul(quartic, m + 1), S)
                                                         : add(mul(quartic, m), mul(S, S));
  const auto unit = count_unit(m, n_class);
  return {units, unit, mul(units, unit)};
}

std::uint64_t enumeration_limit() {
  if (const char* env = std::getenv("CS_FORGE_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultEnumLimit;
}

namespace {

// Lattice index tuples a rule admits, in lexicographic order.
std::vector<std::vector<int>> index_tuples(QamRule rule, int s) {
  std::vector<std::vector<int>> out;
  switch (rule) {
    case QamRule::Green:
      for (int u = 1; u <= s; ++u)
        for (int v = 1; v <= s; ++v) out.push_back({u, v});
      break;
    case QamRule::Yellow:
      for (int u = 1; u <= s; ++u)
        for (int v = 1; v <= s; ++v)
          if (u != v) out.push_back({u, v});
      break;
    case QamRule::Blue:
      for (int u = 1; u <= s; ++u)
        for (int v = 1; v <= s; ++v)
          for (int w = 1; w < v; ++w) out.push_back({u, v, w});
      break;
    case QamRule::Cyan:
      // Two distinct off-diagonal points; equal points would only rescale
      // the yellow/blue families.
      for (int u = 1; u <= s; ++u)
        for (int t = 1; t < u; ++t)
          for (int v = 1; v <= s; ++v)
            for (int w = 1; w < v; ++w)
              if (u != v || t != w) out.push_back({u, t, v, w});
      break;
    case QamRule::Orange:
      for (int u = 1; u <= s; ++u)
        for (int v = 1; v < u; ++v) out.push_back({u, v});
      break;
  }
  return out;
}

// (sign_a, sign_b, blue_swap) variants per rule.
struct Variant {
  int sign_a, sign_b;
  bool swap;
};

std::vector<Variant> variants(QamRule rule) {
  switch (rule) {
    case QamRule::Blue: return {{1, 1, false}, {1, -1, false}, {1, 1, true}, {-1, 1, true}};
    case QamRule::Cyan: return {{1, 1, false}, {1, -1, false}, {-1, 1, false}, {-1, -1, false}};
    case QamRule::Orange: return {{1, 1, false}, {-1, 1, false}};
    default: return {{1, 1, false}};
  }
}

bool uses_ell(QamRule rule) { return rule != QamRule::Green; }

}  // namespace

std::uint64_t enumeration_size(QamRule rule, int s, int m, const EnumerationOptions& opt) {
  check_s(s);
  check_m(m);
  std::uint64_t perms = 1;
  if (!opt.pi)
    for (int i = 2; i <= m; ++i) perms = mul(perms, i);
  if (2 * (m + 1) > 62) throw LimitExceeded("enumeration size overflows 64 bits");
  std::uint64_t n = mul(perms, std::uint64_t{1} << (2 * (m + 1)));
  n = mul(n, index_tuples(rule, s).size());
  n = mul(n, variants(rule).size());
  if (uses_ell(rule)) n = mul(n, m);
  return n;
}

void enumerate_rule(QamRule rule, int s, int m, const SeedPair& seed, const RuleVisitor& visit,
                    const EnumerationOptions& opt) {
  const std::uint64_t limit = opt.limit ? opt.limit : enumeration_limit();
  const std::uint64_t size = enumeration_size(rule, s, m, opt);
  if (size > limit)
    throw LimitExceeded("enumeration would visit " + std::to_string(size) +
                        " parameter sets, above the limit of " + std::to_string(limit));

  std::vector<int> pi(m);
  if (opt.pi) {
    if (static_cast<int>(opt.pi->size()) != m) throw InvalidArgument("pi must have m entries");
    validate_pi(*opt.pi);
    pi = *opt.pi;
  } else {
    for (int i = 0; i < m; ++i) pi[i] = i + 1;
  }
  const auto tuples = index_tuples(rule, s);
  const auto vars = variants(rule);
  const int ells = uses_ell(rule) ? m : 1;

  QamRuleSpec spec;
  spec.rule = rule;
  spec.s = s;
  spec.base_k.assign(m, 0);
  do {
    for (std::uint32_t kk = 0; kk < (1U << (2 * m)); ++kk) {
      for (int n = 0; n < m; ++n) spec.base_k[n] = (kk >> (2 * (m - 1 - n))) & 3;
      for (spec.z = 0; spec.z < 4; ++spec.z)
        for (const auto& idx : tuples) {
          spec.set_indices(idx);
          for (spec.ell = 1; spec.ell <= ells; ++spec.ell)
            for (const auto& var : vars) {
              spec.sign_a = var.sign_a;
              spec.sign_b = var.sign_b;
              spec.blue_swap = var.swap;
              const auto params = rule_params(spec, m, pi, seed);
              visit(spec, pi, params, encode_pair(params));
            }
        }
    }
  } while (!opt.pi && std::next_permutation(pi.begin(), pi.end()));
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<long long>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

std::vector<long long> dedup_key(const ComplexSequence& c) {
  std::vector<long long> key;
  key.reserve(2 * c.size());
  for (const auto& v : c.values()) {
    key.push_back(std::llround(v.real() * 1e12));
    key.push_back(std::llround(v.imag() * 1e12));
  }
  return key;
}

}  // namespace

DedupReport dedup_rule(QamRule rule, int s, int m, const SeedPair& seed, const EnumerationOptions& opt) {
  std::unordered_set<std::vector<long long>, KeyHash> seen;
  DedupReport report;
  enumerate_rule(
      rule, s, m, seed,
      [&](const QamRuleSpec&, const std::vector<int>&, const EncoderParams&, const EncodedPair& pair) {
        seen.insert(dedup_key(pair.c));
        ++report.visited;
      },
      opt);
  report.distinct = seen.size();
  return report;
}

std::vector<ComplexSequence> distinct_rule_outputs(QamRule rule, int s, int m, const SeedPair& seed,
                                                   const EnumerationOptions& opt) {
  std::unordered_set<std::vector<long long>, KeyHash> seen;
  std::vector<ComplexSequence> out;
  enumerate_rule(
      rule, s, m, seed,
      [&](const QamRuleSpec&, const std::vector<int>&, const EncoderParams&, const EncodedPair& pair) {
        if (seen.insert(dedup_key(pair.c)).second) out.push_back(pair.c);
      },
      opt);
  return out;
}

}  // namespace csforge
