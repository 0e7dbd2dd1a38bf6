#include "recursion.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace csforge {

ConfigurationVector ConfigurationVector::from_packed(unsigned packed) {
  if (packed > 15) throw InvalidArgument("configuration vector must fit in 4 bits");
  return {static_cast<std::uint8_t>((packed >> 3) & 1), static_cast<std::uint8_t>((packed >> 2) & 1),
          static_cast<std::uint8_t>((packed >> 1) & 1), static_cast<std::uint8_t>(packed & 1)};
}

namespace {

void check_bits(const ConfigurationVector& v) {
  if (v.v11 > 1 || v.v12 > 1 || v.v21 > 1 || v.v22 > 1)
    throw InvalidArgument("configuration vector entries must be 0 or 1");
}

}  // namespace

PermutationPsi::PermutationPsi(std::vector<int> psi) : psi_(std::move(psi)) {
  const int m = size();
  if (m < 1 || m > kMaxVariables) throw InvalidArgument("psi must have between 1 and 24 entries");
  std::vector<bool> seen(m, false);
  for (int p : psi_) {
    if (p < 0 || p >= m || seen[p])
      throw InvalidArgument("psi is not a permutation of {0, ..., " + std::to_string(m - 1) + "}");
    seen[p] = true;
  }
}

PermutationPsi PermutationPsi::from_pi(const std::vector<int>& pi) {
  validate_pi(pi);
  const int m = static_cast<int>(pi.size());
  std::vector<int> psi(pi.size());
  std::transform(pi.begin(), pi.end(), psi.begin(), [m](int p) { return m - p; });
  return PermutationPsi(std::move(psi));
}

std::vector<int> PermutationPsi::pi_values() const {
  std::vector<int> pi(psi_.size());
  for (int n = 1; n <= size(); ++n) pi[n - 1] = this->pi(n);
  return pi;
}

void validate_pi(const std::vector<int>& pi) {
  const int m = static_cast<int>(pi.size());
  if (m < 1 || m > kMaxVariables) throw InvalidArgument("pi must have between 1 and 24 entries");
  std::vector<bool> seen(m + 1, false);
  for (int p : pi) {
    if (p < 1 || p > m || seen[p])
      throw InvalidArgument("pi is not a permutation of {1, ..., " + std::to_string(m) + "}");
    seen[p] = true;
  }
}

BooleanFunction construction_anf(int n, const ConfigurationVector& v, const PermutationPsi& psi,
                                 Branch branch) {
  check_bits(v);
  const int m = psi.size();
  if (n < 1 || n > m) throw InvalidArgument("step index must be in [1, m]");

  const auto x = BooleanFunction::variable(m, psi.pi(n));
  const auto not_x = 1.0 - x;
  if (n == m) {
    // The last step decides the branch directly.
    return branch == Branch::F ? not_x * v.v11 + x * v.v12 : not_x * v.v21 + x * v.v22;
  }
  // Below the last step both branches agree: x_{pi_n} picks the column
  // (f_{n-1} or g_{n-1}), x_{pi_{n+1}} picks the row (which of f_n, g_n
  // the coefficient travelled through at step n+1).
  const auto y = BooleanFunction::variable(m, psi.pi(n + 1));
  const auto not_y = 1.0 - y;
  return not_x * not_y * v.v11 + x * not_y * v.v12 + not_x * y * v.v21 + x * y * v.v22;
}

std::vector<int> OperatorWords::step_indices(int n, Branch branch) const {
  const auto& words = branch == Branch::F ? f_words : g_words;
  std::vector<int> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.at(n - 1));
  return out;
}

OperatorWords symbolic_expand(std::span<const ConfigurationVector> configs,
                              const PermutationPsi& psi) {
  const int m = psi.size();
  if (m > kMaxSymbolicDepth)
    throw LimitExceeded("symbolic expansion is limited to m <= " + std::to_string(kMaxSymbolicDepth));
  if (static_cast<int>(configs.size()) != m)
    throw InvalidArgument("need one configuration vector per step");
  for (const auto& v : configs) check_bits(v);

  // A polynomial in w whose coefficients are operator words; a missing
  // degree has an empty optional slot.
  struct Term {
    bool present = false;
    std::vector<std::uint8_t> word;
  };
  using Poly = std::vector<Term>;

  const std::size_t size = std::size_t{1} << m;
  Poly f(size), g(size);
  f[0].present = g[0].present = true;

  for (int n = 1; n <= m; ++n) {
    const auto& v = configs[n - 1];
    const std::size_t shift = std::size_t{1} << psi.psi(n);
    Poly nf(size), ng(size);
    auto apply = [&](const Poly& src, std::uint8_t op, std::size_t offset, Poly& dst) {
      for (std::size_t deg = 0; deg < size; ++deg) {
        if (!src[deg].present) continue;
        const std::size_t target = deg + offset;
        if (target >= size || dst[target].present)
          throw Error("symbolic expansion produced a colliding monomial");
        dst[target].present = true;
        dst[target].word = src[deg].word;
        dst[target].word.push_back(op);
      }
    };
    apply(f, v.v11, 0, nf);
    apply(g, v.v12, shift, nf);
    apply(f, v.v21, 0, ng);
    apply(g, v.v22, shift, ng);
    f = std::move(nf);
    g = std::move(ng);
  }

  OperatorWords out;
  out.f_words.reserve(size);
  out.g_words.reserve(size);
  for (std::size_t x = 0; x < size; ++x) {
    if (!f[x].present || !g[x].present) throw Error("symbolic expansion left a gap");
    out.f_words.push_back(std::move(f[x].word));
    out.g_words.push_back(std::move(g[x].word));
  }
  return out;
}

ConfigurationVector operator_config(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::ScaleA: return {1, 0, 0, 1};
    case OperatorKind::ScaleB: return {0, 1, 1, 0};
    case OperatorKind::PhaseA: return {1, 0, 0, 0};
    case OperatorKind::PhaseAConj: return {0, 0, 0, 1};
    case OperatorKind::PhaseB: return {0, 1, 0, 0};
    case OperatorKind::PhaseBConj: return {0, 0, 1, 0};
    case OperatorKind::Sign: return {0, 0, 0, 1};
    case OperatorKind::PhaseGolay: return {0, 1, 0, 1};
    case OperatorKind::Shift: return {0, 1, 0, 1};
    case OperatorKind::OrderA: return {1, 0, 1, 0};
    case OperatorKind::OrderB: return {0, 1, 0, 1};
  }
  throw InvalidArgument("unknown operator kind");
}

OperatorKind operator_kind_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, OperatorKind> kNames[] = {
      {"scaleA", OperatorKind::ScaleA},         {"scaleB", OperatorKind::ScaleB},
      {"phaseA", OperatorKind::PhaseA},         {"phaseAconj", OperatorKind::PhaseAConj},
      {"phaseB", OperatorKind::PhaseB},         {"phaseBconj", OperatorKind::PhaseBConj},
      {"sign", OperatorKind::Sign},             {"phaseGolay", OperatorKind::PhaseGolay},
      {"shift", OperatorKind::Shift},           {"orderA", OperatorKind::OrderA},
      {"orderB", OperatorKind::OrderB},
  };
  for (const auto& [n, k] : kNames)
    if (n == name) return k;
  throw InvalidArgument("unknown operator kind '" + std::string(name) + "'");
}

}  // namespace csforge
