#pragma once

#include <optional>
#include <random>

#include "error.hpp"
#include "qam.hpp"

namespace csforge::testing {

/// A random valid spec for the rule, or nullopt if the rule admits no
/// indices at this s (e.g. cyan with s < 3).
inline std::optional<QamRuleSpec> random_spec(std::mt19937_64& rng, QamRule rule, int s, int m) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    QamRuleSpec spec;
    spec.rule = rule;
    spec.s = s;
    std::vector<int> idx(rule_index_count(rule));
    for (auto& i : idx) i = pick(1, s);
    spec.set_indices(idx);
    spec.ell = pick(1, m);
    spec.sign_a = rng() % 2 ? 1 : -1;
    spec.sign_b = rng() % 2 ? 1 : -1;
    spec.blue_swap = rng() % 2;
    spec.base_k.resize(m);
    for (auto& k : spec.base_k) k = pick(0, 3);
    spec.z = pick(0, 3);
    try {
      spec.validate(m);
      return spec;
    } catch (const InvalidArgument&) {
    }
  }
  return std::nullopt;
}

}  // namespace csforge::testing
