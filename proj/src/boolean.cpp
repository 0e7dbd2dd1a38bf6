#include "boolean.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace csforge {

namespace {

void check_vars(int m) {
  if (m < 1 || m > kMaxVariables)
    throw InvalidArgument("number of variables must be in [1, " +
                          std::to_string(kMaxVariables) + "], got " + std::to_string(m));
}

void check_modulus(int modulus) {
  if (modulus < 0) throw InvalidArgument("modulus must be non-negative");
}

double reduce(double v, int modulus) {
  if (modulus == BooleanFunction::kReal) return v;
  double r = std::fmod(v, static_cast<double>(modulus));
  if (r < 0) r += modulus;
  // fmod of a value a hair below a multiple of H returns ~H
  if (r >= modulus) r -= modulus;
  return r;
}

}  // namespace

BitVector::BitVector(int m, std::uint32_t index) : m_(m), index_(index) {
  check_vars(m);
  if (index >> m) throw InvalidArgument("bit-vector index out of range for m = " + std::to_string(m));
}

BitVector BitVector::from_bits(const std::vector<int>& bits) {
  std::uint32_t idx = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidArgument("bit values must be 0 or 1");
    idx = (idx << 1) | static_cast<std::uint32_t>(b);
  }
  return BitVector(static_cast<int>(bits.size()), idx);
}

int BitVector::bit(int j) const {
  if (j < 1 || j > m_) throw InvalidArgument("variable index out of range");
  return static_cast<int>((index_ >> (m_ - j)) & 1U);
}

BooleanFunction::BooleanFunction(int m, int modulus) : m_(m), modulus_(modulus) {
  check_vars(m);
  check_modulus(modulus);
}

BooleanFunction BooleanFunction::constant(int m, double c, int modulus) {
  return monomial(m, 0, c, modulus);
}

BooleanFunction BooleanFunction::variable(int m, int j, int modulus) {
  check_vars(m);
  if (j < 1 || j > m) throw InvalidArgument("variable index out of range");
  return monomial(m, 1U << (m - j), 1.0, modulus);
}

BooleanFunction BooleanFunction::monomial(int m, std::uint32_t mask, double c, int modulus) {
  BooleanFunction f(m, modulus);
  if (mask >> m) throw InvalidArgument("monomial mask out of range");
  f.add_term(mask, c);
  return f;
}

double BooleanFunction::coeff(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? 0.0 : it->second;
}

void BooleanFunction::add_term(std::uint32_t mask, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

void BooleanFunction::check_compatible(const BooleanFunction& rhs) const {
  if (rhs.m_ != m_) throw InvalidArgument("Boolean functions over different variable counts");
}

double BooleanFunction::eval(const BitVector& x) const {
  if (x.size() != m_)
    throw InvalidArgument("bit vector has " + std::to_string(x.size()) +
                          " bits, function expects " + std::to_string(m_));
  const std::uint32_t idx = x.index();
  double sum = 0.0;
  for (const auto& [mask, c] : terms_)
    if ((mask & idx) == mask) sum += c;
  return reduce(sum, modulus_);
}

std::vector<double> BooleanFunction::to_sequence() const {
  const std::uint32_t n = 1U << m_;
  // Subset-sum (zeta) transform: value at x collects every mask contained in x.
  std::vector<double> table(n, 0.0);
  for (const auto& [mask, c] : terms_) table[mask] = c;
  for (std::uint32_t bit = 1; bit < n; bit <<= 1)
    for (std::uint32_t x = 0; x < n; ++x)
      if (x & bit) table[x] += table[x ^ bit];
  for (auto& v : table) v = reduce(v, modulus_);
  return table;
}

bool BooleanFunction::is_boolean() const {
  for (double v : to_sequence())
    if (std::abs(v) > 1e-12 && std::abs(v - 1.0) > 1e-12) return false;
  return true;
}

BooleanFunction BooleanFunction::with_modulus(int modulus) const {
  check_modulus(modulus);
  BooleanFunction out = *this;
  out.modulus_ = modulus;
  return out;
}

BooleanFunction BooleanFunction::operator+(const BooleanFunction& rhs) const {
  check_compatible(rhs);
  BooleanFunction out = *this;
  for (const auto& [mask, c] : rhs.terms_) out.add_term(mask, c);
  return out;
}

BooleanFunction BooleanFunction::operator-(const BooleanFunction& rhs) const {
  return *this + (-rhs);
}

BooleanFunction BooleanFunction::operator-() const { return *this * -1.0; }

BooleanFunction BooleanFunction::operator*(const BooleanFunction& rhs) const {
  check_compatible(rhs);
  BooleanFunction out(m_, modulus_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma | mb, ca * cb);
  return out;
}

BooleanFunction BooleanFunction::operator*(double c) const {
  BooleanFunction out(m_, modulus_);
  for (const auto& [mask, v] : terms_) out.add_term(mask, v * c);
  return out;
}

BooleanFunction BooleanFunction::operator+(double c) const {
  BooleanFunction out = *this;
  out.add_term(0, c);
  return out;
}

BooleanFunction combine_mod2(const BooleanFunction& f, const BooleanFunction& g, double c) {
  if (!f.is_boolean() || !g.is_boolean())
    throw InvalidArgument("combine_mod2 requires {0,1}-valued functions");
  return (f * c + g * c - (f * g) * (2.0 * c)).with_modulus(BooleanFunction::kReal);
}

}  // namespace csforge
