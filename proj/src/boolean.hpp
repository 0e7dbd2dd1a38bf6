#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace csforge {

/// Maximum number of Boolean variables supported anywhere in the library.
inline constexpr int kMaxVariables = 24;

/// An assignment (x_1, ..., x_m) of m Boolean variables.
///
/// The assignment is stored as its lexicographic index
/// x = sum_j x_j 2^(m-j), so x_1 is the most significant bit.
class BitVector {
 public:
  BitVector(int m, std::uint32_t index);

  static BitVector from_bits(const std::vector<int>& bits);

  int size() const { return m_; }
  std::uint32_t index() const { return index_; }

  /// Value of x_j for 1 <= j <= m.
  int bit(int j) const;

 private:
  int m_;
  std::uint32_t index_;
};

/// A generalized Boolean function in algebraic normal form,
///
///   f(x) = sum_k c_k prod_j x_j^(k_j),
///
/// over m variables. Monomial masks follow the sequence indexing convention:
/// mask k = sum_j k_j 2^(m-j), i.e. x_1 owns the most significant mask bit.
/// A monomial k is active at x iff (k & x) == k.
///
/// Coefficients are real. With modulus H > 0 the value is reduced into
/// [0, H) at evaluation; modulus 0 means plain real arithmetic.
class BooleanFunction {
 public:
  static constexpr int kReal = 0;

  explicit BooleanFunction(int m, int modulus = kReal);

  static BooleanFunction constant(int m, double c, int modulus = kReal);
  /// The degree-one monomial x_j, 1 <= j <= m.
  static BooleanFunction variable(int m, int j, int modulus = kReal);
  static BooleanFunction monomial(int m, std::uint32_t mask, double c = 1.0,
                                  int modulus = kReal);

  int vars() const { return m_; }
  int modulus() const { return modulus_; }
  double coeff(std::uint32_t mask) const;
  const std::map<std::uint32_t, double>& terms() const { return terms_; }

  double eval(const BitVector& x) const;
  /// Values at x = 0, 1, ..., 2^m - 1 in lexicographic order.
  std::vector<double> to_sequence() const;

  /// True iff every value lies in {0, 1} (within 1e-12).
  bool is_boolean() const;
  bool is_zero() const { return terms_.empty(); }

  BooleanFunction with_modulus(int modulus) const;

  BooleanFunction operator+(const BooleanFunction& rhs) const;
  BooleanFunction operator-(const BooleanFunction& rhs) const;
  BooleanFunction operator-() const;
  /// Product of ANFs; x_j^2 = x_j so masks combine by OR.
  BooleanFunction operator*(const BooleanFunction& rhs) const;
  BooleanFunction operator*(double c) const;
  BooleanFunction operator+(double c) const;
  friend BooleanFunction operator*(double c, const BooleanFunction& f) { return f * c; }
  friend BooleanFunction operator+(double c, const BooleanFunction& f) { return f + c; }
  friend BooleanFunction operator-(double c, const BooleanFunction& f) {
    return BooleanFunction::constant(f.vars(), c, f.modulus()) - f;
  }

 private:
  void add_term(std::uint32_t mask, double c);
  void check_compatible(const BooleanFunction& rhs) const;

  int m_;
  int modulus_;
  std::map<std::uint32_t, double> terms_;
};

/// Real ANF of c * ((f + g) mod 2) for {0,1}-valued f and g, expanded as
/// c*f + c*g - 2c*(f*g). Throws InvalidArgument if either input is not
/// Boolean.
BooleanFunction combine_mod2(const BooleanFunction& f, const BooleanFunction& g,
                             double c = 1.0);

}  // namespace csforge
