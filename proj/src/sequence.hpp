#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace csforge {

using cplx = std::complex<double>;

/// Finite complex sequence a_0, ..., a_{N-1}, i.e. the coefficients of
/// A(z) = sum_i a_i z^i. Zeros are structural: the support is the set of
/// indices whose value is exactly nonzero, without any rounding.
class ComplexSequence {
 public:
  ComplexSequence() = default;
  explicit ComplexSequence(std::vector<cplx> values) : values_(std::move(values)) {}
  explicit ComplexSequence(std::size_t n) : values_(n, cplx{0.0, 0.0}) {}

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }
  const cplx& operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }

  std::vector<std::size_t> support() const;
  double energy() const;

 private:
  std::vector<cplx> values_;
};

/// xi^(r + j*i) with xi = e^(2*pi/H): amplitude exponent r, phase exponent i
/// (taken mod H). The zero flag marks an exact structural zero.
struct UnitExpElement {
  double r = 0.0;
  double i = 0.0;
  int H = 2;
  bool zero = false;

  cplx value() const;
};

}  // namespace csforge
