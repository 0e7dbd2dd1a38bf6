#include "sequence.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"

namespace csforge {

std::vector<std::size_t> ComplexSequence::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != cplx{0.0, 0.0}) out.push_back(i);
  return out;
}

double ComplexSequence::energy() const {
  double e = 0.0;
  for (const auto& v : values_) e += std::norm(v);
  return e;
}

cplx UnitExpElement::value() const {
  if (zero) return {0.0, 0.0};
  if (H <= 0 || H % 2 != 0) throw InvalidArgument("H must be a positive even integer");
  const double w = 2.0 * std::numbers::pi / H;
  return std::exp(w * r) * std::polar(1.0, w * std::fmod(i, static_cast<double>(H)));
}

}  // namespace csforge
