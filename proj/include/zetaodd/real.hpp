#pragma once

// High-precision reals (MPFR through Boost.Multiprecision) and the glue
// between them and exact rationals.

#include <boost/multiprecision/mpfr.hpp>

#include <ios>
#include <string>

#include "zetaodd/exact.hpp"

namespace zetaodd {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Sets the working precision (decimal digits) for Reals created in scope.
///
/// The default precision is process-global in this Boost version, so Real
/// arithmetic must stay on one thread while a scope is active.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real pi() {
  Real out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

inline Real to_real(const BigInt& value) {
  Real out;
  mpfr_set_z(out.backend().data(), value.get_mpz_t(), MPFR_RNDN);
  return out;
}

inline Real to_real(const Rational& value) {
  Real out;
  mpfr_set_q(out.backend().data(), value.gmp().get_mpq_t(), MPFR_RNDN);
  return out;
}

/// Exactly `digits` significant digits. Positional for decimal exponents in
/// [-6, digits), scientific otherwise (tiny error estimates).
inline std::string format_decimal(const Real& value, int digits) {
  const std::string sci = value.str(digits - 1, std::ios_base::scientific);
  const auto e_pos = sci.find('e');
  if (value == 0 || e_pos == std::string::npos) return sci;
  const int exponent = std::stoi(sci.substr(e_pos + 1));
  if (exponent < -6 || exponent >= digits) return sci;
  const bool negative = sci.front() == '-';
  std::string mantissa;
  for (char c : sci.substr(0, e_pos)) {
    if (c >= '0' && c <= '9') mantissa += c;
  }
  std::string out;
  if (exponent < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + mantissa;
  } else {
    out = mantissa.substr(0, static_cast<std::size_t>(exponent) + 1);
    if (mantissa.size() > static_cast<std::size_t>(exponent) + 1) {
      out += '.' + mantissa.substr(static_cast<std::size_t>(exponent) + 1);
    }
  }
  return negative ? '-' + out : out;
}

/// 10^{-digits} at the current precision.
inline Real ten_to_minus(int digits) { return boost::multiprecision::pow(Real(10), -digits); }

}  // namespace zetaodd
