#pragma once

// Exact scalars: arbitrary-precision integers and canonical rationals backed
// by GMP, plus the small amount of combinatorics the recursions need.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetaodd {

using BigInt = mpz_class;

/// Signed rational kept in lowest terms with a positive denominator.
///
/// Values are immutable once built: there are no compound-assignment
/// operators, so a `Rational` shared between threads can never change under a
/// reader. Zero is always stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
      throw std::domain_error("Rational: zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
  }

  /// Parses the canonical text form `[-]digits[/digits]`.
  static Rational parse(std::string_view text) {
    const auto fail = [&] {
      throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto digits_only = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    if (!digits_only(num_text, true)) fail();
    BigInt num(std::string(num_text), 10);
    if (slash == std::string_view::npos) return Rational(num);
    const auto den_text = text.substr(slash + 1);
    if (!digits_only(den_text, false)) fail();
    BigInt den(std::string(den_text), 10);
    if (den == 0) fail();
    return Rational(num, den);
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& gmp() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Canonical text: denominator omitted when it is 1 (`-50`, `25/12`).
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  // gmpxx arithmetic on canonical operands yields canonical results.
  explicit Rational(mpq_class&& q) : q_(std::move(q)) {}

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// C(a, b) for a >= 0; zero when b is outside [0, a].
inline BigInt binomial(long a, long b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index");
  if (b < 0 || b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

inline BigInt pow_int(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline int minus_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace zetaodd
