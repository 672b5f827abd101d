#pragma once

// Residue-expansion coefficients b_j^(l) and the unit upper-triangular
// system whose solution is the weight vector w_1..w_m.

#include <stdexcept>
#include <string>
#include <vector>

#include "zetaodd/exact.hpp"
#include "zetaodd/gen_bernoulli.hpp"

namespace zetaodd {

/// b_j^(l) = (-1)^{l-j} B_{l-j}^(l) / (l-j)!, the coefficient of z_k^{-j}
/// in -D_l.
inline Rational coeff_b(int j, int l) {
  if (j < 1 || j > l) {
    throw std::invalid_argument("coeff_b: need 1 <= j <= l, got j=" + std::to_string(j) +
                                ", l=" + std::to_string(l));
  }
  const int d = l - j;
  const Rational scaled = gen_bernoulli(d, l) / Rational(factorial(d));
  return d % 2 == 0 ? scaled : -scaled;
}

/// [b_l^(l), b_{l-1}^(l), ..., b_1^(l)], highest power of 1/z_k first.
inline std::vector<Rational> d_coefficients(int l) {
  if (l < 1) throw std::invalid_argument("d_coefficients: need l >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(l));
  for (int j = l; j >= 1; --j) out.push_back(coeff_b(j, l));
  return out;
}

/// The right-hand-side normaliser: +-(m-1)!, sign by parity of m.
inline Rational s_constant(int m) {
  if (m < 2) throw std::invalid_argument("s_constant: need m >= 2");
  const long exponent = (m % 2 == 1) ? (m - 1) / 2 : (m + 2) / 2;
  const Rational magnitude(factorial(m - 1));
  return minus_one_pow(exponent) > 0 ? magnitude : -magnitude;
}

/// Row j is the power of 1/z_k, column l the expansion order; entries are
/// b_j^(l) on and above the diagonal.
class TriangularSystem {
 public:
  explicit TriangularSystem(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("TriangularSystem: need m >= 2");
    rows_.resize(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
      auto& row = rows_[static_cast<std::size_t>(j - 1)];
      row.resize(static_cast<std::size_t>(m));
      for (int l = j; l <= m; ++l) row[static_cast<std::size_t>(l - 1)] = coeff_b(j, l);
    }
  }

  int m() const { return m_; }

  /// Entry (j, l), 1-based; zero below the diagonal.
  const Rational& entry(int j, int l) const {
    return rows_.at(static_cast<std::size_t>(j - 1)).at(static_cast<std::size_t>(l - 1));
  }

 private:
  int m_;
  std::vector<std::vector<Rational>> rows_;
};

struct WeightVector {
  int m = 0;
  Rational s_m;
  std::vector<Rational> weights;  // weights[l-1] = w_l

  const Rational& w(int l) const { return weights.at(static_cast<std::size_t>(l - 1)); }
};

/// Back-substitution from row m up to row 1 of A w = (0, ..., 0, -S_m).
inline WeightVector solve_weights(int m) {
  const TriangularSystem system(m);
  WeightVector out{m, s_constant(m), std::vector<Rational>(static_cast<std::size_t>(m))};
  for (int j = m; j >= 1; --j) {
    Rational rhs = (j == m) ? -out.s_m : Rational(0);
    for (int l = j + 1; l <= m; ++l) rhs = rhs - system.entry(j, l) * out.w(l);
    // diagonal b_j^(j) is 1
    out.weights[static_cast<std::size_t>(j - 1)] = rhs / system.entry(j, j);
  }
  return out;
}

}  // namespace zetaodd
