#pragma once

// Reduction of symmetric exponential sums to odd powers of sech, and the
// rational coefficients tau_j^(m) of the asech-kernel representation of
// zeta(m) / pi^{m-1}.

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetaodd/exact.hpp"
#include "zetaodd/real.hpp"
#include "zetaodd/weights.hpp"

namespace zetaodd {

namespace detail {

inline int ceil_half(int l) { return (l + 1) / 2; }

/// Rows [q_1^(l), ..., q_{ceil(l/2)}^(l)], memoized per l.
class QTable {
 public:
  const std::vector<BigInt>& row(int l) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = rows_.find(l); it != rows_.end()) return it->second;
    }
    std::vector<BigInt> row = build(l);
    std::unique_lock lock(mutex_);
    return rows_.emplace(l, std::move(row)).first->second;
  }

 private:
  // q_1 = 1; q_j = 1 - sum_{k<j} C(l+1-2k, j-k) q_k.
  static std::vector<BigInt> build(int l) {
    const int top = ceil_half(l);
    std::vector<BigInt> q(static_cast<std::size_t>(top));
    q[0] = 1;
    for (int j = 2; j <= top; ++j) {
      BigInt acc = 1;
      for (int k = 1; k < j; ++k) acc -= binomial(l + 1 - 2 * k, j - k) * q[static_cast<std::size_t>(k - 1)];
      q[static_cast<std::size_t>(j - 1)] = acc;
    }
    return q;
  }

  std::shared_mutex mutex_;
  std::map<int, std::vector<BigInt>> rows_;
};

inline QTable& shared_q_table() {
  static QTable table;
  return table;
}

}  // namespace detail

/// q_j^(l) for 1 <= j <= ceil(l/2).
inline BigInt q_coeff(int j, int l) {
  if (l < 1 || j < 1 || j > detail::ceil_half(l)) {
    throw std::invalid_argument("q_coeff: need 1 <= j <= ceil(l/2), got j=" + std::to_string(j) +
                                ", l=" + std::to_string(l));
  }
  return detail::shared_q_table().row(l)[static_cast<std::size_t>(j - 1)];
}

/// |sum_p e^{(2p+1-l)u} / X^l - sum_j q_j^(l) / X^{2j-1}| with X = e^u + e^{-u},
/// evaluated at the current Real precision.
inline Real partial_fraction_residual(int l, const Real& u) {
  if (l < 1) throw std::invalid_argument("partial_fraction_residual: need l >= 1");
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;
  const Real x = exp(u) + exp(-u);
  Real lhs = 0;
  for (int p = 0; p < l; ++p) lhs += exp(Real(2 * p + 1 - l) * u);
  lhs /= pow(x, l);
  Real rhs = 0;
  for (int j = 1; j <= detail::ceil_half(l); ++j) rhs += to_real(q_coeff(j, l)) / pow(x, 2 * j - 1);
  return boost::multiprecision::abs(lhs - rhs);
}

inline void require_odd_order(int m, const char* what) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument(std::string(what) + ": need odd m >= 3, got " + std::to_string(m));
  }
}

namespace detail {

// tau_j^(m) given the solved weights.
inline Rational tau_from_weights(int j, const WeightVector& w) {
  const int m = w.m;
  Rational sum;
  for (int l = 2 * j - 1; l <= m; ++l) sum = sum + w.w(l) * Rational(q_coeff(j, l));
  const BigInt two_m1 = pow_int(BigInt(2), static_cast<unsigned long>(m - 1));
  const BigInt four_j1 = pow_int(BigInt(4), static_cast<unsigned long>(j - 1));
  const BigInt denom = factorial(m - 1) * (BigInt(2) * two_m1 - 1) * four_j1;
  return -(Rational(two_m1, denom) * sum);
}

}  // namespace detail

/// tau_j^(m) for 2 <= j <= ceil(m/2).
inline Rational tau(int j, int m) {
  require_odd_order(m, "tau");
  if (j < 2 || j > detail::ceil_half(m)) {
    throw std::invalid_argument("tau: need 2 <= j <= ceil(m/2), got j=" + std::to_string(j));
  }
  return detail::tau_from_weights(j, solve_weights(m));
}

struct TauTable {
  int m = 0;
  std::map<int, Rational> taus;  // j -> tau_j^(m)
};

inline TauTable tau_row(int m) {
  require_odd_order(m, "tau_row");
  const WeightVector w = solve_weights(m);
  TauTable out{m, {}};
  for (int j = 2; j <= detail::ceil_half(m); ++j) out.taus.emplace(j, detail::tau_from_weights(j, w));
  return out;
}

}  // namespace zetaodd
