#pragma once

// zeta(m) three ways (Dirichlet series oracle, the weighted exponential
// kernel on (0, inf), the asech-kernel sum), plus the rational linear forms
// in zeta(2k+1)/pi^{2k} and the exact scan of their top coefficients.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetaodd/exact.hpp"
#include "zetaodd/hyperbolic.hpp"
#include "zetaodd/quadrature.hpp"
#include "zetaodd/real.hpp"
#include "zetaodd/weights.hpp"

namespace zetaodd {

namespace detail {

// Classical Bernoulli numbers B_0..B_max from sum_{k<=n} C(n+1,k) B_k = 0.
// Kept free of the generalized machinery so the zeta oracle stays independent.
inline std::vector<mpq_class> classical_bernoulli(int max) {
  std::vector<mpq_class> b(static_cast<std::size_t>(max) + 1);
  b[0] = 1;
  std::vector<mpz_class> row{1, 1};  // C(n+1, k) after the update below
  for (int n = 1; n <= max; ++n) {
    std::vector<mpz_class> next(row.size() + 1);
    next.front() = next.back() = 1;
    for (std::size_t i = 1; i + 1 < next.size(); ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
    mpq_class acc = 0;
    for (int k = 0; k < n; ++k) acc += mpq_class(row[static_cast<std::size_t>(k)]) * b[static_cast<std::size_t>(k)];
    mpq_class value = -acc / mpq_class(row[static_cast<std::size_t>(n)]);
    value.canonicalize();
    b[static_cast<std::size_t>(n)] = value;
  }
  return b;
}

inline Real mpq_to_real(const mpq_class& q) {
  Real out;
  mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

// Decimal digits needed to absorb a cancellation among terms of size up to `largest`.
inline int cancellation_digits(const Rational& largest, int count) {
  const double magnitude = mpz_sizeinbase(abs(largest).numerator().get_mpz_t(), 10) -
                           static_cast<double>(mpz_sizeinbase(largest.denominator().get_mpz_t(), 10)) + 1;
  return static_cast<int>(std::ceil(std::max(0.0, magnitude + std::log10(std::max(count, 1)))));
}

}  // namespace detail

/// zeta(m) from the Dirichlet series with an Euler-Maclaurin tail; correct
/// to `digits` decimal digits. Shares nothing with the integral pipeline.
inline Real zeta_reference(int m, int digits) {
  if (m < 2) throw std::invalid_argument("zeta_reference: need m >= 2");
  PrecisionScope scope(static_cast<unsigned>(digits + 15));
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  const int cutoff = 2 * digits + 20;  // N
  const int max_terms = cutoff;
  const auto bernoulli = detail::classical_bernoulli(2 * max_terms);
  const Real s(m);
  const Real big_n(cutoff);
  Real total = 0;
  for (int v = cutoff - 1; v >= 1; --v) total += pow(Real(v), -m);
  total += pow(big_n, 1 - m) / (s - 1) + pow(big_n, -m) / 2;

  const Real negligible = ten_to_minus(digits + 10);
  Real rising = s;                     // s (s+1) ... (s+2k-2)
  Real n_power = pow(big_n, -m - 1);   // N^{-s-2k+1}
  Real factorial_2k = 2;               // (2k)!
  for (int k = 1; k <= max_terms; ++k) {
    const Real term = detail::mpq_to_real(bernoulli[static_cast<std::size_t>(2 * k)]) / factorial_2k * rising * n_power;
    total += term;
    if (abs(term) < negligible) break;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    n_power /= big_n * big_n;
    factorial_2k *= Real(2 * k + 1) * Real(2 * k + 2);
  }
  return total;
}

/// Collapsed weighted kernel on (0, inf):
///   -(1/u) sum_l w_l [ (1 + e^{-u})^{-l} - (e^u + 1)^{-l} ].
/// Even in u. Terms are O(1) but their sum is O(e^{-u}) because sum w_l = 0.
inline Real eq23_kernel(const std::vector<Real>& weights, const Real& u) {
  using boost::multiprecision::exp;
  const Real y = exp(-u);
  const Real a = 1 / (1 + y);
  const Real b = y / (1 + y);
  Real a_pow = 1;
  Real b_pow = 1;
  Real sum = 0;
  for (const Real& w : weights) {
    a_pow *= a;
    b_pow *= b;
    sum += w * (a_pow - b_pow);
  }
  return -sum / u;
}

inline std::vector<Real> weights_as_real(const WeightVector& w) {
  std::vector<Real> out;
  out.reserve(w.weights.size());
  for (const auto& value : w.weights) out.push_back(to_real(value));
  return out;
}

/// zeta(m) = (2 pi)^{m-1} / ((2^m - 1)(m-1)!) * int_0^inf kernel, odd m >= 3.
inline Real zeta_via_eq23(int m, const PrecisionConfig& cfg = {}) {
  require_odd_order(m, "zeta_via_eq23");
  const WeightVector w = solve_weights(m);
  Rational largest;
  for (const auto& value : w.weights) largest = std::max(largest, abs(value));
  const PrecisionConfig guarded = cfg.with_guard(detail::cancellation_digits(largest, m));
  PrecisionScope scope(static_cast<unsigned>(guarded.working_digits));
  const std::vector<Real> weights = weights_as_real(w);
  const QuadratureResult q =
      integrate_0inf_decaying([&](const Real& u) { return eq23_kernel(weights, u); }, guarded);
  const Real prefactor = boost::multiprecision::pow(2 * pi(), m - 1) /
                         to_real(BigInt(pow_int(BigInt(2), static_cast<unsigned long>(m)) - 1) * factorial(m - 1));
  return prefactor * q.value;
}

/// zeta(3) = (2 pi^2 / 7) * 2 * int_0^inf e^u (e^u - 1) / ((e^u + 1)^3 u) du,
/// the whole-line integral folded onto (0, inf) by evenness.
inline Real zeta3_direct(const PrecisionConfig& cfg = {}) {
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  auto integrand = [](const Real& u) {
    using boost::multiprecision::exp;
    using boost::multiprecision::expm1;
    const Real y = exp(-u);
    const Real denom = (1 + y) * (1 + y) * (1 + y);
    return -expm1(-u) / u * y / denom;
  };
  const QuadratureResult q = integrate_0inf_decaying(integrand, cfg);
  const Real p = pi();
  return 4 * p * p / 7 * q.value;
}

/// zeta(m) = pi^{m-1} * sum_j tau_j^(m) I_{j-1}, odd m >= 3.
inline Real zeta_via_eq29(int m, const PrecisionConfig& cfg = {}) {
  require_odd_order(m, "zeta_via_eq29");
  const TauTable row = tau_row(m);
  Rational largest;
  for (const auto& [j, value] : row.taus) largest = std::max(largest, abs(value));
  const PrecisionConfig guarded = cfg.with_guard(detail::cancellation_digits(largest, static_cast<int>(row.taus.size())));
  PrecisionScope scope(static_cast<unsigned>(guarded.working_digits));
  Real sum = 0;
  for (const auto& [j, value] : row.taus) sum += to_real(value) * integral_In(j - 1, guarded).value;
  return boost::multiprecision::pow(pi(), m - 1) * sum;
}

struct ZetaReport {
  int m = 0;
  Real reference;
  Real via_eq23;
  Real via_eq29;
  Real max_abs_diff;
  Real tolerance;

  bool pass() const { return max_abs_diff < tolerance; }
};

inline ZetaReport zeta_report(int m, const PrecisionConfig& cfg = {}, int tolerance_exponent = 9) {
  require_odd_order(m, "zeta_report");
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  using boost::multiprecision::abs;
  ZetaReport out;
  out.m = m;
  out.reference = zeta_reference(m, cfg.working_digits);
  out.via_eq23 = zeta_via_eq23(m, cfg);
  out.via_eq29 = zeta_via_eq29(m, cfg);
  out.max_abs_diff = std::max({abs(out.reference - out.via_eq23), abs(out.reference - out.via_eq29),
                               abs(out.via_eq23 - out.via_eq29)});
  out.tolerance = ten_to_minus(tolerance_exponent);
  return out;
}

/// Row k (1-based) holds tau_{j+1}^(2k+1) for j = 1..k: the expansion of
/// zeta(2k+1)/pi^{2k} in I_1..I_k.
using LowerTriangular = std::vector<std::vector<Rational>>;

inline LowerTriangular tau_matrix(int n) {
  if (n < 1) throw std::invalid_argument("tau_matrix: need n >= 1");
  LowerTriangular t;
  for (int k = 1; k <= n; ++k) {
    const TauTable row = tau_row(2 * k + 1);
    std::vector<Rational> entries;
    for (int j = 1; j <= k; ++j) entries.push_back(row.taus.at(j + 1));
    t.push_back(std::move(entries));
  }
  return t;
}

struct LinearForm {
  int n = 0;
  std::vector<Rational> thetas;  // theta_1..theta_n
  int theta_next = 0;            // 0 or 1
};

/// Coefficient of I_j (j = 1..n) in sum_k theta_k zeta(2k+1)/pi^{2k}.
inline std::vector<Rational> integral_coefficients(const LowerTriangular& t, const std::vector<Rational>& thetas) {
  const std::size_t n = t.size();
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) out[j] = out[j] + thetas.at(k) * t[k][j];
  }
  return out;
}

/// Solves theta^T T = e_n^T when every diagonal entry is nonzero
/// (theta_next = 1). Otherwise returns a nonzero left null vector of T built
/// from the first zero diagonal (theta_next = 0).
inline LinearForm solve_linear_form(const LowerTriangular& t) {
  const int n = static_cast<int>(t.size());
  if (n < 1) throw std::invalid_argument("solve_linear_form: empty matrix");
  const auto diag = [&](int k) -> const Rational& { return t[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)]; };

  int pivot = n;  // row whose coefficient is pinned
  int theta_next = 1;
  for (int k = 1; k <= n; ++k) {
    if (diag(k).is_zero()) {
      pivot = k;
      theta_next = 0;
      break;
    }
  }

  LinearForm out{n, std::vector<Rational>(static_cast<std::size_t>(n)), theta_next};
  auto& theta = out.thetas;
  theta[static_cast<std::size_t>(pivot - 1)] = theta_next == 1 ? Rational(1) / diag(pivot) : Rational(1);
  for (int j = pivot - 1; j >= 1; --j) {
    Rational acc;
    for (int k = j + 1; k <= pivot; ++k) {
      acc = acc + theta[static_cast<std::size_t>(k - 1)] * t[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
    }
    theta[static_cast<std::size_t>(j - 1)] = -acc / diag(j);
  }
  return out;
}

inline LinearForm linear_form(int n) { return solve_linear_form(tau_matrix(n)); }

/// |sum_k theta_k zeta(2k+1)/pi^{2k} - theta_next I_n| with zeta from the
/// series oracle and I_n by quadrature.
inline Real linear_form_residual(const LinearForm& form, const PrecisionConfig& cfg = {}) {
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  Real lhs = 0;
  const Real p = pi();
  for (int k = 1; k <= form.n; ++k) {
    lhs += to_real(form.thetas[static_cast<std::size_t>(k - 1)]) * zeta_reference(2 * k + 1, cfg.working_digits) /
           boost::multiprecision::pow(p, 2 * k);
  }
  const Real rhs = form.theta_next == 1 ? integral_In(form.n, cfg).value : Real(0);
  return boost::multiprecision::abs(lhs - rhs);
}

struct ScanRow {
  int n = 0;
  Rational tau_top;  // tau_{n+1}^(2n+1)
  bool is_zero = false;
};

struct ScanReport {
  std::vector<ScanRow> rows;

  bool any_zero() const {
    return std::any_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.is_zero; });
  }

  std::string summary() const {
    std::ostringstream out;
    const int last = rows.empty() ? 0 : rows.back().n;
    const auto zero = std::find_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.is_zero && r.n >= 2; });
    if (zero == rows.end()) {
      out << "tau_{n+1}^(2n+1) != 0 for n = 1.." << last
          << ": evidence for an infinite-dimensional Q-span of zeta(2n+1)/pi^{2n} (not a proof)";
    } else {
      out << "tau_{n+1}^(2n+1) = 0 at n = " << zero->n << ": dim_Q span{zeta(2k+1)/pi^{2k}, k <= " << zero->n
          << "} <= " << zero->n - 1;
    }
    return out.str();
  }
};

/// Exact zero test of tau_{n+1}^(2n+1) for n = 1..n_max.
inline ScanReport dimension_scan(int n_max) {
  if (n_max < 1) throw std::invalid_argument("dimension_scan: need n_max >= 1");
  ScanReport out;
  for (int n = 1; n <= n_max; ++n) {
    Rational top = tau(n + 1, 2 * n + 1);
    const bool zero = top.is_zero();
    out.rows.push_back({n, std::move(top), zero});
  }
  return out;
}

struct InRow {
  int n = 0;
  QuadratureResult integral;
};

/// I_1..I_{n_max}; throws std::logic_error unless strictly positive and
/// strictly decreasing.
inline std::vector<InRow> in_sequence_report(int n_max, const PrecisionConfig& cfg = {}) {
  if (n_max < 1) throw std::invalid_argument("in_sequence_report: need n_max >= 1");
  std::vector<InRow> out;
  for (int n = 1; n <= n_max; ++n) {
    InRow row{n, integral_In(n, cfg)};
    if (!(row.integral.value > 0)) throw std::logic_error("I_" + std::to_string(n) + " is not positive");
    if (!out.empty() && !(row.integral.value < out.back().integral.value)) {
      throw std::logic_error("I_" + std::to_string(n) + " does not decrease");
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace zetaodd
