#pragma once

// Double-exponential quadrature at arbitrary precision, an independent
// adaptive Gauss-Legendre rule, and the asech kernels I_n.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "zetaodd/real.hpp"

namespace zetaodd {

struct PrecisionConfig {
  int target_digits = 30;
  int working_digits = 50;
  int max_levels = 12;

  /// Working precision = target + 20, matching the default ratio.
  static PrecisionConfig for_target(int digits) { return {digits, digits + 20, 12}; }

  /// Raises working_digits so that at least `extra` digits sit above
  /// target + 10; used where the integrand cancels by ~10^extra.
  PrecisionConfig with_guard(int extra) const {
    PrecisionConfig out = *this;
    out.working_digits = std::max(working_digits, target_digits + 10 + std::max(extra, 0));
    return out;
  }
};

struct QuadratureResult {
  Real value;
  Real error_estimate;   // |last level - previous level|
  Real previous_error;   // the same difference one level earlier
  std::size_t nodes_used = 0;
  int levels = 0;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

namespace detail {

// Integrands on (0, 1) may take (u) or (u, 1 - u).
template <class F>
Real call_integrand(F& f, const Real& x, const Real& complement) {
  if constexpr (std::is_invocable_v<F&, const Real&, const Real&>) {
    return f(x, complement);
  } else {
    return f(x);
  }
}

inline Real tolerance_for(const PrecisionConfig& cfg, const Real& scale) {
  using boost::multiprecision::abs;
  return ten_to_minus(cfg.target_digits) * std::max(Real(1), abs(scale));
}

// Level-refined trapezoidal sums of `term(t)` on [t_lo, t_hi]. Level k uses
// step 2^{-k} and adds only the odd multiples. Sums run in ascending node
// order per level so the result is reproducible.
template <class Term>
QuadratureResult refine_levels(Term&& term, double t_lo, double t_hi, const PrecisionConfig& cfg,
                               const char* rule) {
  using boost::multiprecision::abs;
  QuadratureResult out;
  Real raw = 0;
  Real previous_estimate = 0;
  for (int level = 0; level < cfg.max_levels; ++level) {
    const double h = std::ldexp(1.0, -level);
    const long k_lo = static_cast<long>(std::ceil(t_lo / h));
    const long k_hi = static_cast<long>(std::floor(t_hi / h));
    const long step = level == 0 ? 1 : 2;
    long k_start = k_lo;
    if (level > 0 && (k_start % 2 == 0)) ++k_start;
    for (long k = k_start; k <= k_hi; k += step) {
      raw += term(Real(k) * Real(h));
      ++out.nodes_used;
    }
    const Real estimate = raw * Real(h);
    out.levels = level + 1;
    out.value = estimate;
    if (level > 0) {
      out.previous_error = out.error_estimate;
      out.error_estimate = abs(estimate - previous_estimate);
      if (level >= 3 && out.error_estimate < tolerance_for(cfg, estimate)) return out;
    } else {
      out.error_estimate = abs(estimate);
    }
    previous_estimate = estimate;
  }
  throw NonConvergence(std::string(rule) + ": no convergence after " + std::to_string(cfg.max_levels) +
                           " levels (error estimate " + format_decimal(out.error_estimate, 6) + ")",
                       out);
}

}  // namespace detail

/// Tanh-sinh rule on (0, 1). Tolerates integrable algebraic or logarithmic
/// endpoint singularities; nodes never touch 0 or 1. A two-argument
/// integrand receives (u, 1 - u) with the complement computed directly.
template <class F>
QuadratureResult integrate_01_singular(F&& f, const PrecisionConfig& cfg) {
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  using boost::multiprecision::cosh;
  using boost::multiprecision::exp;
  using boost::multiprecision::sinh;
  const Real half_pi = pi() / 2;
  // Out to 1 - u ~ 10^{-2W}, where even a (1-u)^{-1/2} singularity is below 10^{-W}.
  const double t_max = std::asinh(2.0 * cfg.working_digits * std::log(10.0) / M_PI);
  auto term = [&](const Real& t) {
    const Real s = half_pi * sinh(t);
    const Real e = exp(-2 * s);
    const Real x = 1 / (1 + e);
    const Real xc = e / (1 + e);
    const Real ch = cosh(s);
    const Real weight = half_pi * cosh(t) / (2 * ch * ch);
    return weight * detail::call_integrand(f, x, xc);
  };
  return detail::refine_levels(term, -t_max, t_max, cfg, "tanh-sinh");
}

/// Exp-sinh rule on (0, inf) for integrands with a finite limit at 0+ and
/// exponential decay. The upper cut is found by walking outward until the
/// weighted integrand drops below 10^{-working_digits}.
template <class F>
QuadratureResult integrate_0inf_decaying(F&& f, const PrecisionConfig& cfg) {
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  using boost::multiprecision::abs;
  using boost::multiprecision::cosh;
  using boost::multiprecision::exp;
  using boost::multiprecision::sinh;
  const Real half_pi = pi() / 2;
  auto term = [&](const Real& t) {
    const Real x = exp(half_pi * sinh(t));
    const Real weight = x * half_pi * cosh(t);
    return weight * f(x);
  };
  const double t_lo = -std::asinh(2.0 * cfg.working_digits * std::log(10.0) / M_PI);
  const Real negligible = ten_to_minus(cfg.working_digits);
  double t_hi = 0.0;
  int quiet = 0;
  for (double t = 0.0; t <= 7.0; t += 0.125) {
    t_hi = t;
    if (abs(term(Real(t))) < negligible) {
      if (++quiet == 2) break;
    } else {
      quiet = 0;
    }
  }
  return detail::refine_levels(term, t_lo, t_hi, cfg, "exp-sinh");
}

namespace detail {

struct GaussLegendreRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};

inline constexpr int kGaussPoints = 20;

// Newton iteration on P_N from the Chebyshev-like initial guesses.
inline GaussLegendreRule build_gauss_legendre(int digits) {
  using boost::multiprecision::abs;
  using boost::multiprecision::cos;
  const int n = kGaussPoints;
  GaussLegendreRule rule;
  const Real eps = ten_to_minus(digits + 3);
  for (int i = 1; i <= n; ++i) {
    Real x = cos(pi() * (Real(i) - Real(0.25)) / (Real(n) + Real(0.5)));
    Real derivative = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Real p_prev = 1;
      Real p = x;
      for (int k = 2; k <= n; ++k) {
        Real next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
        p_prev = p;
        p = next;
      }
      derivative = n * (x * p - p_prev) / (x * x - 1);
      const Real dx = p / derivative;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(2 / ((1 - x * x) * derivative * derivative));
  }
  return rule;
}

inline const GaussLegendreRule& gauss_legendre_rule(int digits) {
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> rules;
  std::lock_guard lock(mutex);
  auto it = rules.find(digits);
  if (it == rules.end()) it = rules.emplace(digits, build_gauss_legendre(digits)).first;
  return it->second;
}

}  // namespace detail

/// Globally adaptive-by-bisection 20-point Gauss-Legendre rule on (a, b).
/// An interval is accepted when the one-panel and two-panel values agree
/// within tol * (its share of b - a). `levels` reports the deepest
/// bisection; it is capped at 20 * max_levels.
template <class F>
QuadratureResult integrate_adaptive_gauss(F&& f, const Real& a, const Real& b, const PrecisionConfig& cfg) {
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  using boost::multiprecision::abs;
  const auto& rule = detail::gauss_legendre_rule(cfg.working_digits);
  QuadratureResult out;
  out.error_estimate = 0;
  out.previous_error = 0;
  const int max_depth = 20 * cfg.max_levels;

  auto panel = [&](const Real& lo, const Real& hi) {
    const Real mid = (lo + hi) / 2;
    const Real half = (hi - lo) / 2;
    Real sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    out.nodes_used += rule.nodes.size();
    return sum * half;
  };

  const Real width = b - a;
  const Real tol = ten_to_minus(cfg.target_digits);
  struct Pending {
    Real lo, hi, whole;
    int depth;
  };
  std::vector<Pending> stack{{a, b, panel(a, b), 0}};
  Real total = 0;
  bool converged = true;
  while (!stack.empty()) {
    Pending job = std::move(stack.back());
    stack.pop_back();
    const Real mid = (job.lo + job.hi) / 2;
    const Real left = panel(job.lo, mid);
    const Real right = panel(mid, job.hi);
    const Real diff = abs(left + right - job.whole);
    out.levels = std::max(out.levels, job.depth + 1);
    if (diff <= tol * (job.hi - job.lo) / width || job.depth + 1 >= max_depth) {
      if (diff > tol * (job.hi - job.lo) / width) converged = false;
      total += left + right;
      out.error_estimate += diff;
    } else {
      // Right half first on the stack so the left is processed next.
      stack.push_back({mid, job.hi, right, job.depth + 1});
      stack.push_back({job.lo, mid, left, job.depth + 1});
    }
  }
  out.value = total;
  out.previous_error = out.error_estimate;
  if (!converged) {
    throw NonConvergence("adaptive Gauss-Legendre: bisection depth limit reached", out);
  }
  return out;
}

/// asech(u) = log(1/u + sqrt(1/u^2 - 1)) on (0, 1], taking 1 - u separately.
/// Near u = 1 the logarithm's argument is rebuilt from 1 - u so no digits
/// cancel; asech(u) ~ sqrt(2 (1 - u)) there.
inline Real asech_stable(const Real& u, const Real& one_minus_u) {
  using boost::multiprecision::log;
  using boost::multiprecision::log1p;
  using boost::multiprecision::sqrt;
  if (!(u > 0) || u > 1) throw std::domain_error("asech: argument outside (0, 1]");
  if (u < Real(0.5)) {
    const Real inv = 1 / u;
    return log(inv + sqrt(inv * inv - 1));
  }
  const Real& c = one_minus_u;
  return log1p((c + sqrt(c * (1 + u))) / u);
}

inline Real asech_stable(const Real& u) { return asech_stable(u, 1 - u); }

/// I_n = int_0^1 u^{2n-1} / asech(u) du by tanh-sinh.
inline QuadratureResult integral_In(int n, const PrecisionConfig& cfg = {}) {
  if (n < 1) throw std::invalid_argument("integral_In: need n >= 1");
  auto integrand = [n](const Real& u, const Real& one_minus_u) {
    return boost::multiprecision::pow(u, 2 * n - 1) / asech_stable(u, one_minus_u);
  };
  return integrate_01_singular(integrand, cfg);
}

/// I_n again, through u = 1 - t^2 and adaptive Gauss-Legendre in t. The
/// square-root singularity at u = 1 becomes smooth; the logarithmic one at
/// u = 0 is resolved by bisection.
inline QuadratureResult integral_In_substituted(int n, const PrecisionConfig& cfg = {}) {
  if (n < 1) throw std::invalid_argument("integral_In_substituted: need n >= 1");
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  auto integrand = [n](const Real& t) {
    const Real u = (1 - t) * (1 + t);
    return 2 * t * boost::multiprecision::pow(u, 2 * n - 1) / asech_stable(u, t * t);
  };
  return integrate_adaptive_gauss(integrand, Real(0), Real(1), cfg);
}

}  // namespace zetaodd
