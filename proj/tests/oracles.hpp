#pragma once

// Test-only reference computations. None of these call into the routes they
// are used to check.

#include <gmpxx.h>

#include <vector>

namespace zetaodd::testing {

/// Classical Bernoulli numbers by the Akiyama-Tanigawa triangle.
inline std::vector<mpq_class> akiyama_tanigawa(int max) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(static_cast<std::size_t>(max) + 1);
  for (int m = 0; m <= max; ++m) {
    a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
      a[static_cast<std::size_t>(j - 1)].canonicalize();
    }
    out.push_back(a[0]);
  }
  // The triangle yields B_1 = +1/2; the generating function z/(e^z-1) has -1/2.
  if (max >= 1) out[1] = -out[1];
  return out;
}

/// Integer polynomial in X (index = power) for sum_{p<l} e^{(2p+1-l)u} with
/// X = e^u + e^{-u}: S_0 = 0, S_1 = 1, S_{l+1} = X S_l - S_{l-1}.
inline std::vector<mpz_class> symmetric_sum_poly(int l) {
  std::vector<mpz_class> prev{0};
  std::vector<mpz_class> cur{1};
  for (int k = 1; k < l; ++k) {
    std::vector<mpz_class> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// q_j^(l) read off as the coefficient of X^{l+1-2j} in symmetric_sum_poly(l).
inline mpz_class q_from_chebyshev(int j, int l) {
  const auto poly = symmetric_sum_poly(l);
  const int power = l + 1 - 2 * j;
  if (power < 0 || power >= static_cast<int>(poly.size())) return 0;
  return poly[static_cast<std::size_t>(power)];
}

}  // namespace zetaodd::testing
