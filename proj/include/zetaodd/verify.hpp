#pragma once

// The acceptance gate: every published table and identity checked at its
// stated tolerance and time budget. Used by `zetaodd verify` and by the
// acceptance test binary, so both run the same code.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zetaodd/exact.hpp"
#include "zetaodd/gen_bernoulli.hpp"
#include "zetaodd/hyperbolic.hpp"
#include "zetaodd/quadrature.hpp"
#include "zetaodd/weights.hpp"
#include "zetaodd/zeta.hpp"

namespace zetaodd::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 means no runtime limit
};

namespace detail {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void check(bool condition, const std::string& failure) {
    if (!condition) {
      if (ok) notes << failure;
      ok = false;
    }
  }
};

inline std::vector<Rational> ints(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

inline void weights_exact(Outcome& o) {
  const std::vector<std::pair<int, std::vector<Rational>>> published = {
      {3, ints({1, -3, 2})},
      {5, ints({-1, 15, -50, 60, -24})},
      {7, ints({1, -63, 602, -2100, 3360, -2520, 720})},
  };
  for (const auto& [m, expected] : published) {
    o.check(solve_weights(m).weights == expected, "w^(" + std::to_string(m) + ") differs");
  }
  if (o.ok) o.notes << "m=3,5,7 match";
}

inline void d_tables(Outcome& o) {
  const std::vector<std::vector<Rational>> published = {
      ints({1}),
      ints({1, 1}),
      ints({2, 3, 2}),
      ints({6, 12, 11, 6}),
      ints({24, 60, 70, 50, 24}),
      ints({120, 360, 510, 450, 274, 120}),
      ints({720, 2520, 4200, 4410, 3248, 1764, 720}),
  };
  for (int l = 1; l <= 7; ++l) {
    std::vector<Rational> scaled;
    for (const auto& b : d_coefficients(l)) scaled.push_back(b * Rational(factorial(l - 1)));
    o.check(scaled == published[static_cast<std::size_t>(l - 1)], "D_" + std::to_string(l) + " row differs");
  }
  if (o.ok) o.notes << "D_1..D_7 rows match";
}

inline void bernoulli_oracle(Outcome& o) {
  for (int l = 1; l <= 12; ++l) {
    const auto oracle = series_oracle(l, 12);
    for (int n = 0; n <= 12; ++n) {
      o.check(gen_bernoulli(n, l) == oracle[static_cast<std::size_t>(n)],
              "B_" + std::to_string(n) + "^(" + std::to_string(l) + ") differs from series");
    }
  }
  for (int l = 1; l <= 8; ++l) {
    for (int n = 0; n <= 10; ++n) {
      const Rational b = gen_bernoulli(n, l);
      o.check(gen_bernoulli_poly(n, l, Rational(l)) == (n % 2 == 0 ? b : -b),
              "reflection fails at n=" + std::to_string(n) + ", l=" + std::to_string(l));
    }
  }
  if (o.ok) o.notes << "169 entries equal; reflection holds for n<=10, l<=8";
}

inline void structural(Outcome& o) {
  for (int l = 1; l <= 41; ++l) {
    o.check(coeff_b(1, l) == Rational(1), "b_1^(" + std::to_string(l) + ") != 1");
    o.check(coeff_b(l, l) == Rational(1), "b_l^(" + std::to_string(l) + ") != 1");
  }
  for (int m = 2; m <= 41; ++m) {
    const WeightVector w = solve_weights(m);
    Rational sum;
    for (const auto& v : w.weights) sum = sum + v;
    o.check(sum.is_zero(), "sum w != 0 at m=" + std::to_string(m));
    o.check(w.w(m) == -s_constant(m), "w_m != -S_m at m=" + std::to_string(m));
    if (m <= 15) {
      // sum_l w_l * (coefficients of 1/z^j in -D_l), j = 1..m
      std::vector<Rational> combined(static_cast<std::size_t>(m));
      for (int l = 1; l <= m; ++l) {
        const auto d = d_coefficients(l);  // highest power first
        for (int idx = 0; idx < l; ++idx) {
          const int power = l - idx;
          combined[static_cast<std::size_t>(power - 1)] =
              combined[static_cast<std::size_t>(power - 1)] + w.w(l) * d[static_cast<std::size_t>(idx)];
        }
      }
      for (int j = 1; j < m; ++j) {
        o.check(combined[static_cast<std::size_t>(j - 1)].is_zero(),
                "residue identity: power " + std::to_string(j) + " nonzero at m=" + std::to_string(m));
      }
      o.check(combined.back() == -w.s_m, "residue identity: top power != -S_m at m=" + std::to_string(m));
    }
  }
  if (o.ok) o.notes << "m<=41 identities hold; residue identity m<=15";
}

inline void zeta3_integral(Outcome& o) {
  const PrecisionConfig cfg;
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  const Real diff = boost::multiprecision::abs(zeta3_direct(cfg) - zeta_reference(3, cfg.working_digits));
  o.check(diff < ten_to_minus(10), "zeta(3) integral off by " + format_decimal(diff, 3));
  if (o.ok) o.notes << "|diff| = " << format_decimal(diff, 3);
}

inline void three_way(Outcome& o) {
  Real worst = 0;
  for (int m : {3, 5, 7, 9, 11, 13}) {
    const ZetaReport r = zeta_report(m, PrecisionConfig{}, 9);
    using boost::multiprecision::abs;
    const Real d23 = abs(r.via_eq23 - r.reference);
    const Real d29 = abs(r.via_eq29 - r.reference);
    o.check(d23 < ten_to_minus(9), "eq23 off at m=" + std::to_string(m));
    o.check(d29 < ten_to_minus(9), "eq29 off at m=" + std::to_string(m));
    worst = std::max({worst, d23, d29});
  }
  if (o.ok) o.notes << "max |diff| = " << format_decimal(worst, 3);
}

inline void tau_and_i1(Outcome& o) {
  o.check(tau(2, 3) == Rational(1, 7), "tau_2^(3) = " + tau(2, 3).str());
  const PrecisionConfig cfg;
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  const Real p = pi();
  const Real expected = 7 * zeta_reference(3, cfg.working_digits) / (p * p);
  const Real diff = boost::multiprecision::abs(integral_In(1, cfg).value - expected);
  o.check(diff < ten_to_minus(12), "I_1 off by " + format_decimal(diff, 3));
  if (o.ok) o.notes << "tau_2^(3) = 1/7; |I_1 - 7 zeta(3)/pi^2| = " << format_decimal(diff, 3);
}

inline void partial_fractions(Outcome& o) {
  PrecisionScope scope(40);
  Real worst = 0;
  for (int l = 1; l <= 15; ++l) {
    for (int i = 1; i <= 30; ++i) {
      const Real u = Real(i) / 10;
      worst = std::max(worst, partial_fraction_residual(l, u));
    }
  }
  o.check(worst < ten_to_minus(25), "max residual " + format_decimal(worst, 3));
  if (o.ok) o.notes << "max residual " << format_decimal(worst, 3);
}

inline void in_sequence(Outcome& o) {
  const PrecisionConfig cfg;
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  const auto rows = in_sequence_report(30, cfg);  // throws on a positivity/monotonicity break
  o.check(rows.size() == 30, "sequence truncated");
  Real worst = 0;
  for (int n = 1; n <= 10; ++n) {
    const Real other = integral_In_substituted(n, cfg).value;
    worst = std::max(worst, boost::multiprecision::abs(other - rows[static_cast<std::size_t>(n - 1)].integral.value));
  }
  o.check(worst < ten_to_minus(12), "two-scheme disagreement " + format_decimal(worst, 3));
  if (o.ok) {
    o.notes << "I_1 > ... > I_30 = " << format_decimal(rows.back().integral.value, 6)
            << " > 0; two-scheme max |diff| " << format_decimal(worst, 3);
  }
}

inline void dimension(Outcome& o) {
  const ScanReport scan = dimension_scan(20);
  for (const auto& row : scan.rows) {
    o.check(!row.is_zero, "tau top vanishes at n=" + std::to_string(row.n));
  }
  const PrecisionConfig cfg;
  Real worst = 0;
  for (int n = 1; n <= 8; ++n) {
    const LinearForm form = linear_form(n);
    const bool scan_nonzero = !scan.rows[static_cast<std::size_t>(n - 1)].is_zero;
    o.check((form.theta_next == 1) == scan_nonzero, "branch mismatch at n=" + std::to_string(n));
    const auto coeffs = integral_coefficients(tau_matrix(n), form.thetas);
    for (int j = 1; j <= n; ++j) {
      const Rational want = j == n ? Rational(form.theta_next) : Rational(0);
      o.check(coeffs[static_cast<std::size_t>(j - 1)] == want, "theta does not telescope at n=" + std::to_string(n));
    }
    PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
    const Real residual = linear_form_residual(form, cfg);
    o.check(residual < ten_to_minus(8), "linear form residual " + format_decimal(residual, 3) + " at n=" + std::to_string(n));
    worst = std::max(worst, residual);
  }
  if (o.ok) o.notes << "no zero for n<=20 (evidence, not proof); n<=8 residual max " << format_decimal(worst, 3);
}

inline void cache_roundtrip(Outcome& o) {
  namespace fs = std::filesystem;
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("zetaodd-verify-" + std::to_string(rd()));
  fs::create_directories(dir);
  const fs::path file = dir / "bernoulli.cache";
  try {
    BernoulliTable written;
    written.fill(12, 12);
    written.save(file);
    BernoulliTable reloaded;
    reloaded.load(file, false);
    o.check(reloaded.entries() == written.entries(), "reloaded table differs");

    // Bump one numerator and expect the revalidation to name the entry.
    std::string text = written.serialize();
    const std::string needle = "B 2 1 1/6\n";
    const auto at = text.find(needle);
    o.check(at != std::string::npos, "expected entry missing from serialization");
    if (at != std::string::npos) {
      text.replace(at, needle.size(), "B 2 1 2/6\n");
      std::ofstream(file, std::ios::trunc) << text;
      bool detected = false;
      try {
        BernoulliTable tampered;
        tampered.load(file, false);
      } catch (const CacheError& e) {
        detected = std::string(e.what()).find("(n=2, l=1)") != std::string::npos;
      }
      o.check(detected, "tampered entry not detected");
    }
  } catch (...) {
    fs::remove_all(dir);
    throw;
  }
  fs::remove_all(dir);
  if (o.ok) o.notes << "169 entries round-trip; tamper detected";
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  void (*run)(Outcome&);
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {1, "weight vectors m=3,5,7 exact", 1.0, weights_exact},
      {2, "D_l numerator tables l=1..7 exact", 1.0, d_tables},
      {3, "Bernoulli closed form == series oracle; reflection", 5.0, bernoulli_oracle},
      {4, "structural identities m<=41", 30.0, structural},
      {5, "zeta(3) whole-line integral vs series oracle (1e-10)", 2.0, zeta3_integral},
      {6, "three-way zeta agreement m=3..13 (1e-9)", 60.0, three_way},
      {7, "tau_2^(3) = 1/7 and I_1 = 7 zeta(3)/pi^2 (1e-12)", 0.0, tau_and_i1},
      {8, "sech partial-fraction identity l<=15 (1e-25 at 40 digits)", 0.0, partial_fractions},
      {9, "I_n positive, decreasing to n=30; two schemes agree (1e-12)", 60.0, in_sequence},
      {10, "top tau nonzero n<=20; linear forms n<=8 (1e-8)", 120.0, dimension},
      {11, "Bernoulli cache round-trip and tamper detection", 0.0, cache_roundtrip},
  };
  return table;
}

}  // namespace detail

inline std::vector<int> all_criteria() {
  std::vector<int> ids;
  for (const auto& c : detail::criteria()) ids.push_back(c.id);
  return ids;
}

inline CriterionResult run_criterion(int id) {
  for (const auto& c : detail::criteria()) {
    if (c.id != id) continue;
    CriterionResult out{c.id, c.name, false, "", 0.0, c.budget_seconds};
    detail::Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(outcome);
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.notes << "exception: " << e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.passed = outcome.ok;
    out.detail = outcome.notes.str();
    if (out.budget_seconds > 0 && out.seconds > out.budget_seconds) {
      out.passed = false;
      out.detail += " [over time budget]";
    }
    return out;
  }
  throw std::invalid_argument("unknown criterion " + std::to_string(id));
}

inline std::string format_line(const CriterionResult& r) {
  char timing[64];
  if (r.budget_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", r.seconds, r.budget_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
  }
  std::ostringstream out;
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " (" << timing << ") " << r.detail;
  return out.str();
}

}  // namespace zetaodd::verify
