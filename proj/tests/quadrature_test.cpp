#include <gtest/gtest.h>

#include "zetaodd/quadrature.hpp"

namespace zetaodd {
namespace {

using boost::multiprecision::abs;

// Frozen with mpmath at 50 digits.
constexpr const char* kZeta3 = "1.20205690315959428539973816151144999076498629";
constexpr const char* kAsechHalf = "1.31695789692481670862504634730796844402698197";
const std::vector<std::pair<int, const char*>> kIn = {
    {1, "0.852556797635011581847042853192333746116"},
    {2, "0.6141831391561069975511433440807358101218"},
    {3, "0.5047674637605639825040037791769712177889"},
    {10, "0.2790921378528025193798550490111587228785"},
};

class Quadrature : public ::testing::Test {
 protected:
  PrecisionConfig cfg;
  PrecisionScope scope{50};
};

TEST_F(Quadrature, ConstantOnUnitInterval) {
  const auto r = integrate_01_singular([](const Real&) { return Real(1); }, cfg);
  EXPECT_LT(abs(r.value - 1), ten_to_minus(30));
  EXPECT_GE(r.levels, 3);
}

TEST_F(Quadrature, EndpointSingularity) {
  // int_0^1 (1/u - 1)^{-1/2} du = pi/2, written with 1 - u passed separately.
  const auto r = integrate_01_singular(
      [](const Real& u, const Real& c) { return boost::multiprecision::sqrt(u / c); }, cfg);
  EXPECT_LT(abs(r.value - pi() / 2), ten_to_minus(25));
}

TEST_F(Quadrature, AsechKernelOnUnitInterval) {
  // Outer nodes round to u == 1, so the kernel must be fed 1 - u directly.
  const auto r = integrate_01_singular([](const Real& u, const Real& c) { return u / asech_stable(u, c); }, cfg);
  const Real expected = 7 * Real(kZeta3) / (pi() * pi());
  EXPECT_LT(abs(r.value - expected), ten_to_minus(12));
}

TEST_F(Quadrature, DecayingExponential) {
  const auto r = integrate_0inf_decaying([](const Real& u) { return boost::multiprecision::exp(-u); }, cfg);
  EXPECT_LT(abs(r.value - 1), ten_to_minus(30));
}

TEST_F(Quadrature, LogisticKernelOnHalfLine) {
  // int_0^inf e^{-u}(1-e^{-u}) / ((1+e^{-u})^3 u) du = 7 zeta(3) / (4 pi^2)
  const auto r = integrate_0inf_decaying(
      [](const Real& u) {
        const Real y = boost::multiprecision::exp(-u);
        return y * (1 - y) / ((1 + y) * (1 + y) * (1 + y) * u);
      },
      cfg);
  const Real expected = 7 * Real(kZeta3) / (4 * pi() * pi());
  EXPECT_LT(abs(r.value - expected), ten_to_minus(12));
}

TEST_F(Quadrature, LogisticKernelIsEven) {
  auto kernel = [](const Real& u) {
    const Real y = boost::multiprecision::exp(-u);
    return y * (1 - y) / ((1 + y) * (1 + y) * (1 + y) * u);
  };
  for (int i = 1; i <= 20; ++i) {
    const Real u = Real(i) / 4;
    EXPECT_LT(abs(kernel(u) - kernel(-u)), ten_to_minus(40)) << i;
  }
}

TEST_F(Quadrature, ErrorEstimatesShrink) {
  const auto r = integral_In(2, cfg);
  EXPECT_GE(r.previous_error, r.error_estimate);
  EXPECT_GT(r.nodes_used, 0u);
}

TEST_F(Quadrature, TooFewLevelsRaisesWithPartial) {
  PrecisionConfig tight = cfg;
  tight.max_levels = 2;
  try {
    integral_In(1, tight);
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergence& e) {
    EXPECT_GT(e.partial().nodes_used, 0u);
    EXPECT_GT(e.partial().value, 0);
  }
}

TEST_F(Quadrature, OscillatingIntegrandDoesNotConverge) {
  auto wild = [](const Real& u) { return boost::multiprecision::sin(1 / u) / u; };
  PrecisionConfig short_run = cfg;
  short_run.max_levels = 6;
  EXPECT_THROW(integrate_01_singular(wild, short_run), NonConvergence);
}

TEST_F(Quadrature, GaussLegendreSmoothIntegrands) {
  const auto poly = integrate_adaptive_gauss([](const Real& x) { return x * x * x; }, Real(0), Real(2), cfg);
  EXPECT_LT(abs(poly.value - 4), ten_to_minus(35));
  const auto arctan = integrate_adaptive_gauss([](const Real& x) { return 1 / (1 + x * x); }, Real(0), Real(1), cfg);
  EXPECT_LT(abs(arctan.value - pi() / 4), ten_to_minus(30));
}

TEST_F(Quadrature, GaussLegendreGivesUpOnLogSingularity) {
  // A bare log(x) error per panel scales with the panel width, so the local test never passes.
  PrecisionConfig short_run = cfg;
  short_run.max_levels = 2;
  EXPECT_THROW(integrate_adaptive_gauss([](const Real& x) { return boost::multiprecision::log(x); }, Real(0),
                                        Real(1), short_run),
               NonConvergence);
}

TEST_F(Quadrature, AsechValues) {
  EXPECT_EQ(asech_stable(Real(1)), 0);
  EXPECT_LT(abs(asech_stable(Real(0.5)) - Real(kAsechHalf)), ten_to_minus(40));
  // Near 1: asech(u) / sqrt(1 - u) -> sqrt(2).
  const Real c = ten_to_minus(12);
  const Real ratio = asech_stable(1 - c, c) / boost::multiprecision::sqrt(c);
  EXPECT_LT(abs(ratio - boost::multiprecision::sqrt(Real(2))), ten_to_minus(10));
  // Near 0: asech(u) ~ log(2/u).
  const Real u = ten_to_minus(8);
  const Real approx = boost::multiprecision::log(2 / u);
  EXPECT_LT(abs(asech_stable(u) / approx - 1), Real(0.01));
}

TEST_F(Quadrature, AsechDomain) {
  EXPECT_THROW(asech_stable(Real(0)), std::domain_error);
  EXPECT_THROW(asech_stable(Real(-1)), std::domain_error);
  EXPECT_THROW(asech_stable(Real(1.5)), std::domain_error);
}

TEST_F(Quadrature, InAgainstFrozenValues) {
  for (const auto& [n, text] : kIn) {
    const auto r = integral_In(n, cfg);
    EXPECT_LT(abs(r.value - Real(text)), ten_to_minus(30)) << "n=" << n;
  }
}

TEST_F(Quadrature, InTwoSchemesAgree) {
  for (int n = 1; n <= 10; ++n) {
    const Real a = integral_In(n, cfg).value;
    const Real b = integral_In_substituted(n, cfg).value;
    ASSERT_LT(abs(a - b), ten_to_minus(25)) << "n=" << n;
  }
}

TEST_F(Quadrature, InRejectsBadIndex) {
  EXPECT_THROW(integral_In(0, cfg), std::invalid_argument);
  EXPECT_THROW(integral_In_substituted(0, cfg), std::invalid_argument);
}

TEST(FormatDecimal, SignificantDigits) {
  PrecisionScope scope(50);
  EXPECT_EQ(format_decimal(Real(kZeta3), 20), "1.2020569031595942854");
  EXPECT_EQ(format_decimal(-Real(kZeta3) * 100, 6), "-120.206");
  EXPECT_EQ(format_decimal(Real(1) / 8, 4), "0.1250");
  EXPECT_EQ(format_decimal(Real(1) / 1024, 3), "0.000977");
  EXPECT_EQ(format_decimal(ten_to_minus(40) * 3, 3), "3.00e-40");
  EXPECT_EQ(format_decimal(Real(123456), 3), "1.23e+05");
}

TEST(PrecisionConfigTest, TargetAndGuard) {
  const auto c = PrecisionConfig::for_target(40);
  EXPECT_EQ(c.target_digits, 40);
  EXPECT_EQ(c.working_digits, 60);
  EXPECT_EQ(c.with_guard(5).working_digits, 60);
  EXPECT_EQ(c.with_guard(30).working_digits, 80);
}

}  // namespace
}  // namespace zetaodd
