// Prints the weight vector and tau row for the first few odd m, then checks
// the asech-kernel sum against the series value of zeta(m).

#include <iostream>

#include "zetaodd/zeta.hpp"

int main() {
  using namespace zetaodd;
  const PrecisionConfig cfg;
  PrecisionScope scope(static_cast<unsigned>(cfg.working_digits));
  for (int m = 3; m <= 9; m += 2) {
    const WeightVector w = solve_weights(m);
    std::cout << "m = " << m << "  S_m = " << w.s_m << "\n  w:";
    for (const auto& v : w.weights) std::cout << ' ' << v;
    std::cout << "\n  tau:";
    for (const auto& [j, t] : tau_row(m).taus) std::cout << " [" << j << "] " << t;
    const Real value = zeta_via_eq29(m, cfg);
    const Real reference = zeta_reference(m, cfg.working_digits);
    std::cout << "\n  zeta(m) = " << format_decimal(value, 25) << "  (|diff| "
              << format_decimal(boost::multiprecision::abs(value - reference), 2) << ")\n";
  }
}
