// Build a weighed rotor from polar data, decompose it into the two Pauli
// ideals and print the currents each ideal carries.

#include <cstdio>

#include "sta/expr.hpp"
#include "sta/observables.hpp"
#include "sta/rng.hpp"

using namespace sta;

int main() {
  const auto g = IdealGenerators::make(Algebra::sta());

  const PolarCoeffs plus{IdealSign::plus, 1.0, 0.3, 0.5, -0.2};
  const PolarCoeffs minus{IdealSign::minus, 0.8, 1.1, 0.0, 0.0};
  const Multivector psi = ideal_element(g, plus.to_ideal_element()) +
                          ideal_element(g, minus.to_ideal_element());

  std::printf("state      : %s\n", expr::format_multivector(psi).c_str());

  const auto [pp, pm] = decompose(g, psi);
  std::printf("I+ part    : %s\n", expr::format_multivector(pp).c_str());
  std::printf("I- part    : %s\n", expr::format_multivector(pm).c_str());

  for (IdealSign s : {IdealSign::plus, IdealSign::minus}) {
    const auto res = current(g, s == IdealSign::plus ? plus : minus);
    std::printf("j%s         : (%.6f, %.6f, %.6f, %.6f)  minkowski^2 = %.2e\n",
                to_string(s), res.direct[0], res.direct[1], res.direct[2], res.direct[3],
                res.direct.minkowski_square());
  }

  const Multivector e0 = Multivector::basis_vector(g.algebra(), 0);
  const auto mixed = CurrentVector::from_multivector(expectation(psi, e0));
  std::printf("mixed <e0> : (%.6f, %.6f, %.6f, %.6f)  minkowski^2 = %.6f\n", mixed[0],
              mixed[1], mixed[2], mixed[3], mixed.minkowski_square());
  return 0;
}
