#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sta/observables.hpp"
#include "sta/rng.hpp"

using namespace sta;

namespace {

PolarCoeffs random_polar(IdealSign s, SplitMix64& rng) {
  return PolarCoeffs{s, rng.uniform(0.0, 2.0), rng.uniform(-std::numbers::pi, std::numbers::pi),
                     rng.uniform(0.0, 2.0), rng.uniform(-std::numbers::pi, std::numbers::pi)};
}

ScalarPseudo random_sp(SplitMix64& rng) {
  return ScalarPseudo(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
}

} // namespace

TEST_CASE("expectation basics") {
  const auto& st = Algebra::sta();
  const auto g = IdealGenerators::make(st);
  SplitMix64 rng(201);

  const Multivector m = random_multivector(st, rng);
  CHECK(expectation(Multivector::scalar(st, 1.0), m) == m);

  // Psi = E+3, M = e0 -> (e0 + e3)/2, frozen from the blade expansion.
  Multivector want(st);
  want.at(0b0001u) = 0.5;
  want.at(0b1000u) = 0.5;
  CHECK(expectation(g.E_plus(), Multivector::basis_vector(st, 0)) == want);

  // On a rotor the expectation is the rotor sandwich.
  const Multivector r = exp_bivector(g.J(2) * 0.3);
  const Multivector v = Multivector::basis_vector(st, 1);
  CHECK(max_abs_diff(expectation(r, v), rotor_sandwich(r, v).value) == 0.0);

  CHECK_THROWS_AS(expectation(Multivector::basis_vector(st, 1), m), not_even_error);
}

TEST_CASE("currents match the closed form") {
  const auto g = IdealGenerators::make(Algebra::sta());

  // Pinned examples.
  {
    const auto r = current(g, PolarCoeffs{IdealSign::plus, 1.0, 0.0, 0.0, 0.0});
    CHECK(r.direct[0] == 0.5);
    CHECK(r.direct[1] == 0.0);
    CHECK(r.direct[2] == 0.0);
    CHECK(r.direct[3] == 0.5);
    CHECK(r.agreement_error == 0.0);
  }
  {
    const auto r = current(g, PolarCoeffs{IdealSign::plus, 0.0, 0.0, 1.0, 0.0});
    CHECK(r.direct[0] == 0.5);
    CHECK(r.direct[3] == -0.5);
    CHECK(r.agreement_error == 0.0);
  }
  {
    const auto r = current(g, PolarCoeffs{IdealSign::plus, 1.0, 0.0, 1.0, 0.0});
    CHECK(r.direct[0] == 1.0);
    CHECK(r.direct[1] == 1.0);
    CHECK(r.direct[2] == 0.0);
    CHECK(r.direct[3] == 0.0);
    CHECK(r.agreement_error == 0.0);
  }

  SplitMix64 rng(203);
  for (int t = 0; t < 500; ++t) {
    for (IdealSign s : {IdealSign::plus, IdealSign::minus}) {
      const PolarCoeffs pc = random_polar(s, rng);
      const auto r = current(g, pc);
      CHECK(r.agreement_error <= 1e-12);
      CHECK(std::abs(r.direct.minkowski_square()) <= 1e-12);
    }
  }
}

TEST_CASE("spin current is parallel or antiparallel") {
  const auto g = IdealGenerators::make(Algebra::sta());
  SplitMix64 rng(207);
  for (int t = 0; t < 500; ++t) {
    for (IdealSign s : {IdealSign::plus, IdealSign::minus}) {
      const PolarCoeffs pc = random_polar(s, rng);
      CHECK(spin_current(g, pc).agreement_error <= 1e-12);
    }
  }
  const auto sp = spin_current(g, PolarCoeffs{IdealSign::plus, 1.0, 0.0, 0.0, 0.0});
  CHECK(sp.direct[0] == 0.5);
  CHECK(sp.direct[3] == 0.5);
}

TEST_CASE("transverse expectations vanish on pure ideals") {
  const auto& st = Algebra::sta();
  const auto g = IdealGenerators::make(st);
  SplitMix64 rng(209);
  for (int t = 0; t < 500; ++t) {
    for (IdealSign s : {IdealSign::plus, IdealSign::minus}) {
      const Multivector psi = ideal_element(g, s, random_sp(rng), random_sp(rng));
      for (int j = 1; j <= 2; ++j)
        CHECK(expectation(psi, Multivector::basis_vector(st, j)).max_abs() <= 1e-12);
    }
  }
}

TEST_CASE("charge readouts") {
  const auto& st = Algebra::sta();
  const auto g = IdealGenerators::make(st);
  SplitMix64 rng(211);

  // Right multiplication by K3 = 2 Q3 has eigenvalue +-1 on I+-.
  for (int t = 0; t < 200; ++t) {
    const Multivector xp = ideal_element(g, IdealSign::plus, random_sp(rng), random_sp(rng));
    const Multivector xm = ideal_element(g, IdealSign::minus, random_sp(rng), random_sp(rng));
    CHECK(xp * g.K(3) == xp);
    CHECK(xm * g.K(3) == -xm);
  }

  // Q1, Q2 = 0 on pure ideals: the transverse charge currents vanish.
  for (int t = 0; t < 200; ++t) {
    for (IdealSign s : {IdealSign::plus, IdealSign::minus}) {
      const Multivector psi = ideal_element(g, s, random_sp(rng), random_sp(rng));
      CHECK(charge_expectation(g, psi, 1).max_abs() <= 1e-12);
      CHECK(charge_expectation(g, psi, 2).max_abs() <= 1e-12);
    }
  }

  // The sigma^3 current: e0 K3 = -e3, so sigma^+-3 = -+ j+-.
  for (int t = 0; t < 200; ++t) {
    for (IdealSign s : {IdealSign::plus, IdealSign::minus}) {
      const PolarCoeffs pc = random_polar(s, rng);
      const Multivector psi = ideal_element(g, pc.to_ideal_element());
      const CurrentVector sigma3 =
          CurrentVector::from_multivector(charge_expectation(g, psi, 3));
      const double sg = s == IdealSign::plus ? 1.0 : -1.0;
      CHECK(max_abs_diff(sigma3, current_closed_form(pc) * -sg) <= 1e-12);
    }
  }

  CHECK_THROWS_AS(charge_expectation(g, g.E_plus(), 4), lookup_error);
}

TEST_CASE("flavour rotation") {
  const auto& st = Algebra::sta();
  const auto g = IdealGenerators::make(st);
  SplitMix64 rng(213);

  const Multivector psi = ideal_element(g, IdealSign::plus, random_sp(rng), random_sp(rng));
  CHECK(flavour_rotate(g, psi, {0.0, 0.0, 0.0}) == psi);

  // Rotation about the 3-axis is a pure phase on I+: exp(-i alpha/2) E+3.
  for (int t = 0; t < 50; ++t) {
    const double alpha = rng.uniform(-6.0, 6.0);
    const Multivector got = flavour_rotate(g, g.E_plus(), {0.0, 0.0, alpha});
    const Multivector want =
        ScalarPseudo(std::cos(alpha / 2.0), -std::sin(alpha / 2.0)) * g.E_plus();
    CHECK(approx_equal(got, want, 1e-12));
    CHECK(in_ideal(g, got, IdealSign::plus, 1e-12));
  }

  // A pi-rotation about the 1-axis flips the flavour: E+3 -> I-.
  const Multivector flipped = flavour_rotate(g, g.E_plus(), {std::numbers::pi, 0.0, 0.0});
  CHECK(in_ideal(g, flipped, IdealSign::minus, 1e-12));
  CHECK(approx_equal(flipped, -(g.pseudoscalar() * g.D_minus()), 1e-12));

  // The rotation fixes e0, so <e0> is preserved exactly in real arithmetic.
  for (int t = 0; t < 100; ++t) {
    const Multivector x = random_even_multivector(st, rng);
    const std::array<double, 3> alpha{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                                      rng.uniform(-3.0, 3.0)};
    const Multivector xr = flavour_rotate(g, x, alpha);
    const Multivector e0 = Multivector::basis_vector(st, 0);
    const double before = ((x * e0) * reverse(x)).max_abs() == 0.0
                              ? 0.0
                              : minkowski_square(grade_project((x * e0) * reverse(x), 1));
    const double after = minkowski_square(grade_project((xr * e0) * reverse(xr), 1));
    CHECK(std::abs(before - after) <= 1e-10);

    // Right multiplication by the rotor is orthogonal on coefficients.
    double n0 = 0.0, n1 = 0.0;
    for (unsigned k = 0; k < x.size(); ++k) {
      n0 += x[k] * x[k];
      n1 += xr[k] * xr[k];
    }
    CHECK(std::abs(n0 - n1) <= 1e-10);
  }
}

TEST_CASE("dipole expectations") {
  const auto& st = Algebra::sta();
  const auto g = IdealGenerators::make(st);
  SplitMix64 rng(217);

  // (+, a=1, b=0), j=1: <K1> = D-3 = (K1 + i K2)/2 = (e1e0 + e1e3)/2.
  Multivector want(st);
  want.at(0b0011u) = -0.5; // e1e0
  want.at(0b1010u) = 0.5;  // e1e3
  CHECK(dipole(g, g.E_plus(), 1) == want);
  CHECK(dipole(g, g.E_plus(), 1) == g.D_minus());

  for (int t = 0; t < 300; ++t) {
    for (IdealSign s : {IdealSign::plus, IdealSign::minus}) {
      const double sg = s == IdealSign::plus ? 1.0 : -1.0;
      const Multivector psi = ideal_element(g, s, random_sp(rng), random_sp(rng));

      // <K3> = 0.
      CHECK(dipole(g, psi, 3).max_abs() <= 1e-12);

      // <K1> = +- i <K2>.
      const Multivector k1 = dipole(g, psi, 1);
      const Multivector k2 = dipole(g, psi, 2);
      CHECK(max_abs_diff(k1, (g.pseudoscalar() * k2) * sg) <= 1e-12);

      // K+- is a null bivector: scalar and pseudoscalar parts of its square
      // vanish (the whole square does).
      const Multivector sq = k1 * k1;
      CHECK(std::abs(sq.scalar_part()) <= 1e-12);
      CHECK(std::abs(sq.pseudoscalar_part()) <= 1e-12);
      CHECK(sq.max_abs() <= 1e-12);

      // Dualisation <K_j> = -i <J_j> holds bitwise by construction of J.
      for (int j = 1; j <= 3; ++j) {
        const Multivector lhs = expectation(psi, g.K(j));
        const Multivector rhs = -(g.pseudoscalar() * expectation(psi, g.J(j)));
        CHECK(max_abs_diff(lhs, rhs) == 0.0);
      }
    }
  }
}

TEST_CASE("mixed-ideal currents") {
  const auto& st = Algebra::sta();
  const auto g = IdealGenerators::make(st);
  SplitMix64 rng(219);

  // Pure state degenerates to the single-ideal results.
  {
    const auto r = mixed_currents(g, IdealElement{IdealSign::plus, ScalarPseudo(1.0), {}},
                                  IdealElement{IdealSign::minus, {}, {}});
    CHECK(r.e0_additivity_error == 0.0);
    CHECK(r.total_e0[0] == 0.5);
    CHECK(r.total_e0[3] == 0.5);
  }

  // Witness that the mixed current need not be null: a=1 on both ideals
  // gives <e0> = e0 and <e3> = e3.
  {
    const auto r = mixed_currents(g, IdealElement{IdealSign::plus, ScalarPseudo(1.0), {}},
                                  IdealElement{IdealSign::minus, ScalarPseudo(1.0), {}});
    CHECK(r.total_e0[0] == 1.0);
    CHECK(r.total_e0[1] == 0.0);
    CHECK(r.total_e0[2] == 0.0);
    CHECK(r.total_e0[3] == 0.0);
    CHECK(r.total_e0.minkowski_square() == 1.0);
    CHECK(r.total_e3[3] == 1.0);
    CHECK(r.total_e3[0] == 0.0);
  }

  for (int t = 0; t < 300; ++t) {
    const IdealElement p{IdealSign::plus, random_sp(rng), random_sp(rng)};
    const IdealElement m{IdealSign::minus, random_sp(rng), random_sp(rng)};
    const auto r = mixed_currents(g, p, m);
    CHECK(r.e0_additivity_error <= 1e-12);
    CHECK(r.e3_additivity_error <= 1e-12);
    CHECK(r.cross_only_error <= 1e-12);
    CHECK(r.pure_term_error <= 1e-12);
  }
}
