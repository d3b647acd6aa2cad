#pragma once

#include <array>
#include <cmath>

#include "sta/ideals.hpp"

// Expectation values <M> = Psi M ~Psi over the STA Pauli ideals: the
// lightlike currents j+- and s+-3, charge-current readouts, right-handed
// flavour rotations and the bivector (dipole) expectations.

namespace sta {

struct PolarCoeffs {
  IdealSign sign = IdealSign::plus;
  double r_a = 0.0;
  double theta_a = 0.0;
  double r_b = 0.0;
  double theta_b = 0.0;

  IdealElement to_ideal_element() const {
    return IdealElement{sign, ScalarPseudo::polar(r_a, theta_a),
                        ScalarPseudo::polar(r_b, theta_b)};
  }
};

struct CurrentVector {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0}; // components on (e0, e1, e2, e3)

  double operator[](int mu) const { return c[static_cast<std::size_t>(mu)]; }
  double& operator[](int mu) { return c[static_cast<std::size_t>(mu)]; }

  double minkowski_square() const {
    return c[0] * c[0] - c[1] * c[1] - c[2] * c[2] - c[3] * c[3];
  }

  Multivector to_multivector(const AlgebraPtr& alg) const {
    Multivector m(alg);
    for (int mu = 0; mu < 4; ++mu)
      m.at(1u << mu) = c[static_cast<std::size_t>(mu)];
    return m;
  }

  static CurrentVector from_multivector(const Multivector& m, double grade_tol = 1e-12) {
    CurrentVector v;
    for (int mu = 0; mu < 4; ++mu)
      v[mu] = m[1u << mu];
    Multivector rest = m - v.to_multivector(m.algebra());
    if (rest.max_abs() > grade_tol)
      throw grade_error("expectation of a vector has non-vector content");
    return v;
  }

  friend CurrentVector operator+(CurrentVector a, const CurrentVector& b) {
    for (int mu = 0; mu < 4; ++mu)
      a[mu] += b[mu];
    return a;
  }
  friend CurrentVector operator-(CurrentVector a, const CurrentVector& b) {
    for (int mu = 0; mu < 4; ++mu)
      a[mu] -= b[mu];
    return a;
  }
  friend CurrentVector operator*(CurrentVector a, double s) {
    for (int mu = 0; mu < 4; ++mu)
      a[mu] *= s;
    return a;
  }
};

inline double max_abs_diff(const CurrentVector& a, const CurrentVector& b) {
  double m = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    m = std::max(m, std::abs(a[mu] - b[mu]));
  return m;
}

// <M> = Psi M ~Psi.
inline Multivector expectation(const Multivector& psi, const Multivector& m,
                               double even_tol = 0.0) {
  if (!is_even(psi, even_tol))
    throw not_even_error("expectation requires an even-grade state");
  return (psi * m) * reverse(psi);
}

// Closed form of j+- in polar data.
inline CurrentVector current_closed_form(const PolarCoeffs& pc) {
  const double sg = pc.sign == IdealSign::plus ? 1.0 : -1.0;
  const double d = pc.theta_a - pc.theta_b;
  CurrentVector j;
  j[0] = 0.5 * (pc.r_a * pc.r_a + pc.r_b * pc.r_b);
  j[1] = pc.r_a * pc.r_b * std::cos(d);
  j[2] = -sg * pc.r_a * pc.r_b * std::sin(d);
  j[3] = sg * 0.5 * (pc.r_a * pc.r_a - pc.r_b * pc.r_b);
  return j;
}

struct CurrentResult {
  CurrentVector closed_form;
  CurrentVector direct;
  double agreement_error = 0.0;
};

// j+- = <e0>: both the closed form and the direct sandwich, with their
// componentwise distance.
inline CurrentResult current(const IdealGenerators& g, const PolarCoeffs& pc) {
  const Multivector psi = ideal_element(g, pc.to_ideal_element());
  const Multivector e0 = Multivector::basis_vector(g.algebra(), 0);
  CurrentResult r;
  r.closed_form = current_closed_form(pc);
  r.direct = CurrentVector::from_multivector(expectation(psi, e0));
  r.agreement_error = max_abs_diff(r.closed_form, r.direct);
  return r;
}

// s+-3 = <e3> = +- j+-.
inline CurrentResult spin_current(const IdealGenerators& g, const PolarCoeffs& pc) {
  const Multivector psi = ideal_element(g, pc.to_ideal_element());
  const Multivector e3 = Multivector::basis_vector(g.algebra(), 3);
  const double sg = pc.sign == IdealSign::plus ? 1.0 : -1.0;
  CurrentResult r;
  r.closed_form = current_closed_form(pc) * sg;
  r.direct = CurrentVector::from_multivector(expectation(psi, e3));
  r.agreement_error = max_abs_diff(r.closed_form, r.direct);
  return r;
}

// sigma^j = Psi (e0 K_j) ~Psi = <e^j> with the reciprocal frame e^0 = e0,
// e^j = -e_j.
inline Multivector charge_expectation(const IdealGenerators& g, const Multivector& psi,
                                      int j) {
  if (j < 1 || j > 3)
    throw lookup_error("charge axis must be 1, 2 or 3");
  const Multivector e0 = Multivector::basis_vector(g.algebra(), 0);
  return expectation(psi, e0 * g.K(j));
}

// Right action of exp(-(i/2) alpha_j K_j) = exp(-(1/2) alpha_j J_j).
inline Multivector flavour_rotate(const IdealGenerators& g, const Multivector& psi,
                                  const std::array<double, 3>& alpha) {
  Multivector b(g.algebra());
  for (int j = 0; j < 3; ++j)
    b += g.J(j + 1) * (-0.5 * alpha[static_cast<std::size_t>(j)]);
  return psi * exp_bivector(b);
}

// Bivector expectation <K_j>; K+- is the j = 1 case.
inline Multivector dipole(const IdealGenerators& g, const Multivector& psi, int j) {
  if (j < 1 || j > 3)
    throw lookup_error("dipole axis must be 1, 2 or 3");
  return expectation(psi, g.K(j));
}

struct MixedCurrentReport {
  CurrentVector total_e0, total_e3;
  CurrentVector sum_j, diff_j;
  double e0_additivity_error = 0.0;
  double e3_additivity_error = 0.0;
  double cross_only_error = 0.0; // <e_{1,2}> minus the pure cross terms
  double pure_term_error = 0.0;  // per-ideal <e_{1,2}> contributions
};

// Superposition Psi = Psi+ + Psi-: <e0> = j+ + j-, <e3> = j+ - j-, and the
// transverse expectations contain only the cross terms.
inline MixedCurrentReport mixed_currents(const IdealGenerators& g, const IdealElement& plus,
                                         const IdealElement& minus) {
  const AlgebraPtr& alg = g.algebra();
  const Multivector pp = ideal_element(g, plus);
  const Multivector pm = ideal_element(g, minus);
  const Multivector psi = pp + pm;

  const Multivector e0 = Multivector::basis_vector(alg, 0);
  const Multivector e3 = Multivector::basis_vector(alg, 3);

  MixedCurrentReport r;
  r.total_e0 = CurrentVector::from_multivector(expectation(psi, e0));
  r.total_e3 = CurrentVector::from_multivector(expectation(psi, e3));
  const CurrentVector jp = CurrentVector::from_multivector(expectation(pp, e0));
  const CurrentVector jm = CurrentVector::from_multivector(expectation(pm, e0));
  r.sum_j = jp + jm;
  r.diff_j = jp - jm;
  r.e0_additivity_error = max_abs_diff(r.total_e0, r.sum_j);
  r.e3_additivity_error = max_abs_diff(r.total_e3, r.diff_j);

  for (int j = 1; j <= 2; ++j) {
    const Multivector ej = Multivector::basis_vector(alg, j);
    const Multivector total = (psi * ej) * reverse(psi);
    const Multivector cross = (pp * ej) * reverse(pm) + (pm * ej) * reverse(pp);
    const Multivector pure = (pp * ej) * reverse(pp) + (pm * ej) * reverse(pm);
    r.cross_only_error = std::max(r.cross_only_error, max_abs_diff(total, cross));
    r.pure_term_error = std::max(r.pure_term_error, pure.max_abs());
  }
  return r;
}

} // namespace sta
