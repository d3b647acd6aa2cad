#pragma once

#include <cmath>

#include "sta/algebra.hpp"

namespace sta {

// Scalar + pseudoscalar coefficient s + p*i with i^2 = -1; multiplies like a
// complex number. In STA it commutes with every even-grade multivector, in
// GA3 with everything, which is what makes it usable as the coefficient ring
// of the ideal calculus. Conjugation negates the pseudoscalar part.
struct ScalarPseudo {
  double s = 0.0;
  double p = 0.0;

  constexpr ScalarPseudo() = default;
  constexpr ScalarPseudo(double s_, double p_ = 0.0) : s(s_), p(p_) {}

  static constexpr ScalarPseudo i() { return ScalarPseudo(0.0, 1.0); }

  static ScalarPseudo polar(double r, double theta) {
    return ScalarPseudo(r * std::cos(theta), r * std::sin(theta));
  }

  constexpr ScalarPseudo conj() const { return ScalarPseudo(s, -p); }
  constexpr double norm_sq() const { return s * s + p * p; }
  double abs() const { return std::hypot(s, p); }

  ScalarPseudo exp() const {
    const double m = std::exp(s);
    return ScalarPseudo(m * std::cos(p), m * std::sin(p));
  }

  friend constexpr ScalarPseudo operator+(ScalarPseudo a, ScalarPseudo b) {
    return ScalarPseudo(a.s + b.s, a.p + b.p);
  }
  friend constexpr ScalarPseudo operator-(ScalarPseudo a, ScalarPseudo b) {
    return ScalarPseudo(a.s - b.s, a.p - b.p);
  }
  friend constexpr ScalarPseudo operator-(ScalarPseudo a) { return ScalarPseudo(-a.s, -a.p); }
  friend constexpr ScalarPseudo operator*(ScalarPseudo a, ScalarPseudo b) {
    return ScalarPseudo(a.s * b.s - a.p * b.p, a.s * b.p + a.p * b.s);
  }
  friend constexpr ScalarPseudo operator*(double a, ScalarPseudo b) {
    return ScalarPseudo(a * b.s, a * b.p);
  }
  friend constexpr ScalarPseudo operator*(ScalarPseudo a, double b) {
    return ScalarPseudo(a.s * b, a.p * b);
  }
  friend constexpr ScalarPseudo operator/(ScalarPseudo a, ScalarPseudo b) {
    const double n = b.norm_sq();
    const ScalarPseudo num = a * b.conj();
    return ScalarPseudo(num.s / n, num.p / n);
  }
  friend constexpr bool operator==(ScalarPseudo a, ScalarPseudo b) {
    return a.s == b.s && a.p == b.p;
  }
  friend constexpr bool operator!=(ScalarPseudo a, ScalarPseudo b) { return !(a == b); }

  Multivector to_multivector(const AlgebraPtr& alg) const {
    Multivector m(alg);
    m.at(0) = s;
    m.at(alg->pseudoscalar_blade()) = p;
    return m;
  }
};

// Left action (s + p*i) * M.
inline Multivector operator*(const ScalarPseudo& c, const Multivector& m) {
  Multivector r = m * c.s;
  if (c.p != 0.0)
    r += (Multivector::pseudoscalar(m.algebra()) * m) * c.p;
  return r;
}

inline double max_abs_diff(const ScalarPseudo& a, const ScalarPseudo& b) {
  return std::max(std::abs(a.s - b.s), std::abs(a.p - b.p));
}

} // namespace sta
