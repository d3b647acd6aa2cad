#pragma once

#include <array>
#include <optional>
#include <string>

#include "sta/observables.hpp"

// Flavour doublets and the projector-valued Higgs field. The lepton doublet
// pairs an I- electron with an I+ neutrino; the Higgs combines the two
// projectors with scalar-pseudoscalar weights, Phi = phi1 E-3 + phi2 E+3 =
// varphi (1 + chi K3). Daggers are realized as reversion.

namespace sta {

struct LeptonDoublet {
  IdealElement e_L;  // sign -
  IdealElement nu_L; // sign +
  IdealElement e_R;  // sign -, the I+ right-handed slot stays empty

  static LeptonDoublet make(const ScalarPseudo& eL_a, const ScalarPseudo& eL_b,
                            const ScalarPseudo& nuL_a, const ScalarPseudo& nuL_b,
                            const ScalarPseudo& eR_a, const ScalarPseudo& eR_b) {
    return LeptonDoublet{IdealElement{IdealSign::minus, eL_a, eL_b},
                         IdealElement{IdealSign::plus, nuL_a, nuL_b},
                         IdealElement{IdealSign::minus, eR_a, eR_b}};
  }

  Multivector psi_L(const IdealGenerators& g) const {
    return ideal_element(g, e_L) + ideal_element(g, nu_L);
  }
  Multivector psi_R(const IdealGenerators& g) const { return ideal_element(g, e_R); }
};

struct HiggsField {
  ScalarPseudo phi1, phi2;
  Multivector assembled;
  ScalarPseudo varphi;
  std::optional<ScalarPseudo> chi; // defined when varphi is invertible
};

inline HiggsField assemble_higgs(const IdealGenerators& g, const ScalarPseudo& phi1,
                                 const ScalarPseudo& phi2) {
  HiggsField h{phi1, phi2, phi1 * g.E_minus() + phi2 * g.E_plus(),
               0.5 * (phi1 + phi2), std::nullopt};
  if (h.varphi.norm_sq() > 0.0)
    h.chi = (phi2 - phi1) / (phi1 + phi2);
  return h;
}

// The closed form varphi (1 + chi K3) written out as
// (phi1 + phi2)/2 + ((phi2 - phi1)/2) K3, which reproduces the projector
// form exactly (varphi * chi is evaluated as the exact linear combination).
inline Multivector higgs_closed_form(const IdealGenerators& g, const HiggsField& h) {
  const ScalarPseudo vchi = 0.5 * (h.phi2 - h.phi1);
  return h.varphi.to_multivector(g.algebra()) + vchi * g.K(3);
}

// SU(2) action: Psi_L' = Psi_L exp(-1/2 alpha_k J_k), Phi' = exp(+1/2 alpha_k J_k) Phi.
inline std::pair<Multivector, Multivector>
su2_transform(const IdealGenerators& g, const Multivector& psi_L, const HiggsField& phi,
              const std::array<double, 3>& alpha) {
  Multivector b(g.algebra());
  for (int k = 0; k < 3; ++k)
    b += g.J(k + 1) * (0.5 * alpha[static_cast<std::size_t>(k)]);
  return {psi_L * exp_bivector(-b), exp_bivector(b) * phi.assembled};
}

struct CondensateReport {
  int eigen_sign = 0;             // sign in e_L K3 = (eigen_sign) e_L
  double eigen_error = 0.0;       // |e_L K3 - eigen_sign e_L|
  ScalarPseudo phi1, phi2;        // configuration realizing the condensate
  double condensate_error = 0.0;  // |Psi_L Phi - (-varphi0 e_L K3)|
  double proportionality = 0.0;   // lambda in Psi_L Phi = lambda e_L
  std::string note;
};

// Condensate configuration (phi1, phi2) = (varphi0, 0): Psi_L Phi collapses
// onto the electron slot, and with e_L K3 = -e_L this equals
// -varphi0 e_L K3. The computed right-eigenvalue sign is reported rather
// than assumed.
inline CondensateReport condensate_check(const IdealGenerators& g,
                                         const LeptonDoublet& doublet, double varphi0) {
  const Multivector eL = ideal_element(g, doublet.e_L);
  const Multivector eLK3 = eL * g.K(3);

  CondensateReport r;
  r.eigen_sign = max_abs_diff(eLK3, -eL) <= max_abs_diff(eLK3, eL) ? -1 : +1;
  r.eigen_error = max_abs_diff(eLK3, eL * static_cast<double>(r.eigen_sign));
  r.phi1 = ScalarPseudo(varphi0);
  r.phi2 = ScalarPseudo(0.0);

  const HiggsField phi = assemble_higgs(g, r.phi1, r.phi2);
  const Multivector psiL = doublet.psi_L(g);
  const Multivector prod = psiL * phi.assembled;
  r.condensate_error = max_abs_diff(prod, (eLK3 * -varphi0));
  r.proportionality = -static_cast<double>(r.eigen_sign) * varphi0;
  r.note = "computed e_L K3 = " + std::string(r.eigen_sign < 0 ? "-" : "+") +
           "e_L; (phi1, phi2) = (varphi0, 0) gives Psi_L Phi = varphi0 e_L = "
           "-varphi0 e_L K3";
  return r;
}

// Per-grade max-abs content of a multivector.
struct GradeContent {
  std::array<double, 5> max_abs{0.0, 0.0, 0.0, 0.0, 0.0};

  static GradeContent of(const Multivector& m) {
    GradeContent gc;
    for (unsigned k = 0; k < m.size(); ++k) {
      const int g = std::popcount(k);
      gc.max_abs[static_cast<std::size_t>(g)] =
          std::max(gc.max_abs[static_cast<std::size_t>(g)], std::abs(m[k]));
    }
    return gc;
  }

  bool scalar_only(double tol = 0.0) const {
    for (std::size_t g = 1; g < max_abs.size(); ++g)
      if (max_abs[g] > tol)
        return false;
    return true;
  }
};

struct TermWithGrades {
  Multivector value;
  GradeContent grades;
};

// i G_H { Phi~ Psi_L~ Psi_R + Psi_R~ Psi_L Phi } with ~ the reversion.
inline TermWithGrades yukawa_term(const IdealGenerators& g, const Multivector& psi_L,
                                  const Multivector& psi_R, const HiggsField& phi,
                                  double G_H) {
  const Multivector t2 = (reverse(psi_R) * psi_L) * phi.assembled;
  const Multivector t1 = reverse(t2); // Phi~ Psi_L~ Psi_R
  const Multivector v = ScalarPseudo(0.0, G_H) * (t1 + t2);
  return TermWithGrades{v, GradeContent::of(v)};
}

// V = (m^2/2) Phi~ Phi + (lambda/4) (Phi~ Phi)^2.
inline TermWithGrades higgs_potential(const IdealGenerators& g, const HiggsField& phi,
                                      double m, double lambda) {
  const Multivector x = reverse(phi.assembled) * phi.assembled;
  const Multivector v = x * (0.5 * m * m) + (x * x) * (0.25 * lambda);
  (void)g;
  return TermWithGrades{v, GradeContent::of(v)};
}

} // namespace sta
