#pragma once

#include <array>
#include <string>
#include <vector>

#include "sta/ideals.hpp"

// 2x2 multivector-matrix representation of the Dirac algebra. Entries of the
// gamma matrices are timelike bivectors, states are matrices of weighed
// rotors (even-grade multivectors), and the sixteen ideal generators place
// E+-3 / D+-3 into single matrix slots. A substitution map gamma_mu ->
// L_mu^nu e_nu collapses the matrix algebra into plain STA and annihilates
// half of the generators.

namespace sta {

struct BiSpinor {
  Multivector m11, m12, m21, m22;

  explicit BiSpinor(const AlgebraPtr& alg)
      : m11(alg), m12(alg), m21(alg), m22(alg) {}

  BiSpinor(Multivector a11, Multivector a12, Multivector a21, Multivector a22)
      : m11(std::move(a11)), m12(std::move(a12)), m21(std::move(a21)), m22(std::move(a22)) {}

  const AlgebraPtr& algebra() const { return m11.algebra(); }

  static BiSpinor zero(const AlgebraPtr& alg) { return BiSpinor(alg); }

  static BiSpinor identity(const AlgebraPtr& alg) {
    BiSpinor b(alg);
    b.m11 = Multivector::scalar(alg, 1.0);
    b.m22 = Multivector::scalar(alg, 1.0);
    return b;
  }

  const Multivector& slot(int row, int col) const {
    if (row == 1 && col == 1) return m11;
    if (row == 1 && col == 2) return m12;
    if (row == 2 && col == 1) return m21;
    if (row == 2 && col == 2) return m22;
    throw lookup_error("BiSpinor slot indices must be 1 or 2");
  }

  double max_abs() const {
    return std::max(std::max(m11.max_abs(), m12.max_abs()),
                    std::max(m21.max_abs(), m22.max_abs()));
  }

  friend BiSpinor operator+(const BiSpinor& a, const BiSpinor& b) {
    return BiSpinor(a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22);
  }
  friend BiSpinor operator-(const BiSpinor& a, const BiSpinor& b) {
    return BiSpinor(a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22);
  }
  friend BiSpinor operator-(const BiSpinor& a) {
    return BiSpinor(-a.m11, -a.m12, -a.m21, -a.m22);
  }
  friend BiSpinor operator*(const BiSpinor& a, double s) {
    return BiSpinor(a.m11 * s, a.m12 * s, a.m21 * s, a.m22 * s);
  }

  // Entry arithmetic is the geometric product; order matters.
  friend BiSpinor operator*(const BiSpinor& a, const BiSpinor& b) {
    return BiSpinor(a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                    a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22);
  }

  friend bool operator==(const BiSpinor& a, const BiSpinor& b) {
    return a.m11 == b.m11 && a.m12 == b.m12 && a.m21 == b.m21 && a.m22 == b.m22;
  }

  BiSpinor adjoint() const {
    return BiSpinor(reverse(m11), reverse(m21), reverse(m12), reverse(m22));
  }
};

inline double max_abs_diff(const BiSpinor& a, const BiSpinor& b) {
  return std::max(std::max(max_abs_diff(a.m11, b.m11), max_abs_diff(a.m12, b.m12)),
                  std::max(max_abs_diff(a.m21, b.m21), max_abs_diff(a.m22, b.m22)));
}

inline bool approx_equal(const BiSpinor& a, const BiSpinor& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

// (s + p i) acts entrywise; on even entries i is central.
inline BiSpinor operator*(const ScalarPseudo& c, const BiSpinor& b) {
  return BiSpinor(c * b.m11, c * b.m12, c * b.m21, c * b.m22);
}

inline BiSpinor operator*(const Multivector& m, const BiSpinor& b) {
  return BiSpinor(m * b.m11, m * b.m12, m * b.m21, m * b.m22);
}

// Chiral representation: gamma0 = offdiag(1, 1), gamma_j = offdiag(K_j, -K_j).
inline BiSpinor gamma(const IdealGenerators& g, int mu) {
  const AlgebraPtr& alg = g.algebra();
  if (!alg->is_sta_signature())
    throw unsupported_algebra_error("gamma matrices require the STA signature");
  BiSpinor b(alg);
  if (mu == 0) {
    b.m12 = Multivector::scalar(alg, 1.0);
    b.m21 = Multivector::scalar(alg, 1.0);
  } else if (mu >= 1 && mu <= 3) {
    b.m12 = g.K(mu);
    b.m21 = -g.K(mu);
  } else {
    throw lookup_error("gamma index must be 0..3");
  }
  return b;
}

struct GammaSet {
  std::array<BiSpinor, 4> g;
  BiSpinor gamma5;

  const BiSpinor& operator[](int mu) const { return g.at(static_cast<std::size_t>(mu)); }
};

inline GammaSet make_gamma_set(const IdealGenerators& gen) {
  GammaSet s{{gamma(gen, 0), gamma(gen, 1), gamma(gen, 2), gamma(gen, 3)},
             BiSpinor(gen.algebra())};
  s.gamma5 = ((s.g[0] * s.g[1]) * s.g[2]) * s.g[3];
  return s;
}

// {gamma_mu, gamma_nu} - 2 eta_mu_nu, all ten pairs.
struct AnticommutatorCheck {
  int mu, nu;
  double max_abs_error;
};

inline std::vector<AnticommutatorCheck> anticommutator_table(const IdealGenerators& gen) {
  const GammaSet gs = make_gamma_set(gen);
  std::vector<AnticommutatorCheck> out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      const double eta = mu == nu ? (mu == 0 ? 1.0 : -1.0) : 0.0;
      const BiSpinor lhs = gs[mu] * gs[nu] + gs[nu] * gs[mu];
      const BiSpinor rhs = BiSpinor::identity(gen.algebra()) * (2.0 * eta);
      out.push_back(AnticommutatorCheck{mu, nu, max_abs_diff(lhs, rhs)});
    }
  }
  return out;
}

struct ChiralProjectors {
  BiSpinor gamma5;
  BiSpinor P_plus;
  BiSpinor P_minus;
};

// P+-C = (1 +- i gamma5)/2 with i the pseudoscalar times the identity.
inline ChiralProjectors gamma5_and_projectors(const IdealGenerators& gen) {
  const GammaSet gs = make_gamma_set(gen);
  const BiSpinor id = BiSpinor::identity(gen.algebra());
  const BiSpinor ig5 = ScalarPseudo::i() * gs.gamma5;
  return ChiralProjectors{gs.gamma5, (id + ig5) * 0.5, (id - ig5) * 0.5};
}

// Formal polynomial in the gamma symbols with scalar-pseudoscalar
// coefficients; evaluated either in the matrix representation or, after a
// substitution gamma_mu -> multivector, in plain STA.
struct GammaPolynomial {
  struct Term {
    ScalarPseudo coeff;
    std::vector<int> gammas;
  };
  std::vector<Term> terms;
};

struct IdealGeneratorSpec {
  std::string name;    // e.g. "E_UL3+"
  bool is_E;           // E-family or D-family
  int row, col;        // designated matrix slot
  IdealSign sign;
  GammaPolynomial poly;
};

// The sixteen ideal generators of the matrix algebra. Each evaluates to a
// matrix with E+-3 (or D+-3) in exactly one slot.
inline std::vector<IdealGeneratorSpec> sixteen_generator_specs() {
  std::vector<IdealGeneratorSpec> out;
  const ScalarPseudo q(0.25), iq(0.0, 0.25);
  auto add = [&](const std::string& base, bool isE, int row, int col,
                 std::vector<GammaPolynomial::Term> common,
                 std::vector<GammaPolynomial::Term> signed_part) {
    for (IdealSign s : {IdealSign::plus, IdealSign::minus}) {
      GammaPolynomial p;
      p.terms = common;
      const double sg = s == IdealSign::plus ? 1.0 : -1.0;
      for (auto t : signed_part) {
        t.coeff = sg * t.coeff;
        p.terms.push_back(t);
      }
      out.push_back(IdealGeneratorSpec{base + (s == IdealSign::plus ? "+" : "-"), isE, row,
                                       col, s, std::move(p)});
    }
  };

  using T = GammaPolynomial::Term;
  add("E_DR3", true, 2, 2, {T{q, {0, 0}}, T{iq, {0, 1, 2, 3}}},
      {T{-q, {3, 0}}, T{iq, {1, 2}}});
  add("E_UL3", true, 1, 1, {T{q, {0, 0}}, T{-iq, {0, 1, 2, 3}}},
      {T{q, {3, 0}}, T{iq, {1, 2}}});
  add("E_UR3", true, 1, 2, {T{q, {0}}, T{iq, {1, 2, 3}}},
      {T{q, {3}}, T{iq, {0, 1, 2}}});
  add("E_DL3", true, 2, 1, {T{q, {0}}, T{-iq, {1, 2, 3}}},
      {T{-q, {3}}, T{iq, {0, 1, 2}}});
  // The diagonal D generators need the sign of the i gamma2 gamma0 term
  // opposite between UL and DR for single-slot placement; the off-diagonal
  // pair works as commonly displayed.
  add("D_DR3", false, 2, 2, {T{-q, {1, 0}}, T{iq, {2, 3}}},
      {T{q, {3, 1}}, T{iq, {2, 0}}});
  add("D_UL3", false, 1, 1, {T{q, {1, 0}}, T{iq, {2, 3}}},
      {T{q, {3, 1}}, T{-iq, {2, 0}}});
  add("D_UR3", false, 1, 2, {T{q, {1}}, T{iq, {0, 2, 3}}},
      {T{q, {0, 3, 1}}, T{-iq, {2}}});
  add("D_DL3", false, 2, 1, {T{-q, {1}}, T{iq, {0, 2, 3}}},
      {T{q, {0, 3, 1}}, T{iq, {2}}});
  return out;
}

inline BiSpinor evaluate_in_rep(const GammaPolynomial& poly, const GammaSet& gs,
                                const AlgebraPtr& alg) {
  BiSpinor acc(alg);
  for (const auto& term : poly.terms) {
    BiSpinor prod = BiSpinor::identity(alg);
    for (int mu : term.gammas)
      prod = prod * gs[mu];
    acc = acc + term.coeff * prod;
  }
  return acc;
}

struct NamedGenerator {
  IdealGeneratorSpec spec;
  BiSpinor matrix;
};

inline std::vector<NamedGenerator> sixteen_generators(const IdealGenerators& gen) {
  const GammaSet gs = make_gamma_set(gen);
  std::vector<NamedGenerator> out;
  for (auto& spec : sixteen_generator_specs()) {
    BiSpinor m = evaluate_in_rep(spec.poly, gs, gen.algebra());
    out.push_back(NamedGenerator{std::move(spec), std::move(m)});
  }
  return out;
}

// Rank of the 32 real coefficient vectors {G, iG} over the 16 generators,
// flattened to R^64; Gaussian elimination with a pivot threshold.
inline int generator_span_rank(const IdealGenerators& gen, double pivot_tol = 1e-10) {
  const auto gens = sixteen_generators(gen);
  const std::size_t cols = 4 * gen.algebra()->size();
  std::vector<std::vector<double>> rows;
  for (const auto& g : gens) {
    const BiSpinor& m = g.matrix;
    const BiSpinor im = ScalarPseudo::i() * m;
    for (const BiSpinor* b : {&m, &im}) {
      std::vector<double> row;
      row.reserve(cols);
      for (const Multivector* e : {&b->m11, &b->m12, &b->m21, &b->m22})
        for (unsigned k = 0; k < e->size(); ++k)
          row.push_back((*e)[k]);
      rows.push_back(std::move(row));
    }
  }
  int rank = 0;
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows.size() && col < cols; ++col) {
    std::size_t pivot = r;
    for (std::size_t k = r + 1; k < rows.size(); ++k)
      if (std::abs(rows[k][col]) > std::abs(rows[pivot][col]))
        pivot = k;
    if (std::abs(rows[pivot][col]) <= pivot_tol)
      continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      const double f = rows[k][col] / rows[r][col];
      if (f != 0.0)
        for (std::size_t c = col; c < cols; ++c)
          rows[k][c] -= f * rows[r][c];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// gamma_mu -> sum_nu L[mu][nu] e_nu.
struct SubstitutionMap {
  std::string name;
  std::array<std::array<ScalarPseudo, 4>, 4> L{};

  static SubstitutionMap lower() {
    SubstitutionMap m;
    m.name = "lower";
    for (int mu = 0; mu < 4; ++mu)
      m.L[static_cast<std::size_t>(mu)][static_cast<std::size_t>(mu)] = ScalarPseudo(1.0);
    return m;
  }

  // gamma_mu -> e^mu with the reciprocal frame e^0 = e0, e^j = -e_j.
  static SubstitutionMap upper() {
    SubstitutionMap m;
    m.name = "upper";
    m.L[0][0] = ScalarPseudo(1.0);
    for (std::size_t j = 1; j < 4; ++j)
      m.L[j][j] = ScalarPseudo(-1.0);
    return m;
  }

  // gamma_{0,3} -> e^{0,3}, gamma_{1,2} -> e^{2,1}.
  static SubstitutionMap swapped12() {
    SubstitutionMap m;
    m.name = "swapped12";
    m.L[0][0] = ScalarPseudo(1.0);
    m.L[1][2] = ScalarPseudo(-1.0);
    m.L[2][1] = ScalarPseudo(-1.0);
    m.L[3][3] = ScalarPseudo(-1.0);
    return m;
  }

  Multivector image(const AlgebraPtr& alg, int mu) const {
    Multivector v(alg);
    for (int nu = 0; nu < 4; ++nu) {
      const ScalarPseudo& c = L[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
      if (c.s != 0.0 || c.p != 0.0)
        v += c * Multivector::basis_vector(alg, nu);
    }
    return v;
  }
};

inline Multivector substitute(const GammaPolynomial& poly, const SubstitutionMap& map,
                              const AlgebraPtr& alg) {
  std::array<Multivector, 4> img{map.image(alg, 0), map.image(alg, 1), map.image(alg, 2),
                                 map.image(alg, 3)};
  Multivector acc(alg);
  for (const auto& term : poly.terms) {
    Multivector prod = Multivector::scalar(alg, 1.0);
    for (int mu : term.gammas)
      prod = prod * img[static_cast<std::size_t>(mu)];
    acc += term.coeff * prod;
  }
  return acc;
}

inline Multivector substitute(const std::string& generator_name, const SubstitutionMap& map,
                              const AlgebraPtr& alg) {
  for (const auto& spec : sixteen_generator_specs())
    if (spec.name == generator_name)
      return substitute(spec.poly, map, alg);
  throw lookup_error("unknown generator name: " + generator_name);
}

// Residual of the Clifford relations after substitution: max over mu <= nu of
// |m_mu m_nu + m_nu m_mu - 2 eta_mu_nu|. Zero iff L is eta-orthogonal.
inline double substitution_clifford_residual(const SubstitutionMap& map,
                                             const AlgebraPtr& alg) {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const Multivector mmu = map.image(alg, mu);
    for (int nu = mu; nu < 4; ++nu) {
      const Multivector mnu = map.image(alg, nu);
      const double eta = mu == nu ? (mu == 0 ? 1.0 : -1.0) : 0.0;
      const Multivector lhs = mmu * mnu + mnu * mmu;
      worst = std::max(worst, max_abs_diff(lhs, Multivector::scalar(alg, 2.0 * eta)));
    }
  }
  return worst;
}

// ---- lattice Dirac operator ----

struct SpinorColumn {
  Multivector up, down;

  explicit SpinorColumn(const AlgebraPtr& alg) : up(alg), down(alg) {}
  SpinorColumn(Multivector u, Multivector d) : up(std::move(u)), down(std::move(d)) {}
};

class LatticeField {
public:
  LatticeField(AlgebraPtr alg, std::array<int, 4> extents,
               std::array<double, 4> spacing = {1.0, 1.0, 1.0, 1.0})
      : alg_(std::move(alg)), n_(extents), h_(spacing) {
    for (int mu = 0; mu < 4; ++mu) {
      if (n_[static_cast<std::size_t>(mu)] < 4)
        throw lattice_error("lattice extents must be at least 4 per axis");
      if (h_[static_cast<std::size_t>(mu)] <= 0.0)
        throw lattice_error("lattice spacing must be positive");
    }
    sites_.assign(static_cast<std::size_t>(volume()), SpinorColumn(alg_));
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const std::array<int, 4>& extents() const { return n_; }
  const std::array<double, 4>& spacing() const { return h_; }

  long volume() const {
    long v = 1;
    for (int mu = 0; mu < 4; ++mu)
      v *= n_[static_cast<std::size_t>(mu)];
    return v;
  }

  std::size_t index(std::array<int, 4> x) const {
    std::size_t idx = 0;
    for (int mu = 0; mu < 4; ++mu) {
      const int n = n_[static_cast<std::size_t>(mu)];
      int c = x[static_cast<std::size_t>(mu)] % n;
      if (c < 0)
        c += n;
      idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
    }
    return idx;
  }

  SpinorColumn& at(std::array<int, 4> x) { return sites_[index(x)]; }
  const SpinorColumn& at(std::array<int, 4> x) const { return sites_[index(x)]; }
  std::vector<SpinorColumn>& sites() { return sites_; }
  const std::vector<SpinorColumn>& sites() const { return sites_; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& s : sites_)
      m = std::max(m, std::max(s.up.max_abs(), s.down.max_abs()));
    return m;
  }

  template <typename Fn> void for_each_site(Fn&& fn) const {
    std::array<int, 4> x{};
    for (x[0] = 0; x[0] < n_[0]; ++x[0])
      for (x[1] = 0; x[1] < n_[1]; ++x[1])
        for (x[2] = 0; x[2] < n_[2]; ++x[2])
          for (x[3] = 0; x[3] < n_[3]; ++x[3])
            fn(x);
  }

private:
  AlgebraPtr alg_;
  std::array<int, 4> n_;
  std::array<double, 4> h_;
  std::vector<SpinorColumn> sites_;
};

namespace detail {

// Central difference along axis mu with periodic wraparound.
inline SpinorColumn central_diff(const LatticeField& f, std::array<int, 4> x, int mu) {
  std::array<int, 4> xp = x, xm = x;
  xp[static_cast<std::size_t>(mu)] += 1;
  xm[static_cast<std::size_t>(mu)] -= 1;
  const double inv2h = 1.0 / (2.0 * f.spacing()[static_cast<std::size_t>(mu)]);
  const SpinorColumn& p = f.at(xp);
  const SpinorColumn& m = f.at(xm);
  return SpinorColumn((p.up - m.up) * inv2h, (p.down - m.down) * inv2h);
}

} // namespace detail

// nabla_D = sum_mu gamma^mu d_mu with gamma^0 = gamma0, gamma^j = -gamma_j.
// Row structure: out_up = d0 v - sum_j K_j d_j v, out_down = d0 u + sum_j K_j d_j u
// for a column (u, v).
inline LatticeField dirac_operator(const IdealGenerators& g, const LatticeField& f) {
  LatticeField out(f.algebra(), f.extents(), f.spacing());
  f.for_each_site([&](const std::array<int, 4>& x) {
    SpinorColumn acc(f.algebra());
    for (int mu = 0; mu < 4; ++mu) {
      const SpinorColumn d = detail::central_diff(f, x, mu);
      if (mu == 0) {
        acc.up += d.down;
        acc.down += d.up;
      } else {
        acc.up -= g.K(mu) * d.down;
        acc.down += g.K(mu) * d.up;
      }
    }
    out.at(x) = std::move(acc);
  });
  return out;
}

// Same operator through the vector-derivative factorization: the matrix form
// offdiag(e0 nabla, nabla e0) with nabla built on the coordinate frame, i.e.
// out_up = sum_mu (e0 e_mu) d_mu v and out_down = sum_mu (e_mu e0) d_mu u.
inline LatticeField dirac_operator_matrix_form(const IdealGenerators& g,
                                               const LatticeField& f) {
  const AlgebraPtr& alg = f.algebra();
  std::array<Multivector, 4> e{Multivector::basis_vector(alg, 0),
                               Multivector::basis_vector(alg, 1),
                               Multivector::basis_vector(alg, 2),
                               Multivector::basis_vector(alg, 3)};
  const Multivector& e0 = e[0];
  LatticeField out(alg, f.extents(), f.spacing());
  f.for_each_site([&](const std::array<int, 4>& x) {
    Multivector up_acc(alg), down_acc(alg);
    for (int mu = 0; mu < 4; ++mu) {
      const SpinorColumn d = detail::central_diff(f, x, mu);
      up_acc += e0 * (e[static_cast<std::size_t>(mu)] * d.down);
      down_acc += e[static_cast<std::size_t>(mu)] * (e0 * d.up);
    }
    out.at(x) = SpinorColumn(std::move(up_acc), std::move(down_acc));
  });
  return out;
}

// nabla_D Psi + m Psi S0hat, with S0hat a unit spacelike bivector applied by
// right multiplication columnwise. The ideal-compatible default is
// S0hat = i K3 (so that K3 = -i S0hat).
inline Multivector default_spin_plane(const IdealGenerators& g) { return g.J(3); }

inline LatticeField dirac_residual(const IdealGenerators& g, const LatticeField& f, double m,
                                   const Multivector& s0hat) {
  for (unsigned k = 0; k < s0hat.size(); ++k)
    if (s0hat[k] != 0.0 && std::popcount(k) != 2)
      throw invalid_spin_plane_error("spin plane must be a pure bivector");
  const Multivector sq = s0hat * s0hat;
  if (max_abs_diff(sq, Multivector::scalar(f.algebra(), -1.0)) > 1e-10)
    throw invalid_spin_plane_error("spin plane must square to -1");

  LatticeField out = dirac_operator(g, f);
  if (m != 0.0) {
    long i = 0;
    auto& sites = out.sites();
    for (const auto& s : f.sites()) {
      sites[static_cast<std::size_t>(i)].up += (s.up * s0hat) * m;
      sites[static_cast<std::size_t>(i)].down += (s.down * s0hat) * m;
      ++i;
    }
  }
  return out;
}

// Standard Dirac parity: left multiplication by gamma0 swaps the rows.
inline BiSpinor dirac_parity(const IdealGenerators& g, const BiSpinor& psi) {
  return gamma(g, 0) * psi;
}

} // namespace sta
