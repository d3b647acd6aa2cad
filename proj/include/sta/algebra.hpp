#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Real Clifford algebra kernel over small signatures (p + q <= 8).
// Basis blades are indexed by generator subsets encoded as bitmasks; bit k
// corresponds to the k-th generator in label order. Within a blade the
// generators are kept in ascending index order, and the product sign of two
// blades is the parity of the transpositions needed to merge them plus the
// metric factors of contracted generators.

namespace sta {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class algebra_mismatch_error : public error {
public:
  using error::error;
};

class grade_error : public error {
public:
  using error::error;
};

class not_even_error : public error {
public:
  using error::error;
};

class ideal_membership_error : public error {
public:
  using error::error;
};

class unsupported_algebra_error : public error {
public:
  using error::error;
};

class invalid_spin_plane_error : public error {
public:
  using error::error;
};

class lattice_error : public error {
public:
  using error::error;
};

class lookup_error : public error {
public:
  using error::error;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
  // p generators squaring to +1 first, then q squaring to -1.
  static AlgebraPtr make(int p, int q, std::vector<std::string> labels = {}) {
    if (p < 0 || q < 0 || p + q < 1 || p + q > 8)
      throw unsupported_algebra_error("algebra signature must satisfy 1 <= p+q <= 8");
    if (labels.empty()) {
      labels.reserve(static_cast<std::size_t>(p + q));
      for (int g = 0; g < p + q; ++g)
        labels.push_back("g" + std::to_string(g));
    }
    if (static_cast<int>(labels.size()) != p + q)
      throw unsupported_algebra_error("label count does not match p+q");
    return AlgebraPtr(new Algebra(p, q, std::move(labels)));
  }

  // Euclidean 3-space, Cl(3,0): e1, e2, e3.
  static const AlgebraPtr& ga3() {
    static const AlgebraPtr a = make(3, 0, {"e1", "e2", "e3"});
    return a;
  }

  // Spacetime, Cl(1,3) with metric (+,-,-,-): e0, e1, e2, e3.
  static const AlgebraPtr& sta() {
    static const AlgebraPtr a = make(1, 3, {"e0", "e1", "e2", "e3"});
    return a;
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }
  std::size_t size() const { return size_; }
  const std::string& label(int g) const { return labels_.at(static_cast<std::size_t>(g)); }

  int metric(int g) const {
    if (g < 0 || g >= dim())
      throw unsupported_algebra_error("generator index out of range");
    return g < p_ ? +1 : -1;
  }

  int product_sign(unsigned a, unsigned b) const {
    return table_[static_cast<std::size_t>(a) * size_ + b];
  }

  static unsigned product_blade(unsigned a, unsigned b) { return a ^ b; }

  unsigned pseudoscalar_blade() const { return static_cast<unsigned>(size_ - 1); }

  std::string blade_name(unsigned mask) const {
    if (mask == 0)
      return "1";
    std::string out;
    for (int g = 0; g < dim(); ++g)
      if (mask & (1u << g))
        out += labels_[static_cast<std::size_t>(g)];
    return out;
  }

  bool same(const Algebra& o) const {
    return p_ == o.p_ && q_ == o.q_ && labels_ == o.labels_;
  }

  bool is_sta_signature() const { return p_ == 1 && q_ == 3; }

private:
  Algebra(int p, int q, std::vector<std::string> labels)
      : p_(p), q_(q), labels_(std::move(labels)), size_(std::size_t{1} << (p + q)) {
    table_.resize(size_ * size_);
    for (unsigned a = 0; a < size_; ++a)
      for (unsigned b = 0; b < size_; ++b)
        table_[static_cast<std::size_t>(a) * size_ + b] = static_cast<int8_t>(blade_sign(a, b));
  }

  int blade_sign(unsigned a, unsigned b) const {
    // Count transpositions needed to interleave two ascending blades.
    int swaps = 0;
    unsigned rest = a >> 1;
    while (rest != 0) {
      swaps += std::popcount(rest & b);
      rest >>= 1;
    }
    int sign = (swaps & 1) ? -1 : +1;
    unsigned common = a & b;
    while (common != 0) {
      int g = std::countr_zero(common);
      sign *= metric(g);
      common &= common - 1;
    }
    return sign;
  }

  int p_, q_;
  std::vector<std::string> labels_;
  std::size_t size_;
  std::vector<int8_t> table_;
};

class Multivector {
public:
  explicit Multivector(AlgebraPtr alg)
      : alg_(std::move(alg)), c_(alg_->size(), 0.0) {}

  static Multivector zero(const AlgebraPtr& alg) { return Multivector(alg); }

  static Multivector scalar(const AlgebraPtr& alg, double v) {
    Multivector m(alg);
    m.c_[0] = v;
    return m;
  }

  static Multivector blade(const AlgebraPtr& alg, unsigned mask, double coeff = 1.0) {
    Multivector m(alg);
    m.at(mask) = coeff;
    return m;
  }

  static Multivector basis_vector(const AlgebraPtr& alg, int g) {
    if (g < 0 || g >= alg->dim())
      throw unsupported_algebra_error("generator index out of range");
    return blade(alg, 1u << g);
  }

  static Multivector pseudoscalar(const AlgebraPtr& alg) {
    return blade(alg, alg->pseudoscalar_blade());
  }

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t size() const { return c_.size(); }
  double operator[](unsigned mask) const { return c_[mask]; }
  double& at(unsigned mask) { return c_.at(mask); }
  const std::vector<double>& coeffs() const { return c_; }

  double scalar_part() const { return c_[0]; }
  double pseudoscalar_part() const { return c_[alg_->pseudoscalar_blade()]; }

  double max_abs() const {
    double m = 0.0;
    for (double v : c_)
      m = std::max(m, std::abs(v));
    return m;
  }

  bool is_zero() const {
    for (double v : c_)
      if (v != 0.0)
        return false;
    return true;
  }

  // Bitmask of grades carrying a nonzero coefficient.
  unsigned grade_mask() const {
    unsigned gm = 0;
    for (unsigned k = 0; k < c_.size(); ++k)
      if (c_[k] != 0.0)
        gm |= 1u << std::popcount(k);
    return gm;
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k)
      c_[k] += o.c_[k];
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k)
      c_[k] -= o.c_[k];
    return *this;
  }

  Multivector& operator*=(double s) {
    for (double& v : c_)
      v *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }

  friend Multivector operator-(const Multivector& a) {
    Multivector r(a.alg_);
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      r.c_[k] = -a.c_[k];
    return r;
  }

  // Geometric product. Each output blade accumulates its contributions in
  // ascending right-factor order, so multiplying by a single blade is an
  // exact signed permutation of the coefficients.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    const Algebra& alg = *a.alg_;
    const unsigned n = static_cast<unsigned>(alg.size());
    Multivector r(a.alg_);
    for (unsigned k = 0; k < n; ++k) {
      double acc = 0.0;
      for (unsigned j = 0; j < n; ++j) {
        const double y = b.c_[j];
        if (y == 0.0)
          continue;
        const double x = a.c_[k ^ j];
        if (x == 0.0)
          continue;
        acc += alg.product_sign(k ^ j, j) * x * y;
      }
      r.c_[k] = acc;
    }
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.alg_->same(*b.alg_) && a.c_ == b.c_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  void check_same(const Multivector& o) const {
    if (alg_.get() != o.alg_.get() && !alg_->same(*o.alg_))
      throw algebra_mismatch_error("operands belong to different algebras");
  }

private:
  AlgebraPtr alg_;
  std::vector<double> c_;
};

inline double max_abs_diff(const Multivector& a, const Multivector& b) {
  a.check_same(b);
  double m = 0.0;
  for (unsigned k = 0; k < a.size(); ++k)
    m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

inline bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

// Grade-selected parts of the geometric product: the outer product keeps the
// grade r+s part (blades with no common generator), the inner product the
// |r-s| part.
namespace detail {

template <typename Keep>
Multivector filtered_product(const Multivector& a, const Multivector& b, Keep keep) {
  a.check_same(b);
  const Algebra& alg = *a.algebra();
  const unsigned n = static_cast<unsigned>(alg.size());
  Multivector r(a.algebra());
  for (unsigned k = 0; k < n; ++k) {
    double acc = 0.0;
    for (unsigned j = 0; j < n; ++j) {
      if (b[j] == 0.0)
        continue;
      const unsigned i = k ^ j;
      if (a[i] == 0.0 || !keep(i, j))
        continue;
      acc += alg.product_sign(i, j) * a[i] * b[j];
    }
    r.at(k) = acc;
  }
  return r;
}

} // namespace detail

inline Multivector outer_product(const Multivector& a, const Multivector& b) {
  return detail::filtered_product(a, b, [](unsigned i, unsigned j) { return (i & j) == 0; });
}

inline Multivector inner_product(const Multivector& a, const Multivector& b) {
  return detail::filtered_product(a, b, [](unsigned i, unsigned j) {
    return std::popcount(i ^ j) == std::abs(std::popcount(i) - std::popcount(j));
  });
}

inline Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > a.algebra()->dim())
    throw grade_error("grade index out of range");
  Multivector r(a.algebra());
  for (unsigned m = 0; m < a.size(); ++m)
    if (std::popcount(m) == k)
      r.at(m) = a[m];
  return r;
}

inline Multivector even_part(const Multivector& a) {
  Multivector r(a.algebra());
  for (unsigned m = 0; m < a.size(); ++m)
    if ((std::popcount(m) & 1) == 0)
      r.at(m) = a[m];
  return r;
}

inline Multivector odd_part(const Multivector& a) {
  Multivector r(a.algebra());
  for (unsigned m = 0; m < a.size(); ++m)
    if (std::popcount(m) & 1)
      r.at(m) = a[m];
  return r;
}

inline bool is_even(const Multivector& a, double tol = 0.0) {
  return odd_part(a).max_abs() <= tol;
}

// Reversion: grade-r blades pick up (-1)^(r(r-1)/2).
inline Multivector reverse(const Multivector& a) {
  Multivector r(a.algebra());
  for (unsigned m = 0; m < a.size(); ++m) {
    const int g = std::popcount(m);
    const double s = (g * (g - 1) / 2) % 2 ? -1.0 : 1.0;
    r.at(m) = s * a[m];
  }
  return r;
}

// Exponential of a pure bivector by power series; terms are added until the
// next term's max-abs coefficient drops below tol (hard cap 64 terms).
inline Multivector exp_bivector(const Multivector& b, double tol = 1e-15) {
  for (unsigned m = 0; m < b.size(); ++m)
    if (b[m] != 0.0 && std::popcount(m) != 2)
      throw grade_error("exp_bivector requires a pure grade-2 argument");
  Multivector acc = Multivector::scalar(b.algebra(), 1.0);
  Multivector term = acc;
  for (int n = 1; n <= 64; ++n) {
    term = term * b;
    term *= 1.0 / n;
    acc += term;
    if (term.max_abs() < tol)
      break;
  }
  return acc;
}

struct SandwichResult {
  Multivector value;
  bool unit_rotor;
  double unit_error;
};

// M' = R M ~R. Non-unit R is flagged but still evaluated.
inline SandwichResult rotor_sandwich(const Multivector& r, const Multivector& m,
                                     double unit_tol = 1e-10) {
  Multivector rr = r * reverse(r) - Multivector::scalar(r.algebra(), 1.0);
  const double err = rr.max_abs();
  return SandwichResult{(r * m) * reverse(r), err <= unit_tol, err};
}

// Frame parity M' = e0 M e0 (spacetime signature only).
inline Multivector parity(const Multivector& m) {
  if (!m.algebra()->is_sta_signature())
    throw unsupported_algebra_error("parity is defined for the (1,3) signature only");
  const Multivector e0 = Multivector::basis_vector(m.algebra(), 0);
  return (e0 * m) * e0;
}

inline double minkowski_square(const Multivector& v) {
  for (unsigned m = 0; m < v.size(); ++m)
    if (v[m] != 0.0 && std::popcount(m) != 1)
      throw grade_error("minkowski_square requires a grade-1 argument");
  return (v * v).scalar_part();
}

} // namespace sta
