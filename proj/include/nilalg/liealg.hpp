#pragma once

// Rational nilpotent Lie algebras, exterior forms on them and the
// Chevalley-Eilenberg complex.
//
// Sign convention: for a 1-form a, da(x, y) = -a([x, y]).  Forms are
// evaluated with the determinant convention, (e^i ^ e^j)(e_i, e_j) = 1, so
// the coefficient of e^i ^ e^j in de^k is -c^k_ij.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilalg/linalg.hpp"

namespace nilalg {

/// Largest dimension the exterior-algebra indexing supports.
inline constexpr std::size_t kMaxLieDim = 16;

/// Index sets i1 < ... < ik of {0..n-1} as bit masks, in lexicographic order
/// of the index tuples.
std::vector<std::uint32_t> k_subsets(std::size_t n, std::size_t k);

/// Position of every k-subset mask in k_subsets(n, k); other masks map to -1.
std::vector<int> subset_positions(std::size_t n, std::size_t k);

class NilpotentLieAlgebra {
 public:
  explicit NilpotentLieAlgebra(std::size_t n = 0);

  /// Sets [e_i, e_j] so that its e_k component is c (and [e_j, e_i] to -c).
  /// Indices are 0-based; i == j is rejected.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rat& c);

  /// From de^k = sum t_ij e^i ^ e^j (i < j, 0-based): c^k_ij = -t_ij.
  void set_dform_term(std::size_t k, std::size_t i, std::size_t j, const Rat& t);

  std::size_t dim() const { return n_; }

  /// c^k_ij, antisymmetric in (i, j).
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

  bool is_abelian() const;

  /// [e_i, e_j] as a coordinate vector.
  Vec<Rat> bracket_basis(std::size_t i, std::size_t j) const;

  template <class T>
  Vec<T> bracket(const Vec<T>& x, const Vec<T>& y) const {
    if (x.size() != n_ || y.size() != n_)
      throw Error(ErrorKind::Dimension, "bracket arguments must have length " + std::to_string(n_));
    Vec<T> out(n_, T(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (nilalg::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j || nilalg::is_zero(y[j])) continue;
        const T xy = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k) {
          const Rat& ck = c(i, j, k);
          if (sgn(ck) == 0) continue;
          out[k] += T(ck) * xy;
        }
      }
    }
    return out;
  }

  /// Matrix of ad(e_i): column j is [e_i, e_j].
  Mat<Rat> ad(std::size_t i) const;

  /// Nonzero brackets [e_i, e_j] (i < j) as (i, j, k, c).
  struct Entry {
    std::size_t i, j, k;
    Rat c;
  };
  std::vector<Entry> entries() const;

  friend bool operator==(const NilpotentLieAlgebra& a, const NilpotentLieAlgebra& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  std::size_t n_;
  std::vector<Rat> c_;
};

/// Alternating k-form with coefficients over e^{i1} ^ ... ^ e^{ik}, index
/// sets in the order of k_subsets.
template <class T>
class KForm {
 public:
  KForm() = default;
  KForm(std::size_t n, std::size_t k)
      : n_(n), k_(k), masks_(k_subsets(n, k)), coeffs_(masks_.size(), T(0)) {}
  KForm(std::size_t n, std::size_t k, Vec<T> coeffs) : KForm(n, k) {
    if (coeffs.size() != coeffs_.size())
      throw Error(ErrorKind::Dimension, "wrong number of form coefficients");
    coeffs_ = std::move(coeffs);
  }

  /// e^{i1} ^ ... ^ e^{ik} for distinct 0-based indices in any order.
  static KForm monomial(std::size_t n, std::vector<std::size_t> idx, const T& c = T(1)) {
    KForm f(n, idx.size());
    int s = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] == idx[b]) return f;
        if (idx[a] > idx[b]) s = -s;
      }
    std::uint32_t mask = 0;
    for (auto i : idx) mask |= std::uint32_t{1} << i;
    f.coeffs_[f.position(mask)] = s > 0 ? c : -c;
    return f;
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t degree() const { return k_; }
  const std::vector<std::uint32_t>& masks() const { return masks_; }
  const Vec<T>& coeffs() const { return coeffs_; }
  Vec<T>& coeffs() { return coeffs_; }

  const T& at(std::uint32_t mask) const { return coeffs_[position(mask)]; }
  T& at(std::uint32_t mask) { return coeffs_[position(mask)]; }

  bool is_zero() const { return is_zero_vector<T>(coeffs_); }

  KForm& operator+=(const KForm& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  KForm& operator-=(const KForm& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const T& s, KForm a) {
    for (auto& x : a.coeffs_) x = s * x;
    return a;
  }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
  }

  KForm wedge(const KForm& o) const {
    if (o.n_ != n_) throw Error(ErrorKind::Dimension, "wedge of forms on different spaces");
    KForm out(n_, k_ + o.k_);
    if (k_ + o.k_ > n_) return out;
    for (std::size_t a = 0; a < masks_.size(); ++a) {
      if (nilalg::is_zero(coeffs_[a])) continue;
      for (std::size_t b = 0; b < o.masks_.size(); ++b) {
        if ((masks_[a] & o.masks_[b]) != 0 || nilalg::is_zero(o.coeffs_[b])) continue;
        // Sign of merging the two increasing sequences: count pairs (p in
        // first, q in second) with p > q.
        int inversions = 0;
        for (std::uint32_t m = o.masks_[b]; m != 0; m &= m - 1) {
          const std::uint32_t q = m & (~m + 1);
          inversions += std::popcount(masks_[a] & ~((q << 1) - 1));
        }
        const T prod = coeffs_[a] * o.coeffs_[b];
        out.at(masks_[a] | o.masks_[b]) += inversions % 2 ? -prod : prod;
      }
    }
    return out;
  }

  /// Value on the vectors v_1..v_k (determinant convention).
  T evaluate(const std::vector<Vec<T>>& vs) const {
    if (vs.size() != k_) throw Error(ErrorKind::Dimension, "form needs " + std::to_string(k_) + " arguments");
    T total(0);
    for (std::size_t a = 0; a < masks_.size(); ++a) {
      if (nilalg::is_zero(coeffs_[a])) continue;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n_; ++i)
        if (masks_[a] >> i & 1u) idx.push_back(i);
      Mat<T> minor(k_, k_);
      for (std::size_t r = 0; r < k_; ++r)
        for (std::size_t s = 0; s < k_; ++s) minor(r, s) = vs[s][idx[r]];
      total += coeffs_[a] * determinant(minor);
    }
    return total;
  }

  /// Interior product with v: (i_v a)(x_2..x_k) = a(v, x_2..x_k).
  KForm contract(const Vec<T>& v) const {
    if (k_ == 0) throw Error(ErrorKind::Precondition, "contraction of a 0-form");
    KForm out(n_, k_ - 1);
    for (std::size_t a = 0; a < masks_.size(); ++a) {
      if (nilalg::is_zero(coeffs_[a])) continue;
      int pos = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (!(masks_[a] >> i & 1u)) continue;
        if (!nilalg::is_zero(v[i])) {
          const T val = coeffs_[a] * v[i];
          out.at(masks_[a] & ~(std::uint32_t{1} << i)) += pos % 2 ? -val : val;
        }
        ++pos;
      }
    }
    return out;
  }

 private:
  std::size_t position(std::uint32_t mask) const {
    const auto it = std::lower_bound(masks_.begin(), masks_.end(), mask, [](std::uint32_t x, std::uint32_t y) {
      return lex_less(x, y);
    });
    if (it == masks_.end() || *it != mask) throw Error(ErrorKind::Dimension, "index set of wrong degree");
    return static_cast<std::size_t>(it - masks_.begin());
  }
  // Lexicographic order of the increasing index tuples of two equal-size masks.
  static bool lex_less(std::uint32_t x, std::uint32_t y) {
    while (x != 0 && y != 0) {
      const std::uint32_t lx = x & (~x + 1), ly = y & (~y + 1);
      if (lx != ly) return lx < ly;
      x ^= lx;
      y ^= ly;
    }
    return false;
  }
  void check_same(const KForm& o) const {
    if (o.n_ != n_ || o.k_ != k_) throw Error(ErrorKind::Dimension, "forms of different shape");
  }

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::uint32_t> masks_{0};
  Vec<T> coeffs_{T(0)};
};

/// Matrix of d : Lambda^k -> Lambda^{k+1}; rows and columns follow k_subsets.
Mat<Rat> differential_matrix(const NilpotentLieAlgebra& g, std::size_t k);

template <class T>
KForm<T> chevalley_d(const NilpotentLieAlgebra& g, const KForm<T>& a) {
  if (a.ambient_dim() != g.dim()) throw Error(ErrorKind::Dimension, "form and algebra dimensions differ");
  const std::size_t k = a.degree();
  KForm<T> out(g.dim(), k + 1);
  if (k >= g.dim()) return out;
  const Mat<Rat> d = differential_matrix(g, k);
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (sgn(d(r, c)) != 0 && !nilalg::is_zero(a.coeffs()[c])) out.coeffs()[r] += T(d(r, c)) * a.coeffs()[c];
  return out;
}

/// g^0 = g, g^{i+1} = [g, g^i].  Ends with the zero subspace when g is
/// nilpotent, otherwise with the nonzero term where the series stabilizes.
std::vector<Subspace<Rat>> lower_central_series(const NilpotentLieAlgebra& g);

/// g^1 = [g, g].
Subspace<Rat> derived_algebra(const NilpotentLieAlgebra& g);

struct ValidationReport {
  bool ok = true;
  /// First basis triple (i < j < k, 0-based) violating Jacobi.
  std::optional<std::array<std::size_t, 3>> jacobi_failure;
  bool nilpotent = true;
  /// Least s with g^s = 0 (when nilpotent).
  std::size_t step = 0;
  /// Nonzero stabilized term (when not nilpotent).
  std::optional<Subspace<Rat>> stabilized;
};

ValidationReport validate(const NilpotentLieAlgebra& g);

/// Betti numbers b_0..b_maxDegree (clamped to the dimension).
std::vector<std::size_t> cohomology_dims(const NilpotentLieAlgebra& g, std::size_t max_degree);

/// Whether subspace s is closed under the bracket.
bool is_subalgebra(const NilpotentLieAlgebra& g, const Subspace<RealAlg>& s);

/// Whether [g, s] is contained in s.
bool is_ideal(const NilpotentLieAlgebra& g, const Subspace<RealAlg>& s);

}  // namespace nilalg
