#pragma once

// Exact dense linear algebra over Rat, RealAlg and CScalar.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilalg/error.hpp"
#include "nilalg/scalar.hpp"

namespace nilalg {

template <class T>
using Vec = std::vector<T>;

inline int sign_of(const Rat& x) { return sgn(x); }
inline int sign_of(const RealAlg& x) { return x.sign(); }

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Mat from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(ErrorKind::Dimension, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Mat from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    std::vector<Vec<T>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v, v.empty() ? 0 : v.front().size());
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec<T> row(std::size_t i) const {
    return Vec<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vec<T> col(std::size_t j) const {
    Vec<T> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr,
            std::size_t nc) const {
    Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T& x) { return nilalg::is_zero(x); });
  }

  Vec<T> apply(std::span<const T> v) const {
    if (v.size() != cols_)
      throw Error(ErrorKind::Dimension, "matrix-vector size mismatch");
    Vec<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!nilalg::is_zero(v[j]) && !nilalg::is_zero((*this)(i, j)))
          out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::Dimension, "matrix product size mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (nilalg::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!nilalg::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Mat operator+(Mat a, const Mat& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  Mat operator-() const {
    Mat m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }
  friend Mat operator*(const T& s, Mat a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Mat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw Error(ErrorKind::Dimension, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Elementwise conversion, e.g. Rat -> RealAlg -> CScalar.
template <class U, class T>
Mat<U> convert(const Mat<T>& m) {
  Mat<U> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = U(m(i, j));
  return out;
}

template <class U, class T>
Vec<U> convert(const Vec<T>& v) {
  Vec<U> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(U(x));
  return out;
}

template <class T>
Vec<T> unit_vector(std::size_t n, std::size_t i) {
  Vec<T> v(n, T(0));
  v[i] = T(1);
  return v;
}

template <class T>
bool is_zero_vector(std::span<const T> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const T& x) { return nilalg::is_zero(x); });
}

// ----------------------------------------------------------------- echelon

template <class T>
struct Echelon {
  Mat<T> form;                      // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form with exact pivots.
template <class T>
Echelon<T> rref(Mat<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Mat<T>& m) {
  return rref(m).rank();
}

/// Determinant by elimination; square input.
template <class T>
T determinant(Mat<T> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Shape, "determinant of non-square matrix");
  T det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Inverse of a square matrix; Error(Precondition) when singular.
template <class T>
Mat<T> invert(const Mat<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::Shape, "inverse of non-square matrix");
  Mat<T> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Mat<T>::identity(n));
  auto e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::Precondition, "matrix is singular");
  return e.form.block(0, n, n, n);
}

// ---------------------------------------------------------------- subspace

/// Subspace of T^n stored by its canonical reduced-echelon basis, so two
/// subspaces are equal exactly when their bases are.
template <class T>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec<T>>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    auto e = rref(Mat<T>::from_rows(vectors, ambient));
    s.basis_ = e.form.block(0, 0, e.rank(), ambient);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace full(std::size_t n) { return span(n, identity_rows(n)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat<T>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<T> vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec<T>> vectors() const {
    std::vector<Vec<T>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
    return out;
  }
  bool is_zero() const { return dim() == 0; }

  /// Remainder of v after reduction against the echelon basis.
  Vec<T> reduce(Vec<T> v) const {
    if (v.size() != ambient_)
      throw Error(ErrorKind::Dimension, "vector length does not match ambient dimension");
    for (std::size_t k = 0; k < dim(); ++k) {
      const std::size_t p = pivots_[k];
      if (nilalg::is_zero(v[p])) continue;
      const T f = v[p];
      for (std::size_t j = p; j < ambient_; ++j)
        if (!nilalg::is_zero(basis_(k, j))) v[j] -= f * basis_(k, j);
    }
    return v;
  }
  bool contains(const Vec<T>& v) const {
    const auto r = reduce(v);
    return is_zero_vector<T>(r);
  }
  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  /// Image under a linear map given as a square matrix acting on columns.
  Subspace image_under(const Mat<T>& m) const {
    std::vector<Vec<T>> out;
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto v = vector(i);
      out.push_back(m.apply(v));
    }
    return span(m.rows(), out);
  }

  void check_ambient(const Subspace& o) const {
    if (o.ambient_ != ambient_)
      throw Error(ErrorKind::Dimension, "subspaces live in different ambient spaces");
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  static std::vector<Vec<T>> identity_rows(std::size_t n) {
    std::vector<Vec<T>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vector<T>(n, i));
    return rows;
  }

  std::size_t ambient_;
  Mat<T> basis_;
  std::vector<std::size_t> pivots_;
};

/// { v : m v = 0 }.
template <class T>
Subspace<T> kernel(const Mat<T>& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivots[k]] = -e.form(k, f);
    basis.push_back(std::move(v));
  }
  return Subspace<T>::span(m.cols(), basis);
}

/// Column space of m.
template <class T>
Subspace<T> image(const Mat<T>& m) {
  std::vector<Vec<T>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace<T>::span(m.rows(), cols);
}

/// One solution of m x = b, if any.
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& m, const Vec<T>& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::Dimension, "right-hand side size mismatch");
  Mat<T> aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  const auto e = rref(std::move(aug));
  if (e.rank() > 0 && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<T> x(m.cols(), T(0));
  for (std::size_t k = 0; k < e.rank(); ++k) x[e.pivots[k]] = e.form(k, m.cols());
  return x;
}

template <class T>
Subspace<T> subspace_sum(const Subspace<T>& a, const Subspace<T>& b) {
  a.check_ambient(b);
  auto vs = a.vectors();
  for (auto& v : b.vectors()) vs.push_back(std::move(v));
  return Subspace<T>::span(a.ambient_dim(), vs);
}

template <class T>
Subspace<T> subspace_intersect(const Subspace<T>& a, const Subspace<T>& b) {
  a.check_ambient(b);
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace<T>(n);
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0.
  Mat<T> sys(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) sys(r, i) = a.basis()(i, r);
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) sys(r, a.dim() + j) = -b.basis()(j, r);
  const auto ker = kernel(sys);
  std::vector<Vec<T>> out;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vec<T> v(n, T(0));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const T& s = ker.basis()(k, i);
      if (is_zero(s)) continue;
      for (std::size_t r = 0; r < n; ++r) v[r] += s * a.basis()(i, r);
    }
    out.push_back(std::move(v));
  }
  return Subspace<T>::span(n, out);
}

template <class U, class T>
Subspace<U> convert(const Subspace<T>& s) {
  std::vector<Vec<U>> vs;
  for (const auto& v : s.vectors()) vs.push_back(convert<U>(v));
  return Subspace<U>::span(s.ambient_dim(), vs);
}

// -------------------------------------------------------------- signature

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <class T>
bool is_symmetric(const Mat<T>& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

/// Inertia of a symmetric matrix by congruence diagonalization.  A zero
/// diagonal with a nonzero off-diagonal entry b is split off as the
/// hyperbolic block [[0, b], [b, 0]], contributing one positive and one
/// negative direction.
template <class T>
Inertia symmetric_signature(Mat<T> m) {
  if (!is_symmetric(m)) throw Error(ErrorKind::Shape, "signature of a non-symmetric matrix");
  const std::size_t n = m.rows();
  Inertia out;
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  auto eliminate_row = [&](std::size_t r, std::size_t piv, const T& f) {
    // row_r -= f * row_piv, then col_r -= f * col_piv.
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(m(piv, j))) m(r, j) -= f * m(piv, j);
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(m(i, piv))) m(i, r) -= f * m(i, piv);
  };
  while (remaining > 0) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n && k == n; ++i)
      if (!done[i] && !is_zero(m(i, i))) k = i;
    if (k != n) {
      const T inv = inverse(m(k, k));
      for (std::size_t r = 0; r < n; ++r) {
        if (done[r] || r == k || is_zero(m(r, k))) continue;
        eliminate_row(r, k, m(r, k) * inv);
      }
      (sign_of(m(k, k)) > 0 ? out.plus : out.minus) += 1;
      done[k] = true;
      --remaining;
      continue;
    }
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n && bi == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[j] && !is_zero(m(i, j))) {
          bi = i;
          bj = j;
          break;
        }
    }
    if (bi == n) {
      out.zero += remaining;
      break;
    }
    // Block [[0, b], [b, 0]] with inverse [[0, 1/b], [1/b, 0]].
    const T binv = inverse(m(bi, bj));
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || r == bi || r == bj) continue;
      const T fi = m(r, bj) * binv;
      const T fj = m(r, bi) * binv;
      if (!is_zero(fi)) eliminate_row(r, bi, fi);
      if (!is_zero(fj)) eliminate_row(r, bj, fj);
    }
    out.plus += 1;
    out.minus += 1;
    done[bi] = done[bj] = true;
    remaining -= 2;
  }
  return out;
}

// ------------------------------------------------------------ int lattices

inline bool is_zero(const Int& x) { return sgn(x) == 0; }

/// Sublattice of Z^n by a basis in row Hermite normal form: rows in echelon
/// order, positive pivots, entries above each pivot reduced into [0, pivot).
struct IntLattice {
  std::size_t ambient = 0;
  std::vector<Vec<Int>> basis;
  std::size_t rank() const { return basis.size(); }
  friend bool operator==(const IntLattice&, const IntLattice&) = default;
};

/// Hermite normal form of the lattice generated by `rows` (length n each).
IntLattice hermite_normal_form(std::size_t n, std::vector<Vec<Int>> rows);

/// Z-basis of { v in Z^cols : m v = 0 }.
IntLattice integer_kernel(const Mat<Rat>& m);

}  // namespace nilalg
