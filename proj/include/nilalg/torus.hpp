#pragma once

// Complex 2-tori C^2 / (tau, Id) Z^4: period matrix and complex structure
// conversions, the Neron-Severi lattice and the algebraic dimension.
//
// An integral alternating form is encoded by (a, b, c, d, e, f) as
//   E = [[ 0,  a,  b,  c],
//        [-a,  0,  d,  f],
//        [-b, -d,  0,  e],
//        [-c, -f, -e,  0]]
// and lies in NS exactly when a + d t11 - b t12 + f t21 - c t22 + e det(t) = 0,
// equivalently when J^T E is symmetric.

#include <optional>

#include "nilalg/complexstruct.hpp"

namespace nilalg {

/// 2x2 period matrix with det(Im tau) != 0.
class PeriodTau {
 public:
  PeriodTau() : tau_(Mat<CScalar>::identity(2)) { tau_ = CScalar::i() * tau_; }
  /// Throws Error(Shape) unless 2x2, Error(Precondition) if Im tau is singular.
  explicit PeriodTau(Mat<CScalar> tau);

  const Mat<CScalar>& matrix() const { return tau_; }
  const CScalar& operator()(std::size_t i, std::size_t j) const { return tau_(i, j); }
  Mat<RealAlg> real_part() const;
  Mat<RealAlg> imag_part() const;

  friend bool operator==(const PeriodTau&, const PeriodTau&) = default;

 private:
  Mat<CScalar> tau_;
};

/// 4x4 complex structure with blocks (A B; C D) and B nondegenerate.
class TorusJ {
 public:
  TorusJ() : TorusJ(standard()) {}
  /// Throws Error(Validation) unless J^2 = -Id, Error(Precondition) if B is
  /// singular.
  explicit TorusJ(Mat<RealAlg> j);

  static TorusJ standard();

  const Mat<RealAlg>& matrix() const { return j_; }
  ComplexStructure structure() const { return ComplexStructure(j_); }
  Mat<RealAlg> block(std::size_t r, std::size_t c) const { return j_.block(2 * r, 2 * c, 2, 2); }

  friend bool operator==(const TorusJ&, const TorusJ&) = default;

 private:
  Mat<RealAlg> j_;
};

/// tau = B^{-1} A + i B^{-1}.
PeriodTau tau_from_J(const TorusJ& j);

/// J = (y^{-1} x, y^{-1}; -y - x y^{-1} x, -x y^{-1}) for tau = x + iy.
TorusJ J_from_tau(const PeriodTau& tau);

/// Structure whose (1,0)-forms are w_k - i sum_l X_kl conj(w_l), where
/// w_k = e^k - i e^{k+2} are the (1,0)-forms of the standard structure.
/// For nilpotent X this gives tau = i Id + 2X.
TorusJ J_from_X(const Mat<CScalar>& x);

/// Same structure in closed form: M^{-1} K M with K the standard structure
/// and M = (Id + Im X, Re X; Re X, Id - Im X).
Mat<RealAlg> J_from_X_conjugation(const Mat<CScalar>& x);

/// Coefficients of (a, b, c, d, e, f) in the NS condition.
Vec<CScalar> ns_coefficients(const PeriodTau& tau);

/// Antisymmetric 4x4 matrix of the coordinates (a, ..., f).
Mat<Rat> antisymmetric_from_coords(const Vec<Int>& v);

struct NSLattice {
  IntLattice lattice;
  /// Rational constraint rows on (a, ..., f).
  Mat<Rat> constraints;
};

/// Expands the complex NS condition over the real field basis (real and
/// imaginary parts separately) and returns the integer kernel.
NSLattice ns_lattice(const PeriodTau& tau);

struct AlgebraicDimension {
  /// Largest a found by enumeration; this is the reported value.
  std::size_t value = 0;
  /// Exact a(J) from the quadratic form on NS (x) Q.
  std::size_t upper_bound = 0;
  bool exact = false;
  std::size_t radius = 0;
  NSLattice ns;
  /// Inertia of E -> Pf(E) on NS (x) Q, normalized positive on Kaehler forms.
  Inertia pfaffian_inertia;
  /// Lexicographically least lattice coordinates achieving `value`.
  std::optional<Vec<Int>> certificate_coords;
  std::optional<Mat<Rat>> certificate;
};

/// a(J) = max rank(J^T E) / 2 over E in NS with J^T E >= 0.  Enumerates
/// primitive lattice coordinates in [-radius, radius]^rank in lex order.
AlgebraicDimension algebraic_dimension(const PeriodTau& tau, std::size_t radius);

/// For upper triangular tau: whether t12 lies in the Q-span of
/// t11, t11 t22, 1, t22.
bool alpha_degeneracy(const PeriodTau& tau);

}  // namespace nilalg
