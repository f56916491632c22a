#pragma once

// Real alternating 2-forms on (g, J): type (1,1), semipositivity,
// null-spaces, holomorphic subalgebras and the pullback witness forms.

#include <optional>
#include <string>
#include <utility>

#include "nilalg/complexstruct.hpp"

namespace nilalg {

/// Alternating form stored as the matrix W_ij = eta(e_i, e_j).
class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(std::size_t n) : w_(n, n) {}

  /// Throws Error(Shape) unless w is square and antisymmetric.
  static TwoForm from_matrix(Mat<RealAlg> w);
  static TwoForm from_kform(const KForm<RealAlg>& f);

  /// Sets eta(e_i, e_j) = c and eta(e_j, e_i) = -c.
  void set(std::size_t i, std::size_t j, const RealAlg& c);

  std::size_t dim() const { return w_.rows(); }
  const Mat<RealAlg>& matrix() const { return w_; }
  KForm<RealAlg> to_kform() const;
  bool is_zero() const { return w_.is_zero(); }

  RealAlg operator()(const Vec<RealAlg>& x, const Vec<RealAlg>& y) const;

  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  Mat<RealAlg> w_;
};

/// eta(Jx, Jy) = eta(x, y).
bool is_one_one(const TwoForm& eta, const ComplexStructure& j);

bool is_closed(const NilpotentLieAlgebra& g, const TwoForm& eta);

/// b(x, y) = eta(x, Jy) as a matrix; Error(Precondition) unless symmetric,
/// which is the case exactly when eta is (1,1).
Mat<RealAlg> hermitian_matrix(const TwoForm& eta, const ComplexStructure& j);

Inertia semipositivity(const TwoForm& eta, const ComplexStructure& j);

/// Radical of b; Error(Precondition) when eta is not semipositive.
Subspace<RealAlg> nullspace_hermitian(const TwoForm& eta, const ComplexStructure& j);

struct ContractionNullspace {
  Subspace<RealAlg> space;
  bool subalgebra = true;
};

/// { x : i_x eta = 0 } for a closed form of positive degree.
ContractionNullspace nullspace_contraction(const NilpotentLieAlgebra& g, const KForm<RealAlg>& eta);

/// [y, x] + [Jy, Jx] + J[Jy, x] - J[y, Jx] in a, for x in a, y in g; no
/// hypotheses checked.  Returns the first failing (x, y) basis indices.
std::optional<std::pair<std::size_t, std::size_t>> holom2_failure(const NilpotentLieAlgebra& g,
                                                                   const ComplexStructure& j,
                                                                   const Subspace<RealAlg>& a);

/// [g^{0,1}, a^{1,0}]^{1,0} inside a (x) C, checked with complex arithmetic.
bool holomorphic_condition_complex(const NilpotentLieAlgebra& g, const ComplexStructure& j,
                                   const Subspace<RealAlg>& a);

/// Error(Precondition) unless a is J-invariant and a subalgebra.
bool is_holomorphic_subalgebra(const NilpotentLieAlgebra& g, const ComplexStructure& j, const Subspace<RealAlg>& a);

struct Condad2Result {
  bool holds = true;
  /// Failing test vectors.
  std::optional<std::pair<Vec<RealAlg>, Vec<RealAlg>>> failure;
};

/// eta([y,x], J[y,x]) = -eta(ad_x^2 y, Jy) for x in a, y in g.  The identity
/// has degree two in each argument, so it is tested on basis vectors and
/// their pairwise sums.  Hypotheses: eta closed, (1,1), semipositive and
/// a = N(eta) a holomorphic subalgebra; a violated one raises
/// Error(Precondition) naming it.
Condad2Result condad2_check(const NilpotentLieAlgebra& g, const ComplexStructure& j, const TwoForm& eta,
                            const Subspace<RealAlg>& a);

struct NullspaceReport {
  Subspace<RealAlg> nullspace;
  Subspace<RealAlg> h;
  bool contains = false;
  bool equal = false;
};

/// Checks N(eta) contains g^1 + J g^1.  Hypotheses as for condad2_check.
NullspaceReport verify_nullspace_contains_h(const NilpotentLieAlgebra& g, const ComplexStructure& j, const TwoForm& eta);

/// Quotient g -> g/h in coordinates given by the non-pivot columns of the
/// echelon basis of h.
struct Quotient {
  Subspace<RealAlg> h;
  Mat<RealAlg> projection;  // (n - dim h) x n
  Mat<RealAlg> section;     // n x (n - dim h)
  ComplexStructure induced;
};

/// Error(Precondition) unless h is J-invariant.
Quotient quotient_by(const Subspace<RealAlg>& h, const ComplexStructure& j);

/// The (1,1)-form eta(x, y) = G(Jx, y) of the J-invariant metric
/// G = g0 + J^T g0 J.  g0 must be symmetric positive definite.
TwoForm hermitian_form_from_metric(const ComplexStructure& j, const Mat<RealAlg>& g0);

/// pi^* h_pos for the quotient by g^1 + J g^1.  Error(Precondition) unless
/// h_pos is (1,1) and positive definite for the induced structure.
TwoForm pullback_from_abelianization(const NilpotentLieAlgebra& g, const ComplexStructure& j, const TwoForm& h_pos);

/// Pullback of the standard metric's form on the quotient.
TwoForm kahler_rank_witness(const NilpotentLieAlgebra& g, const ComplexStructure& j);

}  // namespace nilalg
