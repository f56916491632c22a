#pragma once

// Invariant complex structures J on a Lie algebra and the invariants built
// from them: g^1 + J g^1, holomorphic differentials, rational hulls and the
// Albanese quotient.
//
// J acts on column vectors: J e_j is column j.  A complex 1-form a is of
// type (1,0) when a(Jx) = i a(x).

#include <optional>
#include <utility>

#include "nilalg/liealg.hpp"

namespace nilalg {

class ComplexStructure {
 public:
  ComplexStructure() = default;
  /// Throws Error(Shape) unless square of even size, Error(Validation)
  /// unless J^2 = -Id exactly.
  explicit ComplexStructure(Mat<RealAlg> j);

  /// J from a basis of (1,0)-forms a_k = sum_i c_ki e^i (rows).  Solves
  /// a_k o J = i a_k for the real endomorphism.
  static ComplexStructure from_oneforms(const std::vector<Vec<CScalar>>& forms);

  /// Standard structure J e_{2k} = e_{2k+1} (0-based), i.e. the (1,0)-forms
  /// e^{2k} + i e^{2k+1}.
  static ComplexStructure standard(std::size_t n);

  std::size_t dim() const { return j_.rows(); }
  const Mat<RealAlg>& matrix() const { return j_; }
  Vec<RealAlg> apply(const Vec<RealAlg>& v) const { return j_.apply(v); }

  /// Basis of g^{1,0}: vectors x - iJx, the +i-eigenspace of J on g (x) C.
  Subspace<CScalar> holomorphic_vectors() const;

  /// Basis of the (1,0)-forms a - i a o J as coefficient rows.
  Subspace<CScalar> holomorphic_forms() const;

  friend bool operator==(const ComplexStructure&, const ComplexStructure&) = default;

 private:
  Mat<RealAlg> j_;
};

struct IntegrabilityResult {
  bool integrable = true;
  /// First basis pair (i < j) with N(e_i, e_j) != 0, and that value.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  Vec<RealAlg> nijenhuis;
};

/// N(x,y) = [Jx,Jy] - [x,y] - J[Jx,y] - J[x,Jy] on basis pairs.
IntegrabilityResult is_integrable(const NilpotentLieAlgebra& g, const ComplexStructure& j);

/// h = g^1 + J g^1.
Subspace<RealAlg> commutator_ideal_J(const NilpotentLieAlgebra& g, const ComplexStructure& j);

/// dim_C of g / (g^1 + J g^1).
std::size_t holomorphic_differentials_dim(const NilpotentLieAlgebra& g, const ComplexStructure& j);

/// Same number counted as closed (1,0)-forms, computed over C.
std::size_t closed_holomorphic_forms_dim(const NilpotentLieAlgebra& g, const ComplexStructure& j);

/// Smallest subspace defined over Q (in the standard basis) containing s.
Subspace<Rat> rational_hull(const Subspace<RealAlg>& s);

/// Smallest J-invariant rational subspace containing h.
Subspace<Rat> h1_subspace(const NilpotentLieAlgebra& g, const ComplexStructure& j);

/// Smallest J-invariant rational subspace containing s.
Subspace<Rat> invariant_rational_closure(const Subspace<RealAlg>& s, const ComplexStructure& j);

bool is_rational_J(const ComplexStructure& j);

bool is_J_invariant(const Subspace<RealAlg>& s, const ComplexStructure& j);

struct InvariantReport {
  std::size_t h1_dim = 0;
  std::size_t alg_dim_upper_bound = 0;
  std::size_t kahler_rank = 0;
  std::size_t albanese_dim = 0;
  Subspace<RealAlg> sigma;
  Subspace<RealAlg> h;
  Subspace<Rat> h1;
  bool rational_J = false;
};

/// Throws Error(Precondition) if g is invalid or J is not integrable.
InvariantReport invariant_report(const NilpotentLieAlgebra& g, const ComplexStructure& j);

/// Throws Error(Precondition) naming the failing hypothesis.
void require_valid_pair(const NilpotentLieAlgebra& g, const ComplexStructure& j);

}  // namespace nilalg
