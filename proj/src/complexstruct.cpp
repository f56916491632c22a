#include "nilalg/complexstruct.hpp"

namespace nilalg {

ComplexStructure::ComplexStructure(Mat<RealAlg> j) : j_(std::move(j)) {
  if (j_.rows() != j_.cols()) throw Error(ErrorKind::Shape, "complex structure must be a square matrix");
  if (j_.rows() % 2 != 0)
    throw Error(ErrorKind::Shape, "complex structure on odd dimension " + std::to_string(j_.rows()));
  if (!(j_ * j_ == -Mat<RealAlg>::identity(j_.rows())))
    throw Error(ErrorKind::Validation, "J^2 != -Id");
}

ComplexStructure ComplexStructure::from_oneforms(const std::vector<Vec<CScalar>>& forms) {
  if (forms.empty()) return ComplexStructure(Mat<RealAlg>(0, 0));
  const std::size_t n = forms.front().size();
  if (n % 2 != 0) throw Error(ErrorKind::Shape, "(1,0)-forms on odd dimension " + std::to_string(n));
  if (forms.size() != n / 2)
    throw Error(ErrorKind::Shape, "need " + std::to_string(n / 2) + " (1,0)-forms, got " + std::to_string(forms.size()));
  // (a + ib) J = i(a + ib) splits into a J = -b and b J = a.
  Mat<RealAlg> p(n, n), q(n, n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    if (forms[k].size() != n) throw Error(ErrorKind::Dimension, "(1,0)-forms of different lengths");
    for (std::size_t i = 0; i < n; ++i) {
      p(k, i) = forms[k][i].re();
      p(n / 2 + k, i) = forms[k][i].im();
      q(k, i) = -forms[k][i].im();
      q(n / 2 + k, i) = forms[k][i].re();
    }
  }
  if (rank(p) != n)
    throw Error(ErrorKind::Validation, "(1,0)-forms and their conjugates do not form a basis");
  return ComplexStructure(invert(p) * q);
}

ComplexStructure ComplexStructure::standard(std::size_t n) {
  if (n % 2 != 0) throw Error(ErrorKind::Shape, "complex structure on odd dimension " + std::to_string(n));
  Mat<RealAlg> j(n, n);
  for (std::size_t k = 0; k < n; k += 2) {
    j(k + 1, k) = 1;
    j(k, k + 1) = -1;
  }
  return ComplexStructure(std::move(j));
}

Subspace<CScalar> ComplexStructure::holomorphic_vectors() const {
  const std::size_t n = dim();
  std::vector<Vec<CScalar>> vs;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<CScalar> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = CScalar(RealAlg(r == i ? 1 : 0), -j_(r, i));
    vs.push_back(std::move(v));
  }
  return Subspace<CScalar>::span(n, vs);
}

Subspace<CScalar> ComplexStructure::holomorphic_forms() const {
  const std::size_t n = dim();
  std::vector<Vec<CScalar>> vs;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<CScalar> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = CScalar(RealAlg(c == i ? 1 : 0), -j_(i, c));
    vs.push_back(std::move(v));
  }
  return Subspace<CScalar>::span(n, vs);
}

IntegrabilityResult is_integrable(const NilpotentLieAlgebra& g, const ComplexStructure& j) {
  const std::size_t n = g.dim();
  if (j.dim() != n) throw Error(ErrorKind::Dimension, "complex structure and algebra dimensions differ");
  IntegrabilityResult res;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto x = unit_vector<RealAlg>(n, a);
      const auto y = unit_vector<RealAlg>(n, b);
      const auto jx = j.apply(x);
      const auto jy = j.apply(y);
      auto val = g.bracket(jx, jy);
      const auto xy = g.bracket(x, y);
      const auto t1 = j.apply(g.bracket(jx, y));
      const auto t2 = j.apply(g.bracket(x, jy));
      for (std::size_t k = 0; k < n; ++k) val[k] -= xy[k] + t1[k] + t2[k];
      if (!is_zero_vector<RealAlg>(val)) {
        res.integrable = false;
        res.witness = std::make_pair(a, b);
        res.nijenhuis = std::move(val);
        return res;
      }
    }
  return res;
}

Subspace<RealAlg> commutator_ideal_J(const NilpotentLieAlgebra& g, const ComplexStructure& j) {
  const auto g1 = convert<RealAlg>(derived_algebra(g));
  return subspace_sum(g1, g1.image_under(j.matrix()));
}

std::size_t holomorphic_differentials_dim(const NilpotentLieAlgebra& g, const ComplexStructure& j) {
  return (g.dim() - commutator_ideal_J(g, j).dim()) / 2;
}

std::size_t closed_holomorphic_forms_dim(const NilpotentLieAlgebra& g, const ComplexStructure& j) {
  const auto forms = j.holomorphic_forms();
  const Mat<Rat> d1 = differential_matrix(g, 1);
  Mat<CScalar> dm(d1.rows(), forms.dim());
  for (std::size_t k = 0; k < forms.dim(); ++k)
    for (std::size_t r = 0; r < d1.rows(); ++r)
      for (std::size_t c = 0; c < d1.cols(); ++c)
        if (sgn(d1(r, c)) != 0) dm(r, k) += CScalar(d1(r, c)) * forms.basis()(k, c);
  return forms.dim() - rank(dm);
}

Subspace<Rat> rational_hull(const Subspace<RealAlg>& s) {
  std::vector<Vec<Rat>> comps;
  for (const auto& v : s.vectors()) {
    const FieldTower t = common_tower(v);
    std::vector<std::vector<Rat>> coords;
    for (const auto& x : v) coords.push_back(x.coordinates_in(t));
    for (std::size_t mask = 0; mask < t.degree(); ++mask) {
      Vec<Rat> c(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) c[i] = coords[i][mask];
      if (!is_zero_vector<Rat>(c)) comps.push_back(std::move(c));
    }
  }
  return Subspace<Rat>::span(s.ambient_dim(), comps);
}

Subspace<Rat> invariant_rational_closure(const Subspace<RealAlg>& s, const ComplexStructure& j) {
  auto w = rational_hull(s);
  for (;;) {
    const auto wr = convert<RealAlg>(w);
    auto next = rational_hull(subspace_sum(wr, wr.image_under(j.matrix())));
    if (next == w) return w;
    w = std::move(next);
  }
}

Subspace<Rat> h1_subspace(const NilpotentLieAlgebra& g, const ComplexStructure& j) {
  return invariant_rational_closure(commutator_ideal_J(g, j), j);
}

bool is_rational_J(const ComplexStructure& j) {
  const auto& m = j.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_rational()) return false;
  return true;
}

bool is_J_invariant(const Subspace<RealAlg>& s, const ComplexStructure& j) {
  return s.contains(s.image_under(j.matrix()));
}

void require_valid_pair(const NilpotentLieAlgebra& g, const ComplexStructure& j) {
  if (j.dim() != g.dim())
    throw Error(ErrorKind::Precondition, "J is " + std::to_string(j.dim()) + "-dimensional but the algebra has dimension " +
                                             std::to_string(g.dim()));
  const auto v = validate(g);
  if (v.jacobi_failure) {
    const auto& t = *v.jacobi_failure;
    throw Error(ErrorKind::Precondition, "Jacobi identity fails on (e" + std::to_string(t[0] + 1) + ", e" +
                                             std::to_string(t[1] + 1) + ", e" + std::to_string(t[2] + 1) + ")");
  }
  if (!v.nilpotent) throw Error(ErrorKind::Precondition, "algebra is not nilpotent");
  const auto integ = is_integrable(g, j);
  if (!integ.integrable)
    throw Error(ErrorKind::Precondition, "J is not integrable: N(e" + std::to_string(integ.witness->first + 1) + ", e" +
                                             std::to_string(integ.witness->second + 1) + ") != 0");
}

InvariantReport invariant_report(const NilpotentLieAlgebra& g, const ComplexStructure& j) {
  require_valid_pair(g, j);
  InvariantReport r;
  r.h = commutator_ideal_J(g, j);
  r.sigma = r.h;
  r.h1_dim = (g.dim() - r.h.dim()) / 2;
  r.alg_dim_upper_bound = r.h1_dim;
  r.kahler_rank = r.h1_dim;
  r.h1 = invariant_rational_closure(r.h, j);
  r.albanese_dim = (g.dim() - r.h1.dim()) / 2;
  r.rational_J = is_rational_J(j);
  return r;
}

}  // namespace nilalg
