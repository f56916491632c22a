#include "nilalg/hermitian.hpp"

namespace nilalg {

namespace {

Vec<RealAlg> add(Vec<RealAlg> a, const Vec<RealAlg>& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign > 0 ? b[i] : -b[i];
  return a;
}

void check_dims(const NilpotentLieAlgebra& g, const ComplexStructure& j) {
  if (g.dim() != j.dim()) throw Error(ErrorKind::Dimension, "complex structure and algebra dimensions differ");
}

// Shared hypotheses of the holomorphic-subalgebra theorem: returns N(eta).
Subspace<RealAlg> require_hypotheses(const NilpotentLieAlgebra& g, const ComplexStructure& j, const TwoForm& eta) {
  check_dims(g, j);
  if (eta.dim() != g.dim()) throw Error(ErrorKind::Dimension, "form and algebra dimensions differ");
  if (!is_closed(g, eta)) throw Error(ErrorKind::Precondition, "hypothesis failed: form is not closed");
  if (!is_one_one(eta, j)) throw Error(ErrorKind::Precondition, "hypothesis failed: form is not of type (1,1)");
  if (semipositivity(eta, j).minus != 0)
    throw Error(ErrorKind::Precondition, "hypothesis failed: form is not semipositive");
  auto n = nullspace_hermitian(eta, j);
  if (!is_J_invariant(n, j) || !is_subalgebra(g, n) || holom2_failure(g, j, n))
    throw Error(ErrorKind::Precondition, "hypothesis failed: null-space is not a holomorphic subalgebra");
  return n;
}

}  // namespace

TwoForm TwoForm::from_matrix(Mat<RealAlg> w) {
  if (w.rows() != w.cols()) throw Error(ErrorKind::Shape, "2-form matrix must be square");
  if (!(w.transpose() == -w)) throw Error(ErrorKind::Shape, "2-form matrix must be antisymmetric");
  TwoForm f;
  f.w_ = std::move(w);
  return f;
}

TwoForm TwoForm::from_kform(const KForm<RealAlg>& f) {
  if (f.degree() != 2) throw Error(ErrorKind::Dimension, "not a 2-form");
  TwoForm t(f.ambient_dim());
  for (std::size_t a = 0; a < f.masks().size(); ++a) {
    const std::uint32_t m = f.masks()[a];
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    const auto k = static_cast<std::size_t>(31 - std::countl_zero(m));
    t.set(i, k, f.coeffs()[a]);
  }
  return t;
}

void TwoForm::set(std::size_t i, std::size_t j, const RealAlg& c) {
  if (i >= dim() || j >= dim()) throw Error(ErrorKind::Dimension, "2-form index out of range");
  if (i == j) {
    if (!c.is_zero()) throw Error(ErrorKind::Validation, "2-form diagonal must vanish");
    return;
  }
  w_(i, j) = c;
  w_(j, i) = -c;
}

KForm<RealAlg> TwoForm::to_kform() const {
  KForm<RealAlg> f(dim(), 2);
  for (std::size_t a = 0; a < f.masks().size(); ++a) {
    const std::uint32_t m = f.masks()[a];
    f.coeffs()[a] = w_(static_cast<std::size_t>(std::countr_zero(m)), static_cast<std::size_t>(31 - std::countl_zero(m)));
  }
  return f;
}

RealAlg TwoForm::operator()(const Vec<RealAlg>& x, const Vec<RealAlg>& y) const {
  const auto wy = w_.apply(y);
  RealAlg s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += x[i] * wy[i];
  return s;
}

bool is_one_one(const TwoForm& eta, const ComplexStructure& j) {
  const auto& jm = j.matrix();
  return jm.transpose() * eta.matrix() * jm == eta.matrix();
}

bool is_closed(const NilpotentLieAlgebra& g, const TwoForm& eta) {
  return chevalley_d(g, eta.to_kform()).is_zero();
}

Mat<RealAlg> hermitian_matrix(const TwoForm& eta, const ComplexStructure& j) {
  if (eta.dim() != j.dim()) throw Error(ErrorKind::Dimension, "form and complex structure dimensions differ");
  auto b = eta.matrix() * j.matrix();
  if (!is_symmetric(b))
    throw Error(ErrorKind::Precondition, "eta(x, Jy) is not symmetric: form is not of type (1,1)");
  return b;
}

Inertia semipositivity(const TwoForm& eta, const ComplexStructure& j) {
  return symmetric_signature(hermitian_matrix(eta, j));
}

Subspace<RealAlg> nullspace_hermitian(const TwoForm& eta, const ComplexStructure& j) {
  const auto b = hermitian_matrix(eta, j);
  if (symmetric_signature(b).minus != 0)
    throw Error(ErrorKind::Precondition, "null-space requested for an indefinite form");
  return kernel(b);
}

ContractionNullspace nullspace_contraction(const NilpotentLieAlgebra& g, const KForm<RealAlg>& eta) {
  if (eta.ambient_dim() != g.dim()) throw Error(ErrorKind::Dimension, "form and algebra dimensions differ");
  if (eta.degree() == 0) throw Error(ErrorKind::Precondition, "contraction null-space of a 0-form");
  if (!chevalley_d(g, eta).is_zero()) throw Error(ErrorKind::Precondition, "form is not closed");
  const std::size_t n = g.dim();
  const std::size_t m = eta.masks().size() == 0 ? 0 : KForm<RealAlg>(n, eta.degree() - 1).masks().size();
  Mat<RealAlg> c(m, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ci = eta.contract(unit_vector<RealAlg>(n, i));
    for (std::size_t r = 0; r < m; ++r) c(r, i) = ci.coeffs()[r];
  }
  ContractionNullspace out;
  out.space = kernel(c);
  out.subalgebra = is_subalgebra(g, out.space);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> holom2_failure(const NilpotentLieAlgebra& g,
                                                                   const ComplexStructure& j,
                                                                   const Subspace<RealAlg>& a) {
  check_dims(g, j);
  const std::size_t n = g.dim();
  const auto xs = a.vectors();
  for (std::size_t p = 0; p < xs.size(); ++p) {
    const auto& x = xs[p];
    const auto jx = j.apply(x);
    for (std::size_t k = 0; k < n; ++k) {
      const auto y = unit_vector<RealAlg>(n, k);
      const auto jy = j.apply(y);
      auto w = add(g.bracket(y, x), g.bracket(jy, jx));
      w = add(w, j.apply(g.bracket(jy, x)));
      w = add(w, j.apply(g.bracket(y, jx)), -1);
      if (!a.contains(w)) return std::make_pair(p, k);
    }
  }
  return std::nullopt;
}

bool holomorphic_condition_complex(const NilpotentLieAlgebra& g, const ComplexStructure& j,
                                   const Subspace<RealAlg>& a) {
  check_dims(g, j);
  const std::size_t n = g.dim();
  const auto jc = convert<CScalar>(j.matrix());
  const auto ac = convert<CScalar>(a);
  const CScalar i = CScalar::i();
  const CScalar half(Rat(1, 2));
  // g^{0,1} is spanned by y + iJy, a^{1,0} by x - iJx.
  for (const auto& xr : a.vectors()) {
    const auto x = convert<CScalar>(xr);
    const auto jx = jc.apply(x);
    Vec<CScalar> x10(n);
    for (std::size_t r = 0; r < n; ++r) x10[r] = x[r] - i * jx[r];
    for (std::size_t k = 0; k < n; ++k) {
      const auto y = unit_vector<CScalar>(n, k);
      const auto jy = jc.apply(y);
      Vec<CScalar> y01(n);
      for (std::size_t r = 0; r < n; ++r) y01[r] = y[r] + i * jy[r];
      const auto b = g.bracket(y01, x10);
      const auto jb = jc.apply(b);
      Vec<CScalar> b10(n);
      for (std::size_t r = 0; r < n; ++r) b10[r] = half * (b[r] - i * jb[r]);
      if (!ac.contains(b10)) return false;
    }
  }
  return true;
}

bool is_holomorphic_subalgebra(const NilpotentLieAlgebra& g, const ComplexStructure& j, const Subspace<RealAlg>& a) {
  check_dims(g, j);
  if (!is_J_invariant(a, j)) throw Error(ErrorKind::Precondition, "subspace is not J-invariant");
  if (!is_subalgebra(g, a)) throw Error(ErrorKind::Precondition, "subspace is not a subalgebra");
  return !holom2_failure(g, j, a);
}

Condad2Result condad2_check(const NilpotentLieAlgebra& g, const ComplexStructure& j, const TwoForm& eta,
                            const Subspace<RealAlg>& a) {
  const auto n_eta = require_hypotheses(g, j, eta);
  if (!(n_eta == a)) throw Error(ErrorKind::Precondition, "hypothesis failed: subspace is not N(eta)");
  const std::size_t n = g.dim();
  const auto basis = a.vectors();
  std::vector<Vec<RealAlg>> xs = basis, ys;
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = p + 1; q < basis.size(); ++q) xs.push_back(add(basis[p], basis[q]));
  for (std::size_t k = 0; k < n; ++k) ys.push_back(unit_vector<RealAlg>(n, k));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) ys.push_back(add(ys[k], ys[l]));
  Condad2Result res;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      const auto yx = g.bracket(y, x);
      const auto lhs = eta(yx, j.apply(yx));
      const auto ad2 = g.bracket(x, g.bracket(x, y));
      const auto rhs = -eta(ad2, j.apply(y));
      if (!(lhs == rhs)) {
        res.holds = false;
        res.failure = std::make_pair(x, y);
        return res;
      }
    }
  return res;
}

NullspaceReport verify_nullspace_contains_h(const NilpotentLieAlgebra& g, const ComplexStructure& j, const TwoForm& eta) {
  NullspaceReport r;
  r.nullspace = require_hypotheses(g, j, eta);
  r.h = commutator_ideal_J(g, j);
  r.contains = r.nullspace.contains(r.h);
  r.equal = r.nullspace == r.h;
  return r;
}

Quotient quotient_by(const Subspace<RealAlg>& h, const ComplexStructure& j) {
  const std::size_t n = h.ambient_dim();
  if (j.dim() != n) throw Error(ErrorKind::Dimension, "complex structure and subspace dimensions differ");
  if (!is_J_invariant(h, j)) throw Error(ErrorKind::Precondition, "quotient by a subspace that is not J-invariant");
  std::vector<bool> pivot(n, false);
  for (auto p : h.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free.push_back(c);
  const std::size_t q = free.size();
  Mat<RealAlg> proj(q, n), sec(n, q);
  for (std::size_t r = 0; r < q; ++r) {
    proj(r, free[r]) = 1;
    sec(free[r], r) = 1;
    // e_{pivot_k} is congruent to e_{pivot_k} - h_k, which has no pivot part.
    for (std::size_t k = 0; k < h.dim(); ++k) proj(r, h.pivots()[k]) = -h.basis()(k, free[r]);
  }
  return Quotient{h, proj, sec, ComplexStructure(proj * j.matrix() * sec)};
}

TwoForm hermitian_form_from_metric(const ComplexStructure& j, const Mat<RealAlg>& g0) {
  const auto& jm = j.matrix();
  if (g0.rows() != jm.rows() || !is_symmetric(g0)) throw Error(ErrorKind::Precondition, "metric must be symmetric");
  if (symmetric_signature(g0).plus != g0.rows()) throw Error(ErrorKind::Precondition, "metric must be positive definite");
  const auto metric = g0 + jm.transpose() * g0 * jm;
  return TwoForm::from_matrix(jm.transpose() * metric);
}

TwoForm pullback_from_abelianization(const NilpotentLieAlgebra& g, const ComplexStructure& j, const TwoForm& h_pos) {
  check_dims(g, j);
  const auto quot = quotient_by(commutator_ideal_J(g, j), j);
  if (h_pos.dim() != quot.projection.rows())
    throw Error(ErrorKind::Dimension, "quotient form must have dimension " + std::to_string(quot.projection.rows()));
  if (!is_one_one(h_pos, quot.induced))
    throw Error(ErrorKind::Precondition, "quotient form is not of type (1,1)");
  if (semipositivity(h_pos, quot.induced).plus != h_pos.dim())
    throw Error(ErrorKind::Precondition, "quotient form is not positive definite");
  return TwoForm::from_matrix(quot.projection.transpose() * h_pos.matrix() * quot.projection);
}

TwoForm kahler_rank_witness(const NilpotentLieAlgebra& g, const ComplexStructure& j) {
  const auto quot = quotient_by(commutator_ideal_J(g, j), j);
  const std::size_t q = quot.projection.rows();
  return pullback_from_abelianization(g, j, hermitian_form_from_metric(quot.induced, Mat<RealAlg>::identity(q)));
}

}  // namespace nilalg
