#include "nilalg/torus.hpp"

#include <numeric>

namespace nilalg {

namespace {

Mat<CScalar> complex_matrix(const Mat<RealAlg>& re, const Mat<RealAlg>& im) {
  Mat<CScalar> m(re.rows(), re.cols());
  for (std::size_t r = 0; r < re.rows(); ++r)
    for (std::size_t c = 0; c < re.cols(); ++c) m(r, c) = CScalar(re(r, c), im(r, c));
  return m;
}

Mat<RealAlg> part(const Mat<CScalar>& m, bool imag) {
  Mat<RealAlg> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = imag ? m(r, c).im() : m(r, c).re();
  return out;
}

// Rational coordinate rows of a list of real algebraic numbers over the
// basis of their common tower: result[mask][i] is coordinate mask of xs[i].
std::vector<Vec<Rat>> expand(const std::vector<RealAlg>& xs) {
  const FieldTower t = common_tower(xs);
  std::vector<Vec<Rat>> rows(t.degree(), Vec<Rat>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto c = xs[i].coordinates_in(t);
    for (std::size_t m = 0; m < t.degree(); ++m) rows[m][i] = c[m];
  }
  return rows;
}

// Pf(E) = E12 E34 - E13 E24 + E14 E23.
template <class T>
T pfaffian(const Mat<T>& e) {
  return e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2);
}

Int gcd_of(const Vec<Int>& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

}  // namespace

PeriodTau::PeriodTau(Mat<CScalar> tau) : tau_(std::move(tau)) {
  if (tau_.rows() != 2 || tau_.cols() != 2) throw Error(ErrorKind::Shape, "period matrix tau must be 2x2");
  if (determinant(imag_part()).is_zero()) throw Error(ErrorKind::Precondition, "Im(tau) is singular");
}

Mat<RealAlg> PeriodTau::real_part() const { return part(tau_, false); }
Mat<RealAlg> PeriodTau::imag_part() const { return part(tau_, true); }

TorusJ::TorusJ(Mat<RealAlg> j) : j_(std::move(j)) {
  if (j_.rows() != 4 || j_.cols() != 4) throw Error(ErrorKind::Shape, "torus complex structure must be 4x4");
  if (!(j_ * j_ == -Mat<RealAlg>::identity(4))) throw Error(ErrorKind::Validation, "J^2 != -Id");
  if (determinant(block(0, 1)).is_zero())
    throw Error(ErrorKind::Precondition, "block B of J is singular: J has no period matrix of the form (tau, Id)");
}

TorusJ TorusJ::standard() {
  Mat<RealAlg> k(4, 4);
  k.set_block(0, 2, Mat<RealAlg>::identity(2));
  k.set_block(2, 0, -Mat<RealAlg>::identity(2));
  return TorusJ(k);
}

PeriodTau tau_from_J(const TorusJ& j) {
  const auto binv = invert(j.block(0, 1));
  return PeriodTau(complex_matrix(binv * j.block(0, 0), binv));
}

TorusJ J_from_tau(const PeriodTau& tau) {
  const auto x = tau.real_part();
  const auto yinv = invert(tau.imag_part());
  Mat<RealAlg> j(4, 4);
  j.set_block(0, 0, yinv * x);
  j.set_block(0, 2, yinv);
  j.set_block(2, 0, -tau.imag_part() - x * yinv * x);
  j.set_block(2, 2, -(x * yinv));
  return TorusJ(j);
}

TorusJ J_from_X(const Mat<CScalar>& x) {
  if (x.rows() != 2 || x.cols() != 2) throw Error(ErrorKind::Shape, "X must be 2x2");
  const CScalar i = CScalar::i();
  auto w = [&](std::size_t k, bool bar) {
    Vec<CScalar> v(4);
    v[k] = 1;
    v[k + 2] = bar ? i : -i;
    return v;
  };
  std::vector<Vec<CScalar>> forms;
  for (std::size_t k = 0; k < 2; ++k) {
    auto a = w(k, false);
    for (std::size_t l = 0; l < 2; ++l) {
      const auto wb = w(l, true);
      for (std::size_t r = 0; r < 4; ++r) a[r] -= i * x(k, l) * wb[r];
    }
    forms.push_back(std::move(a));
  }
  try {
    return TorusJ(ComplexStructure::from_oneforms(forms).matrix());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Validation)
      throw Error(ErrorKind::Precondition, "X does not define a complex structure (conjugating matrix is singular)");
    throw;
  }
}

Mat<RealAlg> J_from_X_conjugation(const Mat<CScalar>& x) {
  if (x.rows() != 2 || x.cols() != 2) throw Error(ErrorKind::Shape, "X must be 2x2");
  const auto re = part(x, false), im = part(x, true);
  const auto id = Mat<RealAlg>::identity(2);
  Mat<RealAlg> m(4, 4);
  m.set_block(0, 0, id + im);
  m.set_block(0, 2, re);
  m.set_block(2, 0, re);
  m.set_block(2, 2, id - im);
  if (determinant(m).is_zero()) throw Error(ErrorKind::Precondition, "conjugating matrix is singular");
  return invert(m) * TorusJ::standard().matrix() * m;
}

Vec<CScalar> ns_coefficients(const PeriodTau& tau) {
  const auto& t = tau.matrix();
  return {CScalar(1), -t(0, 1), -t(1, 1), t(0, 0), t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0), t(1, 0)};
}

Mat<Rat> antisymmetric_from_coords(const Vec<Int>& v) {
  if (v.size() != 6) throw Error(ErrorKind::Dimension, "NS coordinates have length 6");
  Mat<Rat> e(4, 4);
  auto put = [&](std::size_t i, std::size_t j, const Int& x) {
    e(i, j) = Rat(x);
    e(j, i) = Rat(-x);
  };
  put(0, 1, v[0]);
  put(0, 2, v[1]);
  put(0, 3, v[2]);
  put(1, 2, v[3]);
  put(2, 3, v[4]);
  put(1, 3, v[5]);
  return e;
}

NSLattice ns_lattice(const PeriodTau& tau) {
  const auto coeffs = ns_coefficients(tau);
  std::vector<RealAlg> re, im;
  for (const auto& c : coeffs) {
    re.push_back(c.re());
    im.push_back(c.im());
  }
  std::vector<Vec<Rat>> rows;
  for (auto* parts : {&re, &im})
    for (auto& r : expand(*parts))
      if (!is_zero_vector<Rat>(r)) rows.push_back(std::move(r));
  NSLattice ns;
  ns.constraints = Mat<Rat>::from_rows(rows, 6);
  ns.lattice = integer_kernel(ns.constraints);
  return ns;
}

AlgebraicDimension algebraic_dimension(const PeriodTau& tau, std::size_t radius) {
  AlgebraicDimension out;
  out.radius = radius;
  out.ns = ns_lattice(tau);
  const auto jm = J_from_tau(tau).matrix();
  const auto jt = jm.transpose();
  const auto& basis = out.ns.lattice.basis;
  const std::size_t r = basis.size();

  // Exact value: E0 = -J^T G, G = Id + J^T J, is a Kaehler class; up to the
  // sign of Pf(E0), Pf is a quadratic form of signature (1,3) on real (1,1)
  // forms, positive exactly on definite ones and zero on semidefinite ones.
  const auto metric = Mat<RealAlg>::identity(4) + jt * jm;
  const int s0 = pfaffian(Mat<RealAlg>(-(jt * metric))).sign();
  Mat<Rat> gram(r, r);
  std::vector<Mat<Rat>> es;
  for (const auto& b : basis) es.push_back(antisymmetric_from_coords(b));
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q) {
      const Rat v = (pfaffian(es[p] + es[q]) - pfaffian(es[p]) - pfaffian(es[q])) / 2;
      gram(p, q) = s0 > 0 ? v : Rat(-v);
    }
  out.pfaffian_inertia = symmetric_signature(gram);
  out.upper_bound = out.pfaffian_inertia.plus > 0 ? 2 : out.pfaffian_inertia.zero > 0 ? 1 : 0;

  // Lower bound and certificate by enumeration.
  std::size_t best_rank = 0;
  if (r > 0 && radius > 0) {
    const long rad = static_cast<long>(radius);
    std::vector<long> c(r, -rad);
    for (;;) {
      Vec<Int> cv(r);
      for (std::size_t k = 0; k < r; ++k) cv[k] = c[k];
      if (gcd_of(cv) == 1) {
        Vec<Int> coords(6, Int(0));
        for (std::size_t k = 0; k < r; ++k)
          for (std::size_t m = 0; m < 6; ++m) coords[m] += cv[k] * basis[k][m];
        const auto e = antisymmetric_from_coords(coords);
        const auto m = jt * convert<RealAlg>(e);
        if (!is_symmetric(m)) throw Error(ErrorKind::Validation, "internal: J^T E not symmetric for E in NS");
        const auto in = symmetric_signature(m);
        if (in.minus == 0 && in.plus > best_rank) {
          best_rank = in.plus;
          out.certificate_coords = cv;
          out.certificate = e;
          if (best_rank >= 2 * out.upper_bound) break;
        }
      }
      std::size_t k = r;
      while (k > 0 && c[k - 1] == rad) c[--k] = -rad;
      if (k == 0) break;
      ++c[k - 1];
    }
  }
  out.value = best_rank / 2;
  out.exact = out.value == out.upper_bound;
  return out;
}

bool alpha_degeneracy(const PeriodTau& tau) {
  const auto& t = tau.matrix();
  if (!t(1, 0).is_zero()) throw Error(ErrorKind::Precondition, "tau must be upper triangular");
  const CScalar t1 = t(0, 0), t2 = t(1, 1), alpha = t(0, 1);
  const std::vector<CScalar> span{t1, t1 * t2, CScalar(1), t2};
  std::vector<RealAlg> re, im;
  for (const auto& s : span) {
    re.push_back(s.re());
    im.push_back(s.im());
  }
  re.push_back(alpha.re());
  im.push_back(alpha.im());
  std::vector<Vec<Rat>> rows;
  for (auto* parts : {&re, &im})
    for (auto& row : expand(*parts)) rows.push_back(std::move(row));
  Mat<Rat> a(rows.size(), 4);
  Vec<Rat> b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < 4; ++k) a(i, k) = rows[i][k];
    b[i] = rows[i][4];
  }
  return solve(a, b).has_value();
}

}  // namespace nilalg
