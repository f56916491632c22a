#include <random>

#include "doctest.h"
#include "nilalg/torus.hpp"

using namespace nilalg;

namespace {

RealAlg R(const char* s) { return RealAlg::parse(s); }
const CScalar I = CScalar::i();

Mat<CScalar> cm(std::initializer_list<std::initializer_list<CScalar>> rows) { return Mat<CScalar>::from_rows(rows); }

// X = (0, r2 - i r3; 0, 0).
Mat<CScalar> sqrt_x() { return cm({{CScalar(0), CScalar(R("1*r2"), R("-1*r3"))}, {CScalar(0), CScalar(0)}}); }

// A non-nilpotent X whose torus has trivial NS lattice.
Mat<CScalar> ns_trivial_x() {
  return cm({{CScalar(RealAlg(0), R("1/2*r2")), CScalar(RealAlg(0), R("1/3*r2"))},
             {CScalar(RealAlg(0), R("1/3")), CScalar(R("1/3*r3"))}});
}

std::mt19937 rng(99);

Rat small_rat() {
  std::uniform_int_distribution<int> n(-3, 3), d(1, 3);
  Rat r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

Mat<Rat> random_invertible(std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    Mat<Rat> p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) p(i, k) = d(rng);
    if (determinant(p) != 0) return p;
  }
}

// Random rational complex structure with invertible B block.
TorusJ random_torus_j() {
  for (;;) {
    const auto p = convert<RealAlg>(random_invertible(4));
    const auto j = p * TorusJ::standard().matrix() * invert(p);
    if (!determinant(j.block(0, 2, 2, 2)).is_zero()) return TorusJ(j);
  }
}

PeriodTau random_rational_tau() {
  for (;;) {
    Mat<CScalar> t(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) t(i, k) = CScalar(RealAlg(small_rat()), RealAlg(small_rat()));
    Mat<RealAlg> im(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) im(i, k) = t(i, k).im();
    if (!determinant(im).is_zero()) return PeriodTau(t);
  }
}

// Brute-force max rank of PSD J^T E over antisymmetric integer E with
// entries in [-n, n]; (1,1) is tested directly as J^T E symmetric.
std::size_t scan_max_rank(const Mat<RealAlg>& j, int n) {
  std::size_t best = 0;
  const auto jt = j.transpose();
  const int w = 2 * n + 1;
  int total = 1;
  for (int k = 0; k < 6; ++k) total *= w;
  for (int code = 0; code < total; ++code) {
    Vec<Int> v(6);
    int c = code;
    for (auto& x : v) {
      x = c % w - n;
      c /= w;
    }
    const auto m = jt * convert<RealAlg>(antisymmetric_from_coords(v));
    if (!is_symmetric(m)) continue;
    const auto in = symmetric_signature(m);
    if (in.minus == 0) best = std::max(best, in.plus);
  }
  return best;
}

}  // namespace

TEST_CASE("standard structure and tau = i Id") {
  const PeriodTau t;
  CHECK(t.matrix() == cm({{I, CScalar(0)}, {CScalar(0), I}}));
  CHECK(J_from_tau(t) == TorusJ::standard());
  CHECK(tau_from_J(TorusJ::standard()) == t);
  CHECK(J_from_X(Mat<CScalar>(2, 2)) == TorusJ::standard());
  CHECK(J_from_X_conjugation(Mat<CScalar>(2, 2)) == TorusJ::standard().matrix());
  CHECK_THROWS_AS(PeriodTau(Mat<CScalar>(2, 2)), Error);
  CHECK_THROWS_AS(TorusJ(ComplexStructure::standard(4).matrix()), Error);  // B = 0
}

TEST_CASE("the sqrt2/sqrt3 example") {
  const auto j = J_from_X(sqrt_x());
  const RealAlg r2 = RealAlg::sqrt_of(2), r3 = RealAlg::sqrt_of(3);
  const auto expect = Mat<RealAlg>::from_rows({{RealAlg(0), 2 * r2, RealAlg(1), 2 * r3},
                                               {RealAlg(0), RealAlg(0), RealAlg(0), RealAlg(1)},
                                               {RealAlg(-1), 2 * r3, RealAlg(0), -2 * r2},
                                               {RealAlg(0), RealAlg(-1), RealAlg(0), RealAlg(0)}});
  CHECK(j.matrix() == expect);
  CHECK(J_from_X_conjugation(sqrt_x()) == expect);
  const auto t = tau_from_J(j);
  CHECK(t.matrix() == cm({{I, CScalar(2 * r2, -2 * r3)}, {CScalar(0), I}}));
  CHECK(J_from_tau(t) == j);
  CHECK_FALSE(alpha_degeneracy(t));
}

TEST_CASE("NS lattice examples") {
  const auto std_ns = ns_lattice(PeriodTau());
  CHECK(std_ns.lattice.rank() == 4);
  // a = e, c = d; b, f free.
  CHECK(std_ns.lattice.basis == std::vector<Vec<Int>>{{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0},
                                                      {0, 0, 0, 0, 0, 1}});
  const auto t = tau_from_J(J_from_X(sqrt_x()));
  const auto ns = ns_lattice(t);
  CHECK(ns.lattice.rank() == 3);
  CHECK(ns.lattice.basis == std::vector<Vec<Int>>{{1, 0, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 1}});

  // Independent expansion of a + d t11 - b t12 + f t21 - c t22 + e det over
  // {1, r2, r3, r6} with t11 = t22 = i, t12 = 2r2 - 2i r3, t21 = 0, det = -1:
  //   real: a - e - 2r2 b = 0;  imaginary: d + 2r3 b - c = 0.
  // so b = 0, a = e, c = d.
  for (const auto& v : ns.lattice.basis) {
    CHECK(v[1] == 0);
    CHECK(v[0] == v[4]);
    CHECK(v[2] == v[3]);
  }
  CHECK(ns_lattice(tau_from_J(J_from_X(ns_trivial_x()))).lattice.rank() == 0);
}

TEST_CASE("NS membership is exact and equivalent to J^T E symmetric") {
  std::vector<PeriodTau> taus{PeriodTau(), tau_from_J(J_from_X(sqrt_x()))};
  for (int k = 0; k < 10; ++k) taus.push_back(random_rational_tau());
  for (const auto& t : taus) {
    const auto coeffs = ns_coefficients(t);
    const auto jt = J_from_tau(t).matrix().transpose();
    for (const auto& v : ns_lattice(t).lattice.basis) {
      CScalar s;
      for (std::size_t i = 0; i < 6; ++i) s += coeffs[i] * CScalar(Rat(v[i]));
      CHECK(s.is_zero());
      CHECK(is_symmetric(jt * convert<RealAlg>(antisymmetric_from_coords(v))));
    }
    // Conversely every E with J^T E symmetric in a small box lies in NS.
    std::vector<Vec<Rat>> basis;
    for (const auto& v : ns_lattice(t).lattice.basis) basis.push_back(convert<Rat>(v));
    const auto span = Subspace<Rat>::span(6, basis);
    for (int code = 0; code < 729; ++code) {
      Vec<Int> v(6);
      int c = code;
      for (auto& x : v) {
        x = c % 3 - 1;
        c /= 3;
      }
      const bool sym = is_symmetric(jt * convert<RealAlg>(antisymmetric_from_coords(v)));
      CHECK(sym == span.contains(convert<Rat>(v)));
    }
  }
}

TEST_CASE("algebraic dimension examples") {
  const auto a2 = algebraic_dimension(PeriodTau(), 2);
  CHECK(a2.value == 2);
  CHECK(a2.exact);
  REQUIRE(a2.certificate);
  CHECK(symmetric_signature(TorusJ::standard().matrix().transpose() * convert<RealAlg>(*a2.certificate)) ==
        Inertia{4, 0, 0});

  const auto a1 = algebraic_dimension(tau_from_J(J_from_X(sqrt_x())), 5);
  CHECK(a1.value == 1);
  CHECK(a1.upper_bound == 1);
  CHECK(a1.exact);
  CHECK(a1.ns.lattice.rank() == 3);

  const auto a0 = algebraic_dimension(tau_from_J(J_from_X(ns_trivial_x())), 5);
  CHECK(a0.value == 0);
  CHECK(a0.exact);
  CHECK_FALSE(a0.certificate);

  const auto r0 = algebraic_dimension(PeriodTau(), 0);
  CHECK(r0.value == 0);
  CHECK_FALSE(r0.exact);
  CHECK(r0.upper_bound == 2);
}

TEST_CASE("algebraic dimension matches an exhaustive antisymmetric scan") {
  // Box [-1, 1]: 729 candidates per structure.
  CHECK(scan_max_rank(TorusJ::standard().matrix(), 1) == 4);
  CHECK(scan_max_rank(J_from_X(sqrt_x()).matrix(), 1) == 2);
  CHECK(scan_max_rank(J_from_X(ns_trivial_x()).matrix(), 1) == 0);
  for (int k = 0; k < 6; ++k) {
    const auto t = random_rational_tau();
    const auto a = algebraic_dimension(t, 3);
    CHECK(a.value <= a.upper_bound);
    const auto scan = scan_max_rank(J_from_tau(t).matrix(), 1);
    // Scan hits are lattice vectors, so they bound the exact value below.
    CHECK(scan / 2 <= a.upper_bound);
    if (a.exact) CHECK(a.value * 2 >= scan);
  }
}

TEST_CASE("algebraic dimension is monotone and scale invariant") {
  const auto t = tau_from_J(J_from_X(sqrt_x()));
  std::size_t prev = 0;
  for (std::size_t r = 0; r <= 3; ++r) {
    const auto a = algebraic_dimension(t, r);
    CHECK(a.value >= prev);
    CHECK(a.value <= 2);
    prev = a.value;
  }
  const auto a = algebraic_dimension(t, 2);
  REQUIRE(a.certificate);
  const auto jt = J_from_tau(t).matrix().transpose();
  const auto base = symmetric_signature(jt * convert<RealAlg>(*a.certificate));
  for (int s = 2; s <= 4; ++s) CHECK(symmetric_signature(jt * convert<RealAlg>(Rat(s) * *a.certificate)) == base);
}

TEST_CASE("tau and J round trips") {
  for (int k = 0; k < 30; ++k) {
    const auto j = random_torus_j();
    CHECK(J_from_tau(tau_from_J(j)) == j);
    const auto t = random_rational_tau();
    CHECK(tau_from_J(J_from_tau(t)) == t);
  }
}

TEST_CASE("J from X: one-form recipe agrees with the conjugation formula") {
  std::uniform_int_distribution<int> d(-3, 3);
  for (int k = 0; k < 20; ++k) {
    Mat<CScalar> x(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t l = 0; l < 2; ++l) x(i, l) = CScalar(RealAlg(Rat(d(rng)) / 4), RealAlg(Rat(d(rng)) / 4));
    Mat<RealAlg> conj;
    try {
      conj = J_from_X_conjugation(x);
    } catch (const Error&) {
      continue;
    }
    try {
      CHECK(J_from_X(x).matrix() == conj);
    } catch (const Error& e) {
      // Singular B: the structure exists but has no (tau, Id) form.
      CHECK(e.kind() == ErrorKind::Precondition);
      CHECK(determinant(conj.block(0, 2, 2, 2)).is_zero());
    }
  }
}

TEST_CASE("tau = i Id + 2X for nilpotent X") {
  for (int k = 0; k < 20; ++k) {
    const CScalar z{RealAlg(small_rat()), RealAlg(small_rat())};
    for (bool upper : {true, false}) {
      Mat<CScalar> x(2, 2);
      (upper ? x(0, 1) : x(1, 0)) = z;
      const auto t = tau_from_J(J_from_X(x));
      CHECK(t.matrix() == PeriodTau().matrix() + CScalar(2) * x);
    }
  }
}

TEST_CASE("alpha degeneracy") {
  auto upper = [](CScalar t1, CScalar alpha, CScalar t2) { return PeriodTau(cm({{t1, alpha}, {CScalar(0), t2}})); };
  CHECK(alpha_degeneracy(upper(I, CScalar(0), I)));
  CHECK(alpha_degeneracy(upper(I, I, I)));
  CHECK(alpha_degeneracy(upper(I, CScalar(Rat(3, 2)) - I, I)));
  CHECK_FALSE(alpha_degeneracy(upper(I, CScalar(R("2*r2"), R("-2*r3")), I)));
  CHECK_FALSE(alpha_degeneracy(upper(I, CScalar(RealAlg::sqrt_of(2)), I)));
  const auto t2 = CScalar(RealAlg::sqrt_of(2), RealAlg(1));
  CHECK(alpha_degeneracy(upper(I, I * t2, t2)));
  CHECK_THROWS_AS(alpha_degeneracy(PeriodTau(cm({{I, CScalar(0)}, {CScalar(1), I}}))), Error);
}
