#include <random>

#include "doctest.h"
#include "nilalg/linalg.hpp"

using namespace nilalg;

namespace {

RealAlg R(const char* s) { return RealAlg::parse(s); }

Vec<Rat> e(std::size_t n, std::size_t i) { return unit_vector<Rat>(n, i); }

std::mt19937 rng(1234);

Mat<Rat> random_rat(std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat<Rat> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Random matrix of prescribed rank: product of random r x k and k x c.
Mat<Rat> random_rank(std::size_t r, std::size_t c, std::size_t k) {
  return random_rat(r, k) * random_rat(k, c);
}

Subspace<Rat> random_subspace(std::size_t n, std::size_t k) {
  const auto m = random_rank(k, n, k);
  std::vector<Vec<Rat>> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(m.row(i));
  return Subspace<Rat>::span(n, rows);
}

}  // namespace

TEST_CASE("rref examples") {
  const auto id = Mat<Rat>::identity(3);
  const auto e1 = rref(id);
  CHECK(e1.form == id);
  CHECK(e1.rank() == 3);
  const auto e0 = rref(Mat<Rat>(3, 3));
  CHECK(e0.rank() == 0);
  CHECK(e0.form.is_zero());
  const auto m = Mat<RealAlg>::from_rows({{RealAlg(1), R("1*r2")}, {R("1*r2"), RealAlg(2)}});
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Mat<Rat>::identity(3)).dim() == 0);
  CHECK(kernel(Mat<Rat>(2, 4)) == Subspace<Rat>::full(4));
  const auto m = Mat<RealAlg>::from_rows({{RealAlg(1), R("1*r2")}, {R("1*r2"), RealAlg(2)}});
  const auto k = kernel(m);
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vec<RealAlg>{R("1*r2"), RealAlg(-1)}));
  CHECK(k == Subspace<RealAlg>::span(2, {{R("1*r2"), RealAlg(-1)}}));
}

TEST_CASE("solve and invert") {
  const auto m = Mat<Rat>::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
  const auto x = solve(m, Vec<Rat>{Rat(3), Rat(2)});
  REQUIRE(x);
  CHECK(*x == Vec<Rat>{Rat(1), Rat(1)});
  CHECK(invert(m) * m == Mat<Rat>::identity(2));
  CHECK_FALSE(solve(Mat<Rat>::from_rows({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}), Vec<Rat>{Rat(0), Rat(1)}));
  CHECK_THROWS_AS(invert(Mat<Rat>(2, 2)), Error);
  CHECK(determinant(m) == Rat(1));
}

TEST_CASE("subspace sum, intersection and containment") {
  const auto a = Subspace<Rat>::span(3, {e(3, 0)});
  const auto b = Subspace<Rat>::span(3, {e(3, 1)});
  CHECK(subspace_sum(a, b) == Subspace<Rat>::span(3, {e(3, 0), e(3, 1)}));
  const auto v = random_subspace(5, 3);
  CHECK(subspace_intersect(v, v) == v);

  const auto p = Subspace<Rat>::span(3, {{Rat(1), Rat(1), Rat(0)}, e(3, 2)});
  const auto q = Subspace<Rat>::span(3, {e(3, 1), e(3, 2)});
  const auto pq = subspace_intersect(p, q);
  CHECK(pq == Subspace<Rat>::span(3, {e(3, 2)}));
  // Brute force: every small combination of p's spanning vectors that lies
  // in q is a multiple of e3.
  for (int s = -3; s <= 3; ++s)
    for (int t = -3; t <= 3; ++t) {
      const Vec<Rat> w{Rat(s), Rat(s), Rat(t)};
      if (q.contains(w)) {
        CHECK(s == 0);
        CHECK(pq.contains(w));
      }
    }
  CHECK_THROWS_AS(subspace_sum(a, Subspace<Rat>(4)), Error);
  CHECK(q.contains(pq));
  CHECK_FALSE(pq.contains(q));
}

TEST_CASE("rank properties on random matrices") {
  for (int k = 0; k < 60; ++k) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t r = dim(rng), c = dim(rng);
    const std::size_t kk = std::min(r, c) == 1 ? 1 : dim(rng) % std::min(r, c) + 1;
    const auto m = random_rank(r, c, kk);
    const auto rk = rank(m);
    CHECK(rk == rank(m.transpose()));
    CHECK(rk <= kk);
    const auto ker = kernel(m);
    CHECK(ker.dim() + rk == c);
    for (const auto& v : ker.vectors()) CHECK(is_zero_vector<Rat>(m.apply(v)));
  }
}

TEST_CASE("Grassmann identity on random subspaces") {
  for (int k = 0; k < 60; ++k) {
    std::uniform_int_distribution<std::size_t> dim(0, 5);
    const auto a = random_subspace(6, dim(rng));
    const auto b = random_subspace(6, dim(rng));
    const auto s = subspace_sum(a, b);
    const auto i = subspace_intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("integer kernel") {
  const auto l = integer_kernel(Mat<Rat>::from_rows({{Rat(1), Rat(-1)}}));
  CHECK(l.rank() == 1);
  CHECK(l.basis == std::vector<Vec<Int>>{{Int(1), Int(1)}});
  const auto z3 = integer_kernel(Mat<Rat>(0, 3));
  CHECK(z3.rank() == 3);
  CHECK(z3.basis == std::vector<Vec<Int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  // 2x + 3y = 0 over Z^2: generated by (3, -2), normalized to (3, -2).
  const auto l2 = integer_kernel(Mat<Rat>::from_rows({{Rat(2), Rat(3)}}));
  CHECK(l2.basis == std::vector<Vec<Int>>{{Int(3), Int(-2)}});
  // Rational coefficients are cleared: x/2 - y/3 = 0 -> (2, 3).
  const auto l3 = integer_kernel(Mat<Rat>::from_rows({{Rat(1, 2), Rat(-1, 3)}}));
  CHECK(l3.basis == std::vector<Vec<Int>>{{Int(2), Int(3)}});
}

TEST_CASE("integer kernel spans the rational kernel and is saturated") {
  for (int k = 0; k < 40; ++k) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    const std::size_t r = dim(rng), c = dim(rng) + 1;
    const auto m = random_rat(r, c, -4, 4);
    const auto lat = integer_kernel(m);
    const auto ker = kernel(m);
    CHECK(lat.rank() == ker.dim());
    std::vector<Vec<Rat>> as_rat;
    for (const auto& v : lat.basis) {
      Vec<Rat> q;
      for (const auto& x : v) q.push_back(Rat(x));
      CHECK(is_zero_vector<Rat>(m.apply(q)));
      as_rat.push_back(q);
    }
    CHECK(Subspace<Rat>::span(c, as_rat) == ker);
    // HNF is canonical: recomputing from a scrambled basis is stable.
    auto scrambled = lat.basis;
    if (scrambled.size() >= 2)
      for (std::size_t j = 0; j < c; ++j) scrambled[0][j] += 3 * scrambled[1][j];
    CHECK(hermite_normal_form(c, scrambled) == lat);
  }
}

TEST_CASE("symmetric signature examples") {
  CHECK(symmetric_signature(Mat<Rat>::identity(4)) == Inertia{4, 0, 0});
  auto d = Mat<Rat>(3, 3);
  d(0, 0) = 1;
  d(1, 1) = -1;
  CHECK(symmetric_signature(d) == Inertia{1, 1, 1});
  auto s = Mat<RealAlg>(2, 2);
  s(0, 0) = R("1*r2-1");
  s(1, 1) = R("1-1*r2");
  CHECK(symmetric_signature(s) == Inertia{1, 1, 0});
  const auto h = Mat<Rat>::from_rows({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  CHECK(symmetric_signature(h) == Inertia{1, 1, 0});
  CHECK_THROWS_AS(symmetric_signature(Mat<Rat>::from_rows({{Rat(0), Rat(1)}, {Rat(0), Rat(0)}})), Error);
}

TEST_CASE("signature is congruence invariant") {
  for (int k = 0; k < 60; ++k) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t n = dim(rng);
    const auto a = random_rat(n, n);
    // Sparse symmetric matrix with zero diagonal hits the hyperbolic path.
    Mat<Rat> m = a + a.transpose();
    if (k % 3 == 0)
      for (std::size_t i = 0; i < n; ++i) m(i, i) = 0;
    const auto base = symmetric_signature(m);
    CHECK(base.plus + base.minus + base.zero == n);
    CHECK(base.zero == n - rank(m));
    Mat<Rat> p = random_rat(n, n);
    while (determinant(p) == 0) p = random_rat(n, n);
    CHECK(symmetric_signature(p.transpose() * m * p) == base);
  }
}
