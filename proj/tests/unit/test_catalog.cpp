#include "doctest.h"
#include "nilalg/catalog.hpp"

using namespace nilalg;

namespace {

CScalar c(const char* re, const char* im = "0") { return {RealAlg::parse(re), RealAlg::parse(im)}; }

// Two instances per case.
std::vector<CatalogEntry> ugarte_instances() {
  return {
      ugarte_a(c("0"), c("1"), 1),                                   // (a)
      ugarte_a(c("1", "1"), c("3/5", "4/5"), 2),                     // (a)
      ugarte_b(1, 1, c("0"), c("0"), c("0"), c("0")),                // (b1)
      ugarte_b(1, 0, c("0"), c("1"), c("0"), c("0")),                // (b1)
      ugarte_b(0, 1, c("0"), c("0"), c("0"), c("0")),                // (b2)
      ugarte_b(0, 0, c("1"), c("1"), c("0", "1"), c("1")),           // (b2)
      ugarte_b(1, 0, c("0"), c("0"), c("0"), c("1")),                // (b3)
      ugarte_b(1, 0, c("2", "-1"), c("0"), c("0"), c("-1/2", "3")),  // (b3)
  };
}

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& n : catalog_names()) out.push_back(lookup(n));
  for (auto& u : ugarte_instances()) out.push_back(std::move(u));
  return out;
}

}  // namespace

TEST_CASE("complex structure equations reproduce the real Iwasawa equations") {
  // de5 = e13 - e24, de6 = e14 + e23.
  NilpotentLieAlgebra g(6);
  g.set_dform_term(4, 0, 2, 1);
  g.set_dform_term(4, 1, 3, -1);
  g.set_dform_term(5, 0, 3, 1);
  g.set_dform_term(5, 1, 2, 1);
  CHECK(iwasawa().algebra == g);
  CHECK(ugarte_b(0, 1, c("0"), c("0"), c("0"), c("0")).algebra == g);
  // w1 ^ conj w1 = -2i e12.
  const auto h = from_complex_equations(1, {{{CScalar(1), 0, false, 0, true}}});
  NilpotentLieAlgebra z(2);
  z.set_dform_term(1, 0, 1, -2);
  CHECK(h == z);
  CHECK_THROWS_AS(from_complex_equations(1, {{{CScalar(RealAlg::sqrt_of(2)), 0, false, 0, true}}}), Error);
}

TEST_CASE("every entry is valid, integrable and matches its expectation") {
  for (const auto& e : all_entries()) {
    INFO(e.name);
    CHECK(validate(e.algebra).ok);
    CHECK(is_integrable(e.algebra, e.J).integrable);
    const auto rep = invariant_report(e.algebra, e.J);
    CHECK(mismatches(e.expected, rep).empty());
    CHECK(rep.alg_dim_upper_bound == rep.h1_dim);
  }
}

TEST_CASE("h1Dim per case") {
  const std::vector<std::size_t> want{1, 1, 1, 1, 2, 2, 2, 2};
  const auto inst = ugarte_instances();
  for (std::size_t k = 0; k < inst.size(); ++k) {
    CHECK(*inst[k].expected.h1_dim == want[k]);
    CHECK(invariant_report(inst[k].algebra, inst[k].J).h1_dim == want[k]);
  }
  const auto iw = invariant_report(iwasawa().algebra, iwasawa().J);
  CHECK(iw.h1_dim == 2);
  CHECK(iw.albanese_dim == 2);
  CHECK(invariant_report(kodaira_thurston().algebra, kodaira_thurston().J).h1_dim == 1);
  CHECK(invariant_report(h3xR3().algebra, h3xR3().J).h1_dim == 2);
}

TEST_CASE("abelian degenerate parameters") {
  const auto e = ugarte_b(0, 0, c("0"), c("0"), c("0"), c("0"));
  CHECK(e.algebra.is_abelian());
  CHECK(*e.expected.h1_dim == 3);
  CHECK(e.warnings.size() == 1);
  CHECK(invariant_report(e.algebra, e.J).h1_dim == 3);
}

TEST_CASE("parameter errors") {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& err) {
      return err.kind();
    }
    return ErrorKind::Validation;
  };
  CHECK(kind([] { ugarte_a(c("0"), c("1", "1"), 1); }) == ErrorKind::Parameter);
  CHECK(kind([] { ugarte_a(c("0"), c("1"), 0); }) == ErrorKind::Parameter);
  CHECK(kind([] { ugarte_a(c("1*r2"), c("1"), 1); }) == ErrorKind::Parameter);
  CHECK(kind([] { ugarte_b(2, 0, c("0"), c("0"), c("0"), c("0")); }) == ErrorKind::Parameter);
  CHECK(kind([] { lookup("nope"); }) == ErrorKind::Parameter);
  CHECK(kind([] { lookup("iwasawa", {{"A", CScalar(1)}}); }) == ErrorKind::Parameter);
  CHECK(kind([] { lookup("ugarte-a", {{"b", CScalar::i()}}); }) == ErrorKind::Parameter);
  CHECK(kind([] { lookup("ugarte-b", {{"eps", CScalar(3)}}); }) == ErrorKind::Parameter);
  CHECK(lookup("ugarte-b", {{"eps", CScalar(1)}, {"rho", CScalar(0)}, {"D", CScalar(1)}}).algebra ==
        ugarte_b(1, 0, c("0"), c("0"), c("0"), c("1")).algebra);
}

TEST_CASE("cohomology of catalog algebras") {
  const auto iw = cohomology_dims(iwasawa().algebra, 6);
  CHECK(iw == std::vector<std::size_t>{1, 4, 8, 10, 8, 4, 1});
  for (const auto& e : all_entries()) {
    const std::size_t n = e.algebra.dim();
    const auto b = cohomology_dims(e.algebra, n);
    INFO(e.name);
    CHECK(b[1] == n - derived_algebra(e.algebra).dim());
    for (std::size_t k = 0; k <= n; ++k) CHECK(b[k] == b[n - k]);
  }
}

TEST_CASE("Iwasawa deformations and the base torus") {
  const auto bound = invariant_report(iwasawa().algebra, iwasawa().J).alg_dim_upper_bound;
  for (const auto& p : torus_presets()) {
    INFO(p.name);
    const auto r = iwasawa_algebraic_dimension(p.X, 5);
    CHECK(r.adim.value == p.expected_a);
    CHECK(r.adim.exact);
    CHECK(r.adim.value <= bound);
    CHECK(r.admissible == p.upper_nilpotent);
    if (p.upper_nilpotent) CHECK(r.tau.matrix() == PeriodTau().matrix() + CScalar(2) * p.X);
  }
  CHECK(iwasawa_algebraic_dimension(torus_preset("torus-x-sqrt").X, 5).adim.value < bound);
  CHECK_THROWS_AS(torus_preset("torus-x-none"), Error);
}
