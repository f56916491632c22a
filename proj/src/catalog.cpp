#include "nilalg/catalog.hpp"

#include <algorithm>

namespace nilalg {

namespace {

using Terms = std::vector<ComplexTerm>;

Vec<CScalar> omega(std::size_t n, std::size_t a, bool bar) {
  Vec<CScalar> v(n);
  v[2 * a] = 1;
  v[2 * a + 1] = bar ? -CScalar::i() : CScalar::i();
  return v;
}

Rat rational_part(const RealAlg& x, const char* what) {
  const auto q = x.as_rational();
  if (!q) throw Error(ErrorKind::Parameter, std::string(what) + " must have rational real and imaginary parts");
  return *q;
}

void require_rational(const CScalar& z, const char* what) {
  rational_part(z.re(), what);
  rational_part(z.im(), what);
}

Vec<RealAlg> e(std::size_t n, std::size_t i) { return unit_vector<RealAlg>(n, i); }

NilpotentLieAlgebra h3_plus(std::size_t m) {
  NilpotentLieAlgebra g(3 + m);
  g.set_bracket(0, 1, 2, 1);
  return g;
}

ExpectedInvariants rational_expectation(std::size_t h1) {
  ExpectedInvariants x;
  x.h1_dim = h1;
  x.alg_dim_upper_bound = h1;
  x.albanese_dim = h1;
  x.rational_J = true;
  return x;
}

const CScalar& param(const CatalogParams& p, const std::string& key, const CScalar& fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void check_keys(const CatalogParams& p, std::initializer_list<const char*> allowed, const std::string& name) {
  for (const auto& [k, v] : p) {
    (void)v;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      throw Error(ErrorKind::Parameter, "unknown parameter '" + k + "' for catalog entry " + name);
  }
}

int small_flag(const CScalar& z, const char* what) {
  const CScalar zero(0), one(1);
  if (z == zero) return 0;
  if (z == one) return 1;
  throw Error(ErrorKind::Parameter, std::string(what) + " must be 0 or 1");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Iwasawa: return "iwasawa";
    case Family::KodairaThurston: return "kodairaThurston";
    case Family::H3xR3: return "h3xR3";
    case Family::UgarteA: return "ugarteA";
    case Family::UgarteB: return "ugarteB";
  }
  return "";
}

NilpotentLieAlgebra from_complex_equations(std::size_t m, const std::vector<Terms>& d_omega) {
  if (d_omega.size() != m) throw Error(ErrorKind::Dimension, "one equation per (1,0)-form expected");
  const std::size_t n = 2 * m;
  NilpotentLieAlgebra g(n);
  for (std::size_t a = 0; a < m; ++a) {
    // Coefficient of e^i ^ e^j (i < j) in dw^a.
    Mat<CScalar> coef(n, n);
    for (const auto& t : d_omega[a]) {
      if (t.a >= m || t.b >= m) throw Error(ErrorKind::Dimension, "structure equation index out of range");
      const auto u = omega(n, t.a, t.a_bar), v = omega(n, t.b, t.b_bar);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) coef(i, j) += t.c * (u[i] * v[j] - u[j] * v[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rat re = rational_part(coef(i, j).re(), "structure equation coefficient");
        const Rat im = rational_part(coef(i, j).im(), "structure equation coefficient");
        if (sgn(re) != 0) g.set_dform_term(2 * a, i, j, re);
        if (sgn(im) != 0) g.set_dform_term(2 * a + 1, i, j, im);
      }
  }
  return g;
}

CatalogEntry iwasawa() {
  CatalogEntry c;
  c.name = "iwasawa";
  c.family = Family::Iwasawa;
  c.algebra = from_complex_equations(3, {{}, {}, {{CScalar(1), 0, false, 1, false}}});
  c.J = ComplexStructure::standard(6);
  c.expected = rational_expectation(2);
  c.expected.h = Subspace<RealAlg>::span(6, {e(6, 4), e(6, 5)});
  return c;
}

CatalogEntry kodaira_thurston() {
  CatalogEntry c;
  c.name = "kodaira-thurston";
  c.family = Family::KodairaThurston;
  c.algebra = h3_plus(1);
  c.J = ComplexStructure::standard(4);
  c.expected = rational_expectation(1);
  c.expected.h = Subspace<RealAlg>::span(4, {e(4, 2), e(4, 3)});
  return c;
}

CatalogEntry h3xR3() {
  CatalogEntry c;
  c.name = "h3xR3";
  c.family = Family::H3xR3;
  c.algebra = h3_plus(3);
  c.J = ComplexStructure::standard(6);
  c.expected = rational_expectation(2);
  c.expected.h = Subspace<RealAlg>::span(6, {e(6, 2), e(6, 3)});
  return c;
}

CatalogEntry h3xR3_irrational() {
  // J e1 = e2, J e3 = r2 e4 + e5, J e4 = -e6, J e5 = -e3 + r2 e6, J e6 = e4.
  const RealAlg r2 = RealAlg::sqrt_of(2);
  Mat<RealAlg> j(6, 6);
  j(1, 0) = 1;
  j(0, 1) = -1;
  j(3, 2) = r2;
  j(4, 2) = 1;
  j(5, 3) = -1;
  j(2, 4) = -1;
  j(5, 4) = r2;
  j(3, 5) = 1;
  CatalogEntry c;
  c.name = "h3xR3-irrational";
  c.family = Family::H3xR3;
  c.algebra = h3_plus(3);
  c.J = ComplexStructure(j);
  c.expected.h1_dim = 2;
  c.expected.alg_dim_upper_bound = 2;
  c.expected.albanese_dim = 1;
  c.expected.rational_J = false;
  c.expected.h = Subspace<RealAlg>::span(6, {e(6, 2), {0, 0, 0, r2, 1, 0}});
  return c;
}

CatalogEntry ugarte_a(const CScalar& A, const CScalar& E, const Rat& b) {
  require_rational(A, "A");
  require_rational(E, "E");
  if (!(E.norm2() == RealAlg(1))) throw Error(ErrorKind::Parameter, "E must satisfy |E| = 1");
  if (sgn(b) == 0) throw Error(ErrorKind::Parameter, "b must be nonzero");
  const CScalar ib = CScalar::i() * CScalar(b);
  CatalogEntry c;
  c.name = "ugarte-a";
  c.family = Family::UgarteA;
  c.algebra = from_complex_equations(
      3, {{},
          {{E, 0, false, 2, false}, {CScalar(1), 0, false, 2, true}},
          {{A, 0, false, 0, true}, {ib, 0, false, 1, true}, {-(ib * E.conj()), 1, false, 0, true}}});
  c.J = ComplexStructure::standard(6);
  c.expected = rational_expectation(1);
  return c;
}

CatalogEntry ugarte_b(int eps, int rho, const CScalar& A, const CScalar& B, const CScalar& C, const CScalar& D) {
  if ((eps != 0 && eps != 1) || (rho != 0 && rho != 1)) throw Error(ErrorKind::Parameter, "eps and rho must be 0 or 1");
  require_rational(A, "A");
  require_rational(B, "B");
  require_rational(C, "C");
  require_rational(D, "D");
  const CScalar one_minus(1 - eps);
  CatalogEntry c;
  c.name = "ugarte-b";
  c.family = Family::UgarteB;
  c.algebra = from_complex_equations(3, {{},
                                         {{CScalar(eps), 0, false, 0, true}},
                                         {{CScalar(rho), 0, false, 1, false},
                                          {one_minus * A, 0, false, 0, true},
                                          {B, 0, false, 1, true},
                                          {C, 1, false, 0, true},
                                          {one_minus * D, 1, false, 1, true}}});
  c.J = ComplexStructure::standard(6);
  std::size_t h1 = 2;
  if (eps == 1 && (rho != 0 || !B.is_zero() || !C.is_zero())) h1 = 1;
  if (eps == 0 && rho == 0 && A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero()) {
    h1 = 3;
    c.warnings.push_back("all structure constants vanish: the algebra is abelian and h1Dim = 3");
  }
  c.expected = rational_expectation(h1);
  return c;
}

std::vector<std::string> catalog_names() {
  return {"iwasawa", "kodaira-thurston", "h3xR3", "h3xR3-irrational", "ugarte-a", "ugarte-b"};
}

CatalogEntry lookup(const std::string& name, const CatalogParams& params) {
  const CScalar zero(0), one(1);
  auto plain = [&](CatalogEntry (*make)()) {
    check_keys(params, {}, name);
    return make();
  };
  if (name == "iwasawa") return plain(iwasawa);
  if (name == "kodaira-thurston") return plain(kodaira_thurston);
  if (name == "h3xR3") return plain(h3xR3);
  if (name == "h3xR3-irrational") return plain(h3xR3_irrational);
  if (name == "ugarte-a") {
    check_keys(params, {"A", "E", "b"}, name);
    const auto& b = param(params, "b", one);
    if (!b.is_real()) throw Error(ErrorKind::Parameter, "b must be real");
    return ugarte_a(param(params, "A", zero), param(params, "E", one), rational_part(b.re(), "b"));
  }
  if (name == "ugarte-b") {
    check_keys(params, {"eps", "rho", "A", "B", "C", "D"}, name);
    return ugarte_b(small_flag(param(params, "eps", zero), "eps"), small_flag(param(params, "rho", one), "rho"),
                    param(params, "A", zero), param(params, "B", zero), param(params, "C", zero),
                    param(params, "D", zero));
  }
  throw Error(ErrorKind::Parameter, "unknown catalog entry '" + name + "'");
}

std::vector<std::string> mismatches(const ExpectedInvariants& x, const InvariantReport& r) {
  std::vector<std::string> out;
  auto num = [&](const char* field, const std::optional<std::size_t>& want, std::size_t got) {
    if (want && *want != got)
      out.push_back(std::string(field) + ": expected " + std::to_string(*want) + ", got " + std::to_string(got));
  };
  num("h1Dim", x.h1_dim, r.h1_dim);
  num("algDimUpperBound", x.alg_dim_upper_bound, r.alg_dim_upper_bound);
  num("albaneseDim", x.albanese_dim, r.albanese_dim);
  if (x.h && !(*x.h == r.h)) out.push_back("h: expected subspace differs");
  if (x.rational_J && *x.rational_J != r.rational_J)
    out.push_back(std::string("rationalJ: expected ") + (*x.rational_J ? "true" : "false"));
  return out;
}

std::vector<TorusPreset> torus_presets() {
  const auto r = [](const char* s) { return RealAlg::parse(s); };
  Mat<CScalar> sqrt_x(2, 2), trivial(2, 2);
  sqrt_x(0, 1) = CScalar(r("1*r2"), r("-1*r3"));
  trivial(0, 0) = CScalar(RealAlg(0), r("1/2*r2"));
  trivial(0, 1) = CScalar(RealAlg(0), r("1/3*r2"));
  trivial(1, 0) = CScalar(RealAlg(0), r("1/3"));
  trivial(1, 1) = CScalar(r("1/3*r3"));
  return {{"torus-x-zero", Mat<CScalar>(2, 2), 2, true},
          {"torus-x-sqrt", sqrt_x, 1, true},
          {"torus-ns-trivial", trivial, 0, false}};
}

TorusPreset torus_preset(const std::string& name) {
  for (auto& p : torus_presets())
    if (p.name == name) return p;
  throw Error(ErrorKind::Parameter, "unknown torus preset '" + name + "'");
}

bool is_upper_nilpotent(const Mat<CScalar>& x) {
  return x.rows() == 2 && x.cols() == 2 && x(0, 0).is_zero() && x(1, 0).is_zero() && x(1, 1).is_zero();
}

IwasawaAdim iwasawa_algebraic_dimension(const Mat<CScalar>& x, std::size_t radius) {
  auto base = J_from_X(x);
  auto tau = tau_from_J(base);
  auto adim = algebraic_dimension(tau, radius);
  return IwasawaAdim{std::move(base), std::move(tau), std::move(adim), is_upper_nilpotent(x)};
}

}  // namespace nilalg
