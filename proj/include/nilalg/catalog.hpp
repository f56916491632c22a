#pragma once

// Built-in nilmanifold examples with their expected invariants, the
// converter from complex structure equations, and torus presets.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilalg/complexstruct.hpp"
#include "nilalg/torus.hpp"

namespace nilalg {

enum class Family { Iwasawa, KodairaThurston, H3xR3, UgarteA, UgarteB };

std::string family_name(Family f);

/// The fields of an InvariantReport an entry pins down.
struct ExpectedInvariants {
  std::optional<std::size_t> h1_dim;
  std::optional<std::size_t> alg_dim_upper_bound;
  std::optional<std::size_t> albanese_dim;
  std::optional<Subspace<RealAlg>> h;
  std::optional<bool> rational_J;
};

struct CatalogEntry {
  std::string name;
  Family family = Family::Iwasawa;
  NilpotentLieAlgebra algebra;
  ComplexStructure J;
  ExpectedInvariants expected;
  std::vector<std::string> warnings;
};

/// One term c w^a ^ w^b of a complex structure equation, where w^a is the
/// (1,0)-form e^{2a} + i e^{2a+1} (0-based) and a bar means conjugation.
struct ComplexTerm {
  CScalar c;
  std::size_t a = 0;
  bool a_bar = false;
  std::size_t b = 0;
  bool b_bar = false;
};

/// Real algebra of dimension 2m with dw^a given by d_omega[a]; de^{2a} and
/// de^{2a+1} are the real and imaginary parts.  Coefficients must come out
/// rational, otherwise Error(Parameter).
NilpotentLieAlgebra from_complex_equations(std::size_t m, const std::vector<std::vector<ComplexTerm>>& d_omega);

CatalogEntry iwasawa();

/// h3 (+) R with J pairing the center to the R factor.
CatalogEntry kodaira_thurston();

/// h3 (+) R^3 with the standard structure.
CatalogEntry h3xR3();

/// h3 (+) R^3 with a structure whose h is not rational.
CatalogEntry h3xR3_irrational();

/// dw^2 = E w^1 ^ w^3 + w^1 ^ conj w^3,
/// dw^3 = A w^1 ^ conj w^1 + ib w^1 ^ conj w^2 - ib conj(E) w^2 ^ conj w^1.
/// Error(Parameter) unless |E| = 1, b != 0 and all parts rational.
CatalogEntry ugarte_a(const CScalar& A, const CScalar& E, const Rat& b);

/// dw^2 = eps w^1 ^ conj w^1,
/// dw^3 = rho w^1 ^ w^2 + (1 - eps) A w^1 ^ conj w^1 + B w^1 ^ conj w^2
///        + C w^2 ^ conj w^1 + (1 - eps) D w^2 ^ conj w^2.
CatalogEntry ugarte_b(int eps, int rho, const CScalar& A, const CScalar& B, const CScalar& C, const CScalar& D);

using CatalogParams = std::map<std::string, CScalar>;

/// Entry names accepted by lookup, in a fixed order.
std::vector<std::string> catalog_names();

/// Builds an entry by name.  Parameters default to the first instance of
/// each family; unknown names or keys raise Error(Parameter).
CatalogEntry lookup(const std::string& name, const CatalogParams& params = {});

/// Field-by-field differences between expectation and recomputation.
std::vector<std::string> mismatches(const ExpectedInvariants& expected, const InvariantReport& report);

struct TorusPreset {
  std::string name;
  Mat<CScalar> X;
  std::size_t expected_a = 0;
  /// X is of the form (0, *; 0, 0).
  bool upper_nilpotent = true;
};

std::vector<TorusPreset> torus_presets();

/// Throws Error(Parameter) for an unknown name.
TorusPreset torus_preset(const std::string& name);

bool is_upper_nilpotent(const Mat<CScalar>& x);

struct IwasawaAdim {
  TorusJ base;
  PeriodTau tau;
  AlgebraicDimension adim;
  bool admissible = true;
};

/// a(M) for the Iwasawa manifold with deformation parameter X, computed on
/// the base torus of the projection to (z1, z2).
IwasawaAdim iwasawa_algebraic_dimension(const Mat<CScalar>& x, std::size_t radius);

}  // namespace nilalg
