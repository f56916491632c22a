#pragma once

// Exact arithmetic over real multi-quadratic fields Q(sqrt d1, ..., sqrt dm)
// and their complexifications.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilalg/error.hpp"

namespace nilalg {

using Int = mpz_class;
using Rat = mpq_class;

/// Ordered set of radicands d1 < ... < dm, each squarefree and >= 2, no
/// product of a nonempty subset being a perfect square (so the 2^m products
/// form a Q-basis of the field).
class FieldTower {
 public:
  static constexpr std::size_t kMaxRadicands = 3;

  FieldTower() = default;

  /// Throws Error(Parameter) for a malformed list, Error(TowerOverflow) past
  /// the cap.
  static FieldTower from_radicands(std::vector<std::int64_t> radicands);

  /// Smallest tower containing both; greedy over the sorted union of
  /// radicands, so dependent radicands (6 next to 2 and 3) are dropped.
  static FieldTower unite(const FieldTower& a, const FieldTower& b);

  const std::vector<std::int64_t>& radicands() const { return radicands_; }
  std::size_t size() const { return radicands_.size(); }
  std::size_t degree() const { return std::size_t{1} << radicands_.size(); }
  bool is_rational() const { return radicands_.empty(); }

  /// Product of the radicands selected by `mask`.
  Int basis_product(unsigned mask) const;

  /// For a squarefree d whose square root lies in this tower, returns
  /// (mask, factor) with sqrt(d) = factor * basis(mask).
  std::optional<std::pair<unsigned, Rat>> locate_sqrt(std::int64_t d) const;

  friend bool operator==(const FieldTower&, const FieldTower&) = default;

 private:
  std::vector<std::int64_t> radicands_;
};

/// Element of a real multi-quadratic field, stored by its coordinates over
/// the basis { prod_{i in S} sqrt(d_i) : S subset of radicands } indexed by
/// bit mask.  Arithmetic results are trimmed to the radicands they use.
class RealAlg {
 public:
  RealAlg() : coords_(1) {}
  RealAlg(int v) : coords_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
  RealAlg(long v) : coords_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
  RealAlg(const Rat& q) : coords_{q} {}  // NOLINT(google-explicit-constructor)
  RealAlg(FieldTower tower, std::vector<Rat> coords);

  /// sqrt(d) for any integer d >= 0; square factors are pulled out.
  static RealAlg sqrt_of(std::int64_t d);

  /// Scalar text grammar: term (('+'|'-') term)*, term := rat ('*r' digits)?
  static RealAlg parse(std::string_view text);

  const FieldTower& tower() const { return tower_; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value as a rational number if it is one.
  std::optional<Rat> as_rational() const;

  /// Same value expressed in `target`; Error(TowerOverflow) if the value
  /// does not lie in that field.
  RealAlg embed(const FieldTower& target) const;

  /// Coordinates of the value over the basis of `target` (which must
  /// contain it).
  std::vector<Rat> coordinates_in(const FieldTower& target) const;

  /// Signed terms (squarefree radicand, coefficient), radicand ascending;
  /// radicand 1 is the rational part.  This is the canonical form printed.
  std::vector<std::pair<std::int64_t, Rat>> terms() const;

  RealAlg inverse() const;

  /// Sign under the real embedding with every sqrt(d_i) > 0.
  int sign() const;

  std::string str() const;

  RealAlg operator-() const;
  RealAlg& operator+=(const RealAlg& o);
  RealAlg& operator-=(const RealAlg& o);
  RealAlg& operator*=(const RealAlg& o);
  RealAlg& operator/=(const RealAlg& o);

  friend RealAlg operator+(RealAlg a, const RealAlg& b) { return a += b; }
  friend RealAlg operator-(RealAlg a, const RealAlg& b) { return a -= b; }
  friend RealAlg operator*(RealAlg a, const RealAlg& b) { return a *= b; }
  friend RealAlg operator/(RealAlg a, const RealAlg& b) { return a /= b; }
  friend bool operator==(const RealAlg& a, const RealAlg& b);

 private:
  void trim();

  FieldTower tower_;
  std::vector<Rat> coords_;
};

/// Smallest tower containing every value in `xs`.
FieldTower common_tower(std::span<const RealAlg> xs);

/// Complex scalar re + i*im with re and im in one tower.
class CScalar {
 public:
  CScalar() = default;
  CScalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  CScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  CScalar(const Rat& q) : re_(q) {}  // NOLINT(google-explicit-constructor)
  CScalar(const RealAlg& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  CScalar(RealAlg re, RealAlg im);

  static CScalar i() { return {RealAlg(0), RealAlg(1)}; }

  const RealAlg& re() const { return re_; }
  const RealAlg& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  CScalar conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  RealAlg norm2() const { return re_ * re_ + im_ * im_; }
  CScalar inverse() const;

  std::string str() const;

  CScalar operator-() const { return {-re_, -im_}; }
  CScalar& operator+=(const CScalar& o);
  CScalar& operator-=(const CScalar& o);
  CScalar& operator*=(const CScalar& o);
  CScalar& operator/=(const CScalar& o);

  friend CScalar operator+(CScalar a, const CScalar& b) { return a += b; }
  friend CScalar operator-(CScalar a, const CScalar& b) { return a -= b; }
  friend CScalar operator*(CScalar a, const CScalar& b) { return a *= b; }
  friend CScalar operator/(CScalar a, const CScalar& b) { return a /= b; }
  friend bool operator==(const CScalar& a, const CScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  void align();

  RealAlg re_;
  RealAlg im_;
};

// Uniform helpers used by the generic linear algebra.
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const RealAlg& x) { return x.is_zero(); }
inline bool is_zero(const CScalar& x) { return x.is_zero(); }

inline Rat inverse(const Rat& x) {
  if (sgn(x) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
  return Rat(1) / x;
}
inline RealAlg inverse(const RealAlg& x) { return x.inverse(); }
inline CScalar inverse(const CScalar& x) { return x.inverse(); }

inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const RealAlg& x) { return x.str(); }
inline std::string to_string(const CScalar& x) { return x.str(); }

/// Parse a rational per the grammar '-'? digits ('/' digits)?.
Rat parse_rat(std::string_view text);

/// Initial bit precision of the interval refinement in RealAlg::sign, read
/// once from NILALG_PRECISION_START (default 64).
unsigned sign_precision_start();

}  // namespace nilalg
