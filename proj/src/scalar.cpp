#include "nilalg/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace nilalg {

namespace {

// d = s^2 * q with q squarefree.
std::pair<std::int64_t, std::int64_t> square_split(std::int64_t d) {
  std::int64_t s = 1, q = 1;
  for (std::int64_t p = 2; p <= d / p; ++p) {
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2) q *= p;
  }
  q *= d;
  return {s, q};
}

bool is_squarefree(std::int64_t d) { return square_split(d).first == 1; }

// Product of two coordinate vectors in a fixed tower.
std::vector<Rat> mul_in(const FieldTower& t, const std::vector<Rat>& a,
                        const std::vector<Rat>& b) {
  const std::size_t n = t.degree();
  std::vector<Int> prod(n);
  for (unsigned m = 0; m < n; ++m) prod[m] = t.basis_product(m);
  std::vector<Rat> out(n);
  for (unsigned s = 0; s < n; ++s) {
    if (sgn(a[s]) == 0) continue;
    for (unsigned u = 0; u < n; ++u) {
      if (sgn(b[u]) == 0) continue;
      Rat term = a[s] * b[u];
      if (s & u) term *= prod[s & u];
      out[s ^ u] += term;
    }
  }
  return out;
}

// Solve a small dense rational system; the matrix must be invertible.
std::vector<Rat> solve_small(std::vector<std::vector<Rat>> m,
                             std::vector<Rat> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    const Rat inv = Rat(1) / m[c][c];
    for (std::size_t k = c; k < n; ++k) m[c][k] *= inv;
    rhs[c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rat f = m[r][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  return rhs;
}

}  // namespace

// ---------------------------------------------------------------- FieldTower

FieldTower FieldTower::from_radicands(std::vector<std::int64_t> radicands) {
  FieldTower t;
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    const std::int64_t d = radicands[i];
    if (d < 2 || !is_squarefree(d))
      throw Error(ErrorKind::Parameter,
                  "radicand " + std::to_string(d) + " is not squarefree >= 2");
    if (i > 0 && d <= radicands[i - 1])
      throw Error(ErrorKind::Parameter, "radicands must strictly increase");
    if (t.locate_sqrt(d))
      throw Error(ErrorKind::Parameter,
                  "radicand " + std::to_string(d) +
                      " is dependent on the preceding radicands");
    if (t.radicands_.size() == kMaxRadicands)
      throw Error(ErrorKind::TowerOverflow,
                  "field tower exceeds " + std::to_string(kMaxRadicands) +
                      " radicands");
    t.radicands_.push_back(d);
  }
  return t;
}

FieldTower FieldTower::unite(const FieldTower& a, const FieldTower& b) {
  if (a == b || b.is_rational()) return a;
  if (a.is_rational()) return b;
  std::vector<std::int64_t> all = a.radicands_;
  all.insert(all.end(), b.radicands_.begin(), b.radicands_.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  FieldTower t;
  for (std::int64_t d : all) {
    if (t.locate_sqrt(d)) continue;
    if (t.radicands_.size() == kMaxRadicands)
      throw Error(ErrorKind::TowerOverflow,
                  "no common field tower within " +
                      std::to_string(kMaxRadicands) + " radicands");
    t.radicands_.push_back(d);
  }
  return t;
}

Int FieldTower::basis_product(unsigned mask) const {
  Int p = 1;
  for (std::size_t i = 0; i < radicands_.size(); ++i)
    if (mask & (1u << i)) p *= static_cast<long>(radicands_[i]);
  return p;
}

std::optional<std::pair<unsigned, Rat>> FieldTower::locate_sqrt(
    std::int64_t d) const {
  const Int dd = static_cast<long>(d);
  for (unsigned m = 0; m < degree(); ++m) {
    const Int p = basis_product(m);
    const Int sq = dd * p;
    if (mpz_perfect_square_p(sq.get_mpz_t())) {
      Int k;
      mpz_sqrt(k.get_mpz_t(), sq.get_mpz_t());
      Rat f(k, p);
      f.canonicalize();
      return std::make_pair(m, f);
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------------- RealAlg

RealAlg::RealAlg(FieldTower tower, std::vector<Rat> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  if (coords_.size() != tower_.degree())
    throw Error(ErrorKind::Shape, "coordinate count does not match tower");
  for (auto& c : coords_) c.canonicalize();
}

RealAlg RealAlg::sqrt_of(std::int64_t d) {
  if (d < 0) throw Error(ErrorKind::Parameter, "sqrt of a negative integer");
  if (d == 0) return RealAlg();
  const auto [s, q] = square_split(d);
  if (q == 1) return RealAlg(Rat(static_cast<long>(s)));
  return RealAlg(FieldTower::from_radicands({q}),
                 {Rat(0), Rat(static_cast<long>(s))});
}

bool RealAlg::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rat& c) { return sgn(c) == 0; });
}

bool RealAlg::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rat& c) { return sgn(c) == 0; });
}

std::optional<Rat> RealAlg::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coords_[0];
}

RealAlg RealAlg::embed(const FieldTower& target) const {
  if (tower_ == target) return *this;
  std::vector<std::vector<Rat>> images;
  for (std::int64_t d : tower_.radicands()) {
    auto loc = target.locate_sqrt(d);
    if (!loc)
      throw Error(ErrorKind::TowerOverflow,
                  "sqrt(" + std::to_string(d) + ") is not in the target tower");
    std::vector<Rat> img(target.degree());
    img[loc->first] = loc->second;
    images.push_back(std::move(img));
  }
  std::vector<Rat> out(target.degree());
  for (unsigned m = 0; m < tower_.degree(); ++m) {
    if (sgn(coords_[m]) == 0) continue;
    std::vector<Rat> b(target.degree());
    b[0] = coords_[m];
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m & (1u << i)) b = mul_in(target, b, images[i]);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  }
  return RealAlg(target, std::move(out));
}

std::vector<Rat> RealAlg::coordinates_in(const FieldTower& target) const {
  return embed(target).coords_;
}

void RealAlg::trim() {
  for (std::size_t i = tower_.size(); i-- > 0;) {
    const unsigned bit = 1u << i;
    bool used = false;
    for (unsigned m = 0; m < coords_.size() && !used; ++m)
      used = (m & bit) && sgn(coords_[m]) != 0;
    if (used) continue;
    // Drop radicand i: keep masks without bit i, squeezing bit i out.
    std::vector<Rat> kept(coords_.size() / 2);
    for (unsigned m = 0; m < coords_.size(); ++m) {
      if (m & bit) continue;
      const unsigned low = m & (bit - 1);
      const unsigned high = (m >> (i + 1)) << i;
      kept[low | high] = coords_[m];
    }
    std::vector<std::int64_t> rs = tower_.radicands();
    rs.erase(rs.begin() + static_cast<std::ptrdiff_t>(i));
    // Subsets of an independent set stay independent.
    tower_ = FieldTower::from_radicands(std::move(rs));
    coords_ = std::move(kept);
  }
}

std::vector<std::pair<std::int64_t, Rat>> RealAlg::terms() const {
  std::vector<std::pair<std::int64_t, Rat>> out;
  for (unsigned m = 0; m < coords_.size(); ++m) {
    if (sgn(coords_[m]) == 0) continue;
    const auto [s, q] = square_split(tower_.basis_product(m).get_si());
    out.emplace_back(q, coords_[m] * Rat(static_cast<long>(s)));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

RealAlg RealAlg::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
  if (tower_.is_rational()) return RealAlg(Rat(1) / coords_[0]);
  // Multiplication by x is Q-linear on the field; solve x * v = 1.
  const std::size_t n = tower_.degree();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (unsigned c = 0; c < n; ++c) {
    std::vector<Rat> e(n);
    e[c] = 1;
    const auto col = mul_in(tower_, coords_, e);
    for (std::size_t r = 0; r < n; ++r) m[r][c] = col[r];
  }
  std::vector<Rat> rhs(n);
  rhs[0] = 1;
  RealAlg out(tower_, solve_small(std::move(m), std::move(rhs)));
  out.trim();
  return out;
}

int RealAlg::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coords_[0]);
  unsigned bits = sign_precision_start();
  const std::size_t m = tower_.size();
  for (;;) {
    // Rational enclosures lo_i <= sqrt(d_i) <= hi_i of width 2^-bits.
    const Int scale = Int(1) << bits;
    std::vector<Rat> lo(m), hi(m);
    for (std::size_t i = 0; i < m; ++i) {
      Int s = Int(static_cast<long>(tower_.radicands()[i])) * scale * scale;
      Int r;
      mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
      lo[i] = Rat(r, scale);
      hi[i] = Rat(r + 1, scale);
      lo[i].canonicalize();
      hi[i].canonicalize();
    }
    Rat sum_lo = 0, sum_hi = 0;
    for (unsigned mask = 0; mask < coords_.size(); ++mask) {
      const Rat& c = coords_[mask];
      if (sgn(c) == 0) continue;
      Rat blo = 1, bhi = 1;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) {
          blo *= lo[i];
          bhi *= hi[i];
        }
      if (sgn(c) > 0) {
        sum_lo += c * blo;
        sum_hi += c * bhi;
      } else {
        sum_lo += c * bhi;
        sum_hi += c * blo;
      }
    }
    if (sgn(sum_lo) > 0) return 1;
    if (sgn(sum_hi) < 0) return -1;
    bits *= 2;
  }
}

std::string RealAlg::str() const {
  const auto ts = terms();
  if (ts.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const auto& [q, c] = ts[k];
    if (k > 0) out += sgn(c) < 0 ? "-" : "+";
    const Rat shown = k > 0 ? Rat(abs(c)) : c;
    out += shown.get_str();
    if (q > 1) out += "*r" + std::to_string(q);
  }
  return out;
}

RealAlg RealAlg::operator-() const {
  RealAlg out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

RealAlg& RealAlg::operator+=(const RealAlg& o) {
  if (tower_ == o.tower_) {
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  } else {
    const FieldTower t = FieldTower::unite(tower_, o.tower_);
    *this = embed(t);
    const auto oc = o.coordinates_in(t);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += oc[k];
  }
  trim();
  return *this;
}

RealAlg& RealAlg::operator-=(const RealAlg& o) { return *this += -o; }

RealAlg& RealAlg::operator*=(const RealAlg& o) {
  if (tower_.is_rational() && o.tower_.is_rational()) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  const FieldTower t = FieldTower::unite(tower_, o.tower_);
  coords_ = mul_in(t, coordinates_in(t), o.coordinates_in(t));
  tower_ = t;
  trim();
  return *this;
}

RealAlg& RealAlg::operator/=(const RealAlg& o) { return *this *= o.inverse(); }

bool operator==(const RealAlg& a, const RealAlg& b) {
  if (a.tower_ == b.tower_) return a.coords_ == b.coords_;
  return (a - b).is_zero();
}

FieldTower common_tower(std::span<const RealAlg> xs) {
  FieldTower t;
  for (const auto& x : xs) t = FieldTower::unite(t, x.tower());
  return t;
}

// ------------------------------------------------------------------- CScalar

CScalar::CScalar(RealAlg re, RealAlg im)
    : re_(std::move(re)), im_(std::move(im)) {
  align();
}

void CScalar::align() {
  if (re_.tower() == im_.tower()) return;
  const FieldTower t = FieldTower::unite(re_.tower(), im_.tower());
  re_ = re_.embed(t);
  im_ = im_.embed(t);
}

CScalar CScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
  const RealAlg inv = norm2().inverse();
  return {re_ * inv, -(im_ * inv)};
}

std::string CScalar::str() const {
  if (im_.is_zero()) return re_.str();
  return "(" + re_.str() + ")+i*(" + im_.str() + ")";
}

CScalar& CScalar::operator+=(const CScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  align();
  return *this;
}

CScalar& CScalar::operator-=(const CScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  align();
  return *this;
}

CScalar& CScalar::operator*=(const CScalar& o) {
  RealAlg re = re_ * o.re_ - im_ * o.im_;
  RealAlg im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  align();
  return *this;
}

CScalar& CScalar::operator/=(const CScalar& o) { return *this *= o.inverse(); }

// ------------------------------------------------------------------- parsing

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "scalar '" + std::string(s) + "' at column " +
                                      std::to_string(pos + 1) + ": " + msg);
  }
  std::string_view digits() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail("expected digits");
    return s.substr(start, pos - start);
  }
};

Rat read_rat(Cursor& cur) {
  const bool neg = cur.eat('-');
  Int num(std::string(cur.digits()));
  Int den = 1;
  if (cur.eat('/')) {
    den = Int(std::string(cur.digits()));
    if (den == 0) cur.fail("zero denominator");
  }
  Rat q(num, den);
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  Cursor cur{text};
  Rat q = read_rat(cur);
  if (!cur.done()) cur.fail("trailing characters");
  return q;
}

RealAlg RealAlg::parse(std::string_view text) {
  Cursor cur{text};
  if (cur.done()) cur.fail("empty scalar");
  RealAlg total;
  bool first = true;
  while (true) {
    int op = 1;
    if (!first) {
      if (cur.eat('+')) op = 1;
      else if (cur.eat('-')) op = -1;
      else cur.fail("expected '+' or '-'");
    }
    first = false;
    Rat coef = read_rat(cur);
    RealAlg term(coef);
    if (cur.eat('*')) {
      if (!cur.eat('r')) cur.fail("expected 'r' after '*'");
      const std::string_view ds = cur.digits();
      std::int64_t d = 0;
      const auto [p, ec] = std::from_chars(ds.data(), ds.data() + ds.size(), d);
      if (ec != std::errc() || p != ds.data() + ds.size())
        cur.fail("radicand out of range");
      term *= sqrt_of(d);
    }
    if (op < 0) total -= term;
    else total += term;
    if (cur.done()) break;
  }
  return total;
}

unsigned sign_precision_start() {
  static const unsigned bits = [] {
    const char* env = std::getenv("NILALG_PRECISION_START");
    if (!env) return 64u;
    const long v = std::strtol(env, nullptr, 10);
    return v > 0 ? static_cast<unsigned>(v) : 64u;
  }();
  return bits;
}

}  // namespace nilalg
