#include "nilalg/liealg.hpp"

#include <bit>

namespace nilalg {

namespace {

void collect_subsets(std::size_t n, std::size_t k, std::size_t start, std::uint32_t mask,
                     std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i)
    collect_subsets(n, k - 1, i + 1, mask | std::uint32_t{1} << i, out);
}

void check_dim(std::size_t n) {
  if (n > kMaxLieDim)
    throw Error(ErrorKind::Dimension, "dimension " + std::to_string(n) + " exceeds the supported maximum " +
                                          std::to_string(kMaxLieDim));
}

}  // namespace

std::vector<std::uint32_t> k_subsets(std::size_t n, std::size_t k) {
  check_dim(n);
  std::vector<std::uint32_t> out;
  if (k <= n) collect_subsets(n, k, 0, 0, out);
  return out;
}

std::vector<int> subset_positions(std::size_t n, std::size_t k) {
  std::vector<int> pos(std::size_t{1} << n, -1);
  const auto masks = k_subsets(n, k);
  for (std::size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = static_cast<int>(i);
  return pos;
}

NilpotentLieAlgebra::NilpotentLieAlgebra(std::size_t n) : n_(n), c_(n * n * n) { check_dim(n); }

void NilpotentLieAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
  if (i >= n_ || j >= n_ || k >= n_) throw Error(ErrorKind::Dimension, "bracket index out of range");
  if (i == j) throw Error(ErrorKind::Validation, "[e_i, e_i] must vanish");
  c_[(i * n_ + j) * n_ + k] = c;
  c_[(j * n_ + i) * n_ + k] = -c;
}

void NilpotentLieAlgebra::set_dform_term(std::size_t k, std::size_t i, std::size_t j, const Rat& t) {
  set_bracket(i, j, k, -t);
}

bool NilpotentLieAlgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Vec<Rat> NilpotentLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec<Rat> v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
  return v;
}

Mat<Rat> NilpotentLieAlgebra::ad(std::size_t i) const {
  Mat<Rat> m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
  return m;
}

std::vector<NilpotentLieAlgebra::Entry> NilpotentLieAlgebra::entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (sgn(c(i, j, k)) != 0) out.push_back({i, j, k, c(i, j, k)});
  return out;
}

Mat<Rat> differential_matrix(const NilpotentLieAlgebra& g, std::size_t k) {
  const std::size_t n = g.dim();
  const auto cols = k_subsets(n, k);
  const auto rows = k_subsets(n, k + 1);
  const auto col_pos = subset_positions(n, k);
  Mat<Rat> d(rows.size(), cols.size());
  // (d a)(x_0..x_k) = sum_{a<b} (-1)^{a+b} a([x_a, x_b], x_0..^a..^b..x_k).
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (rows[r] >> i & 1u) idx.push_back(i);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const std::uint32_t rest = rows[r] & ~(std::uint32_t{1} << idx[a]) & ~(std::uint32_t{1} << idx[b]);
        const int sab = (a + b) % 2 ? -1 : 1;
        for (std::size_t m = 0; m < n; ++m) {
          const Rat& cm = g.c(idx[a], idx[b], m);
          if (sgn(cm) == 0 || (rest >> m & 1u)) continue;
          // Moving e_m from the front into sorted position.
          const int before = std::popcount(rest & ((std::uint32_t{1} << m) - 1));
          const int s = sab * (before % 2 ? -1 : 1);
          const int c = col_pos[rest | std::uint32_t{1} << m];
          d(r, static_cast<std::size_t>(c)) += s > 0 ? cm : Rat(-cm);
        }
      }
  }
  return d;
}

std::vector<Subspace<Rat>> lower_central_series(const NilpotentLieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Subspace<Rat>> series{Subspace<Rat>::full(n)};
  while (!series.back().is_zero()) {
    std::vector<Vec<Rat>> gens;
    for (const auto& v : series.back().vectors())
      for (std::size_t i = 0; i < n; ++i) gens.push_back(g.bracket(unit_vector<Rat>(n, i), v));
    auto next = Subspace<Rat>::span(n, gens);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subspace<Rat> derived_algebra(const NilpotentLieAlgebra& g) {
  std::vector<Vec<Rat>> gens;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) gens.push_back(g.bracket_basis(i, j));
  return Subspace<Rat>::span(g.dim(), gens);
}

ValidationReport validate(const NilpotentLieAlgebra& g) {
  ValidationReport rep;
  const std::size_t n = g.dim();
  auto e = [n](std::size_t i) { return unit_vector<Rat>(n, i); };
  for (std::size_t i = 0; i < n && !rep.jacobi_failure; ++i)
    for (std::size_t j = i + 1; j < n && !rep.jacobi_failure; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto s = g.bracket(g.bracket(e(i), e(j)), e(k));
        const auto t = g.bracket(g.bracket(e(j), e(k)), e(i));
        const auto u = g.bracket(g.bracket(e(k), e(i)), e(j));
        for (std::size_t m = 0; m < n; ++m) s[m] += t[m] + u[m];
        if (!is_zero_vector<Rat>(s)) {
          rep.jacobi_failure = std::array<std::size_t, 3>{i, j, k};
          break;
        }
      }
  if (rep.jacobi_failure) {
    rep.ok = false;
    return rep;
  }
  const auto series = lower_central_series(g);
  if (!series.back().is_zero()) {
    rep.ok = false;
    rep.nilpotent = false;
    rep.stabilized = series.back();
  } else {
    rep.step = series.size() - 1;
  }
  return rep;
}

std::vector<std::size_t> cohomology_dims(const NilpotentLieAlgebra& g, std::size_t max_degree) {
  const std::size_t n = g.dim();
  const std::size_t top = std::min(max_degree, n);
  // ranks[k] = rank of d on Lambda^k.
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t k = 0; k <= top && k < n; ++k) ranks[k] = rank(differential_matrix(g, k));
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t dim_k = k_subsets(n, k).size();
    betti.push_back(dim_k - ranks[k] - (k > 0 ? ranks[k - 1] : 0));
  }
  return betti;
}

bool is_subalgebra(const NilpotentLieAlgebra& g, const Subspace<RealAlg>& s) {
  const auto vs = s.vectors();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!s.contains(g.bracket(vs[a], vs[b]))) return false;
  return true;
}

bool is_ideal(const NilpotentLieAlgebra& g, const Subspace<RealAlg>& s) {
  for (const auto& v : s.vectors())
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!s.contains(g.bracket(unit_vector<RealAlg>(g.dim(), i), v))) return false;
  return true;
}

}  // namespace nilalg
