#include "nilalg/linalg.hpp"

namespace nilalg {

namespace {

// Unimodular row reduction of `rows` over the columns [0, ncols); returns the
// number of pivot rows, which end up first and in echelon order.
std::size_t echelonize(std::vector<Vec<Int>>& rows, std::size_t ncols,
                       bool reduce_above) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
        if (sgn(rows[i][c]) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= rows.size() || sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (auto& x : rows[r]) x = -x;
    if (reduce_above) {
      for (std::size_t i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        if (sgn(q) == 0) continue;
        for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

IntLattice hermite_normal_form(std::size_t n, std::vector<Vec<Int>> rows) {
  for (const auto& row : rows)
    if (row.size() != n) throw Error(ErrorKind::Dimension, "lattice generator has wrong length");
  const std::size_t r = echelonize(rows, n, true);
  rows.resize(r);
  return IntLattice{n, std::move(rows)};
}

IntLattice integer_kernel(const Mat<Rat>& m) {
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  // Integer rows: scale each constraint by the lcm of its denominators.
  std::vector<Vec<Int>> a(k, Vec<Int>(n));
  for (std::size_t i = 0; i < k; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = m(i, j) * Rat(l);
      a[i][j] = scaled.get_num();
    }
  }
  // Rows [A^T | I]; unimodular elimination on the first k columns leaves the
  // kernel in the identity part of the rows that became zero there.
  std::vector<Vec<Int>> rows(n, Vec<Int>(k + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = a[j][i];
    rows[i][k + i] = 1;
  }
  const std::size_t r = echelonize(rows, k, false);
  std::vector<Vec<Int>> ker;
  for (std::size_t i = r; i < n; ++i)
    ker.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(k), rows[i].end());
  return hermite_normal_form(n, std::move(ker));
}

}  // namespace nilalg
