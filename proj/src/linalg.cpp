#include "singpoly/linalg.hpp"

namespace singpoly {

namespace {

std::vector<Integer> clear_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  Integer g = 0;
  for (const auto& q : row) {
    Integer v = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

} // namespace

Echelon<Rational> rational_kernel(const Matrix<Rational>& a, int ncols) {
  std::vector<std::vector<Integer>> m;
  m.reserve(a.size());
  for (const auto& row : a) {
    bool nz = false;
    for (const auto& q : row)
      if (sgn(q) != 0) {
        nz = true;
        break;
      }
    if (nz) m.push_back(clear_row(row));
  }
  const std::size_t nrows = m.size();
  const std::size_t nc = static_cast<std::size_t>(ncols);
  std::vector<int> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nrows; ++c) {
    std::size_t p = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p == nrows) continue;
    std::swap(m[p], m[r]);
    const Integer piv = m[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const Integer f = m[i][c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer v = piv * m[i][j] - f * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  // back substitution over Q on the echelon rows
  Matrix<Rational> ech(r, std::vector<Rational>(nc));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < nc; ++j) ech[i][j] = Rational(m[i][j]);
  Echelon<Rational> red = rref(std::move(ech), ncols);

  std::vector<char> is_pivot(nc, 0);
  for (int p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  Matrix<Rational> kernel;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(nc);
    v[f] = 1;
    for (std::size_t i = 0; i < red.rows.size(); ++i)
      v[static_cast<std::size_t>(red.pivots[i])] = -red.rows[i][f];
    kernel.push_back(std::move(v));
  }
  return rref(std::move(kernel), ncols);
}

bool reduces_to_zero(const Echelon<Rational>& basis, std::vector<Rational> v) {
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    const std::size_t p = static_cast<std::size_t>(basis.pivots[i]);
    if (sgn(v[p]) == 0) continue;
    Rational f = v[p];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(basis.rows[i][j]) != 0) v[j] -= f * basis.rows[i][j];
  }
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

} // namespace singpoly
