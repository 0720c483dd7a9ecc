#ifndef SINGPOLY_LINALG_HPP
#define SINGPOLY_LINALG_HPP

#include "singpoly/kappa.hpp"

#include <optional>
#include <vector>

namespace singpoly {

template <class C> using Matrix = std::vector<std::vector<C>>;

template <class C> struct Echelon {
  Matrix<C> rows;          // nonzero rows of the reduced echelon form
  std::vector<int> pivots; // pivot column of each row
};

// Reduced row echelon form over a field, first-nonzero pivoting.
template <class C> Echelon<C> rref(Matrix<C> a, int ncols) {
  Echelon<C> e;
  int r = 0;
  const int nrows = static_cast<int>(a.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if (!FieldTraits<C>::zero(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
    auto& pr = a[static_cast<std::size_t>(r)];
    C inv = FieldTraits<C>::from_int(1) / pr[static_cast<std::size_t>(c)];
    for (int j = c; j < ncols; ++j) pr[static_cast<std::size_t>(j)] *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      auto& row = a[static_cast<std::size_t>(i)];
      C f = row[static_cast<std::size_t>(c)];
      if (FieldTraits<C>::zero(f)) continue;
      for (int j = c; j < ncols; ++j) {
        const C& v = pr[static_cast<std::size_t>(j)];
        if (!FieldTraits<C>::zero(v)) row[static_cast<std::size_t>(j)] -= f * v;
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(static_cast<std::size_t>(r));
  e.rows = std::move(a);
  return e;
}

template <class C> int matrix_rank(const Matrix<C>& a, int ncols) {
  return static_cast<int>(rref(a, ncols).pivots.size());
}

// Solves Σ x_k v_k = target for vectors given as the columns list; returns
// nullopt when target is outside the span. Free variables are set to zero.
template <class C>
std::optional<std::vector<C>> solve_in_span(const std::vector<std::vector<C>>& vectors, const std::vector<C>& target) {
  const std::size_t k = vectors.size();
  const std::size_t dim = target.size();
  Matrix<C> aug(dim, std::vector<C>(k + 1, FieldTraits<C>::from_int(0)));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = vectors[c][r];
    aug[r][k] = target[r];
  }
  Echelon<C> e = rref(std::move(aug), static_cast<int>(k + 1));
  std::vector<C> x(k, FieldTraits<C>::from_int(0));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    int p = e.pivots[r];
    if (p == static_cast<int>(k)) return std::nullopt;
    x[static_cast<std::size_t>(p)] = e.rows[r][k];
  }
  return x;
}

// Inverse of a square matrix over a field; nullopt if singular.
template <class C> std::optional<Matrix<C>> inverse(const Matrix<C>& a) {
  const std::size_t n = a.size();
  Matrix<C> aug(n, std::vector<C>(2 * n, FieldTraits<C>::from_int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = FieldTraits<C>::from_int(1);
  }
  Echelon<C> e = rref(std::move(aug), static_cast<int>(2 * n));
  if (e.rows.size() < n || e.pivots[n - 1] != static_cast<int>(n - 1)) return std::nullopt;
  Matrix<C> inv(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

// Kernel of a rational matrix: denominators are cleared row by row, the
// integer matrix is reduced by fraction-free (Bareiss) elimination, and the
// kernel basis is returned in reduced row echelon form.
Echelon<Rational> rational_kernel(const Matrix<Rational>& a, int ncols);

// Reduces v against reduced echelon rows; true if it becomes zero.
bool reduces_to_zero(const Echelon<Rational>& basis, std::vector<Rational> v);

} // namespace singpoly

#endif
