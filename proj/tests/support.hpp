#pragma once

#include "singpoly/jack.hpp"
#include "singpoly/linalg.hpp"
#include "singpoly/operators.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using namespace singpoly;

// Seed shared by all property tests; SINGPOLY_SEED overrides the default and
// the value in use is printed once by the test main.
std::uint64_t seed();

class Gen {
public:
  explicit Gen(std::uint64_t salt) : rng_(seed() ^ (salt * 0x9E3779B97F4A7C15ULL)) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 5) {
    int num = uniform(-span, span);
    int den = uniform(1, span);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  KappaRatio kappa_ratio() {
    // small affine numerator over a small affine or constant denominator
    KappaPoly num = KappaPoly::affine(uniform(-2, 2), uniform(-3, 3));
    if (uniform(0, 2) == 0) return KappaRatio(num);
    KappaPoly den = KappaPoly::affine(uniform(1, 2), uniform(1, 3));
    return KappaRatio(num, den);
  }

  Composition composition(int N, int degree) {
    std::vector<int> v(static_cast<std::size_t>(N), 0);
    for (int k = 0; k < degree; ++k) ++v[static_cast<std::size_t>(uniform(0, N - 1))];
    return Composition(v, N);
  }

  KPoly kpoly(int N, int max_degree, int terms) {
    KPoly f(N);
    for (int t = 0; t < terms; ++t) f.add_term(make_mono(composition(N, uniform(0, max_degree))), kappa_ratio());
    return f;
  }

  QPoly qpoly(int N, int max_degree, int terms, const Rational& k0) {
    QPoly f(N, k0);
    for (int t = 0; t < terms; ++t) f.add_term(make_mono(composition(N, uniform(0, max_degree))), rational());
    return f;
  }

private:
  std::mt19937_64 rng_;
};

// ---- independent oracles -------------------------------------------------

// D_i from the definition, with the divided difference computed by exact
// polynomial division.
template <class C> Poly<C> dunkl_by_division(int i, const Poly<C>& f, const C& kappa) {
  Poly<C> out = partial(i, f);
  for (int j = 1; j <= f.ambient(); ++j)
    if (j != i) out.add_scaled(divided_difference(i, j, f), kappa);
  return out;
}

// Rank as the position in a stable sort by decreasing value.
inline std::vector<int> rank_by_sort(const Composition& a) {
  std::vector<int> idx(static_cast<std::size_t>(a.ambient()));
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return a[x] > a[y]; });
  std::vector<int> r(idx.size());
  for (std::size_t pos = 0; pos < idx.size(); ++pos) r[static_cast<std::size_t>(idx[pos])] = static_cast<int>(pos + 1);
  return r;
}

// ζ^x_α at a numeric κ: the joint kernel of (U_i - ξ_i(α)) on all monomials
// of degree |α|, normalized at x^α. Returns nullopt unless the kernel is
// one-dimensional.
std::optional<QPoly> zeta_x_by_kernel(const Composition& alpha, const Rational& kappa);

// p_α at a positive integer κ from the truncated series of
// ∏_i (1 - x_i y_i)^{-1} ∏_{i,j} (1 - x_i y_j)^{-κ}.
QPoly p_basis_by_series(const Composition& alpha, int kappa);

// Hook product by cell enumeration with arm and leg counted directly.
KappaPoly hook_product_by_cells(const std::vector<int>& lambda, const KappaPoly& t);

} // namespace testing_support
