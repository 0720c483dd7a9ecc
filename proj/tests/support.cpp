#include "support.hpp"

#include <cstdlib>
#include <map>

namespace testing_support {

std::uint64_t seed() {
  static const std::uint64_t s = [] {
    if (const char* env = std::getenv("SINGPOLY_SEED")) return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
    return static_cast<std::uint64_t>(20240611);
  }();
  return s;
}

std::optional<QPoly> zeta_x_by_kernel(const Composition& alpha, const Rational& kappa) {
  const int N = alpha.ambient(), d = alpha.degree();
  const OperatorContext ctx = OperatorContext::at(N, kappa);
  const std::vector<Mono> monos = monomials_of_degree(N, d);
  std::map<Mono, std::size_t> col;
  for (std::size_t c = 0; c < monos.size(); ++c) col.emplace(monos[c], c);
  const auto xi = spectral_vector(alpha);
  Matrix<Rational> rows;
  for (int i = 1; i <= N; ++i) {
    Matrix<Rational> block(monos.size(), std::vector<Rational>(monos.size()));
    const Rational ev = Rational(xi[static_cast<std::size_t>(i - 1)].slope) * kappa + xi[static_cast<std::size_t>(i - 1)].intercept;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      QPoly img = cherednik(ctx, i, QPoly::monomial(N, monos[c], Rational(1), kappa));
      for (const auto& [m, v] : img.terms()) block[col.at(m)][c] += v;
      block[c][c] -= ev;
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  Echelon<Rational> k = rational_kernel(rows, static_cast<int>(monos.size()));
  if (k.rows.size() != 1) return std::nullopt;
  const Rational lead = k.rows[0][col.at(make_mono(alpha))];
  if (sgn(lead) == 0) return std::nullopt;
  QPoly f(N, kappa);
  for (std::size_t c = 0; c < monos.size(); ++c) f.add_term(monos[c], k.rows[0][c] / lead);
  return f;
}

QPoly p_basis_by_series(const Composition& alpha, int kappa) {
  const int N = alpha.ambient();
  // series in 2N variables: x_1..x_N, y_1..y_N; keep y-exponents <= alpha
  using Key = std::vector<int>;
  std::map<Key, Rational> series;
  series[Key(static_cast<std::size_t>(2 * N), 0)] = 1;
  auto binom_series = [&](int i, int j, int power) {
    // multiply series by (1 - x_i y_j)^{-power}
    const int cap = alpha[j];
    std::map<Key, Rational> out;
    for (const auto& [k, v] : series) {
      Rational c = 1;
      for (int t = 0; k[static_cast<std::size_t>(N + j)] + t <= cap; ++t) {
        if (t > 0) {
          Rational step(power + t - 1, t);
          step.canonicalize();
          c *= step;
        }
        Key nk = k;
        nk[static_cast<std::size_t>(i)] += t;
        nk[static_cast<std::size_t>(N + j)] += t;
        out[nk] += v * c;
      }
    }
    series = std::move(out);
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) binom_series(i, j, kappa + (i == j ? 1 : 0));
  QPoly f(N, Rational(kappa));
  for (const auto& [k, v] : series) {
    bool match = true;
    for (int j = 0; j < N; ++j)
      if (k[static_cast<std::size_t>(N + j)] != alpha[j]) match = false;
    if (!match) continue;
    f.add_term(make_mono(std::vector<int>(k.begin(), k.begin() + N)), v);
  }
  return f;
}

KappaPoly hook_product_by_cells(const std::vector<int>& lambda, const KappaPoly& t) {
  KappaPoly h(1);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) {
      int arm = lambda[i] - j;
      int leg = 0;
      for (std::size_t l = i + 1; l < lambda.size(); ++l)
        if (lambda[l] >= j) ++leg;
      h *= KappaPoly(arm) + t + KappaPoly::affine(leg, 0);
    }
  return h;
}

} // namespace testing_support
