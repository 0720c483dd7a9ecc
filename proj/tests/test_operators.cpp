#include <doctest.h>

#include "support.hpp"

using namespace singpoly;
using testing_support::Gen;

namespace {

KPoly mono(const std::vector<int>& e, KappaRatio c = 1) {
  return KPoly::monomial(static_cast<int>(e.size()), make_mono(e), std::move(c));
}
const KappaRatio kap = KappaRatio::kappa();

KPoly transposed_sum(int m, int N, const KPoly& f) {
  KPoly out = f.zero_like();
  for (int j = 1; j <= N; ++j)
    if (j != m) out += swap_vars(j, m, f);
  return out;
}

} // namespace

TEST_CASE("Dunkl operator examples") {
  const auto ctx = OperatorContext::generic(2);
  CHECK(dunkl(ctx, 1, mono({1, 0})) == mono({0, 0}, 1 + kap));
  CHECK(dunkl(ctx, 1, mono({0, 1})) == mono({0, 0}, -kap));
  CHECK(dunkl(ctx, 2, mono({0, 0}, 7)).is_zero());
  CHECK_THROWS_AS(dunkl(ctx, 3, mono({1, 0})), IndexOutOfRange);
  CHECK_THROWS_AS(dunkl(ctx, 0, mono({1, 0})), IndexOutOfRange);
}

TEST_CASE("Dunkl operator agrees with the division oracle and lowers degree") {
  Gen g(31);
  for (int t = 0; t < 40; ++t) {
    const int N = g.uniform(1, 4);
    const auto ctx = OperatorContext::generic(N);
    const Composition a = g.composition(N, g.uniform(1, 5));
    const KPoly f = mono(a.parts(), g.kappa_ratio() + 1) + g.kpoly(N, 4, 3);
    for (int i = 1; i <= N; ++i) {
      CHECK(dunkl(ctx, i, f) == testing_support::dunkl_by_division(i, f, kap));
      const KPoly h = dunkl(ctx, i, mono(a.parts()));
      CHECK((h.is_zero() || (h.is_homogeneous() && h.degree() == a.degree() - 1)));
    }
  }
}

TEST_CASE("Cherednik operator examples") {
  const auto ctx = OperatorContext::generic(2);
  CHECK(cherednik(ctx, 1, mono({0, 0})) == mono({0, 0}, 1 + kap));
  CHECK(cherednik(ctx, 1, mono({0, 1})) == mono({0, 1}));
  CHECK_THROWS_AS(cherednik(ctx, 3, mono({0, 1})), IndexOutOfRange);
}

TEST_CASE("Cherednik operator is triangular with the spectral vector on the diagonal") {
  for (int N = 1; N <= 4; ++N)
    for (int d = 0; d <= 5; ++d)
      for (const auto& a : compositions_of(d, N)) {
        const auto ctx = OperatorContext::generic(N);
        const auto xi = spectral_vector(a);
        for (int i = 1; i <= N; ++i) {
          const KPoly u = cherednik(ctx, i, mono(a.parts()));
          CHECK(u.coeff(make_mono(a)) == KappaRatio(xi[static_cast<std::size_t>(i - 1)].value()));
          for (const auto& [m, c] : u.terms()) {
            const Composition b(mono_exps(m, N), N);
            if (b == a) continue;
            CHECK(triangle_above(a, b));
            CHECK((c == kap || c == -kap));
          }
          // the table-driven form agrees term by term
          KPoly table(N);
          for (const auto& term : cherednik_on_monomial(make_mono(a), N, i))
            table.add_term(term.mono, KappaRatio(term.a) + KappaRatio(term.b) * kap);
          CHECK(table == u);
        }
      }
}

TEST_CASE("operator commutativity on seeded random polynomials") {
  Gen g(32);
  for (int t = 0; t < 25; ++t) {
    const int N = g.uniform(2, 4);
    const auto ctx = OperatorContext::generic(N);
    const KPoly f = g.kpoly(N, 5, 3);
    const int i = g.uniform(1, N), j = g.uniform(1, N);
    CHECK(dunkl(ctx, i, dunkl(ctx, j, f)) == dunkl(ctx, j, dunkl(ctx, i, f)));
    CHECK(cherednik(ctx, i, cherednik(ctx, j, f)) == cherednik(ctx, j, cherednik(ctx, i, f)));
  }
}

TEST_CASE("commutation relations with multiplication by a variable") {
  Gen g(33);
  for (int t = 0; t < 25; ++t) {
    const int N = g.uniform(2, 4);
    const auto ctx = OperatorContext::generic(N);
    const KPoly f = g.kpoly(N, 4, 3);
    const int m = g.uniform(1, N);
    KPoly lhs = multiply_var(m, dunkl(ctx, m, f)) - dunkl(ctx, m, multiply_var(m, f));
    KPoly rhs = -f;
    rhs.add_scaled(transposed_sum(m, N, f), -kap);
    CHECK(lhs == rhs);
    for (int j = 1; j <= N; ++j) {
      if (j == m) continue;
      KPoly l2 = multiply_var(j, dunkl(ctx, m, f)) - dunkl(ctx, m, multiply_var(j, f));
      CHECK(l2 == scaled(swap_vars(j, m, f), kap));
    }
  }
}

TEST_CASE("equivariance w D_i = D_{w(i)} w") {
  Gen g(34);
  for (int t = 0; t < 25; ++t) {
    const int N = g.uniform(2, 4);
    std::vector<int> v(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) v[static_cast<std::size_t>(k)] = k;
    for (int k = N - 1; k > 0; --k) std::swap(v[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(g.uniform(0, k))]);
    const Perm w(v);
    const auto ctx = OperatorContext::generic(N);
    const KPoly f = g.kpoly(N, 4, 3);
    const int i = g.uniform(1, N);
    CHECK(apply_perm(w, dunkl(ctx, i, f)) == dunkl(ctx, w(i), apply_perm(w, f)));
  }
}

TEST_CASE("central element and Euler identity") {
  const auto ctx = OperatorContext::generic(2);
  const KPoly alt = mono({1, 0}) - mono({0, 1});
  CHECK(omega_central(ctx, alt) == scaled(alt, KappaRatio(2)));
  const KPoly sym = mono({2, 1}) + mono({1, 2});
  CHECK(omega_central(ctx, sym).is_zero());
  Gen g(35);
  for (int t = 0; t < 50; ++t) {
    const int N = g.uniform(1, 4);
    CHECK(euler_identity_check(OperatorContext::generic(N), g.kpoly(N, 4, 4)));
    const Rational k0 = g.rational();
    CHECK(euler_identity_check(OperatorContext::at(N, k0), g.qpoly(N, 4, 4, k0)));
  }
}

TEST_CASE("Murphy elements") {
  const auto ctx = OperatorContext::generic(3);
  const KPoly f = mono({2, 1, 0});
  CHECK(murphy(ctx, 1, f).is_zero());
  CHECK(murphy(ctx, 2, f) == swap_vars(2, 3, f));
  CHECK(murphy(ctx, 3, f) == swap_vars(1, 2, f) + swap_vars(1, 3, f));
  CHECK_THROWS_AS(murphy(ctx, 4, f), IndexOutOfRange);
}

TEST_CASE("operators commute with specialization") {
  Gen g(36);
  for (int t = 0; t < 25; ++t) {
    const int N = g.uniform(1, 4);
    const KPoly f = g.kpoly(N, 4, 3);
    Rational at(g.uniform(1, 5), g.uniform(1, 3));
    at.canonicalize();
    const auto gen = OperatorContext::generic(N);
    const auto spec = OperatorContext::at(N, at);
    const int i = g.uniform(1, N);
    CHECK(specialize(dunkl(gen, i, f), at) == dunkl(spec, i, specialize(f, at)));
    CHECK(specialize(cherednik(gen, i, f), at) == cherednik(spec, i, specialize(f, at)));
  }
}

TEST_CASE("field tag mismatches are rejected") {
  const KPoly f = mono({1, 0});
  CHECK_THROWS_AS(dunkl(OperatorContext::at(2, Rational(1)), 1, f), FieldMismatch);
  CHECK_THROWS_AS(dunkl(OperatorContext::generic(3), 1, f), AmbientMismatch);
}
