#include <doctest.h>

#include "support.hpp"

#include "singpoly/bigdiff.hpp"

#include <set>

using namespace singpoly;
using testing_support::Gen;

namespace {

Composition C(std::vector<int> v) { return Composition(std::move(v)); }
Composition C(std::vector<int> v, int N) { return Composition(std::move(v), N); }
Rational Q(long a, long b = 1) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}
const KappaPoly k = KappaPoly::kappa();

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Dominance of sorted parts, computed directly from partial sums.
bool dominates_sorted(const Composition& a, const Composition& b) {
  std::vector<int> x = a.parts(), y = b.parts();
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  x.resize(std::max(x.size(), y.size()));
  y.resize(x.size());
  int sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    if (sx < sy) return false;
  }
  return x != y;
}

// Brute-force critical pair test from the definition.
bool critical_by_definition(Composition a, Composition b, int m, int n) {
  const int M = std::max(a.ambient(), b.ambient());
  a = a.with_ambient(M);
  b = b.with_ambient(M);
  const bool above = dominates_sorted(a, b) || (a.sorted() == b.sorted() && a != b && [&] {
                       int sa = 0, sb = 0;
                       for (int i = 0; i < M; ++i) {
                         sa += a[i];
                         sb += b[i];
                         if (sa < sb) return false;
                       }
                       return true;
                     }());
  if (!above) return false;
  const auto ra = testing_support::rank_by_sort(a), rb = testing_support::rank_by_sort(b);
  for (int i = 0; i < M; ++i)
    if ((rb[i] - ra[i]) * m != (a[i] - b[i]) * n) return false;
  return true;
}

} // namespace

TEST_CASE("rank examples and error") {
  for (int i = 1; i <= 3; ++i) CHECK(rank(C({2, 1, 0}), i) == i);
  CHECK(ranks(C({0, 1, 0})) == std::vector<int>{2, 1, 3});
  CHECK(ranks(C({0, 1, 0}, 5)) == std::vector<int>{2, 1, 3, 4, 5});
  CHECK_THROWS_AS(rank(C({1, 0}), 3), IndexOutOfRange);
  CHECK_THROWS_AS(rank(C({1, 0}), 0), IndexOutOfRange);
}

TEST_CASE("rank agrees with a stable sort and detects partitions, N <= 5, |a| <= 6") {
  for (int N = 1; N <= 5; ++N)
    for (int d = 0; d <= 6; ++d)
      for (const auto& a : compositions_of(d, N)) {
        const auto r = ranks(a);
        REQUIRE(r == testing_support::rank_by_sort(a));
        bool identity = true;
        for (int i = 0; i < N; ++i) identity = identity && r[i] == i + 1;
        CHECK(identity == a.is_partition());
        // trailing zeros do not move ranks on [1,N]
        const auto padded = ranks(a.with_ambient(N + 2));
        CHECK(std::equal(r.begin(), r.end(), padded.begin()));
      }
}

TEST_CASE("spectral vector examples") {
  const auto s = spectral_vector(C({0, 1, 0}));
  CHECK(s == std::vector<SpectralEntry>{{1, 1}, {2, 2}, {0, 1}});
  CHECK(s[1].value() == KappaPoly::affine(2, 2));
  CHECK(spectral_vector(C({1, 0})) == std::vector<SpectralEntry>{{1, 2}, {0, 1}});
}

TEST_CASE("spectral vectors separate compositions of equal degree, N <= 4, |a| <= 5") {
  for (int N = 1; N <= 4; ++N)
    for (int d = 0; d <= 5; ++d) {
      std::set<std::vector<std::pair<int, int>>> seen;
      const auto all = compositions_of(d, N);
      for (const auto& a : all) {
        std::vector<std::pair<int, int>> key;
        for (const auto& e : spectral_vector(a)) key.emplace_back(e.slope, e.intercept);
        seen.insert(key);
      }
      CHECK(seen.size() == all.size());
    }
}

TEST_CASE("orders") {
  CHECK(compare(C({2, 0}), C({1, 1}), Order::dominance) == Cmp::greater);
  CHECK(compare(C({1, 1, 0}), C({0, 2, 0}), Order::triangle) == Cmp::less);
  CHECK(compare(C({2, 1, 0}), C({2, 1, 0}), Order::triangle) == Cmp::equal);
  CHECK(compare(C({2, 1, 0}), C({2, 1, 0}), Order::dominance) == Cmp::equal);
  CHECK_THROWS_AS(compare(C({2, 0}), C({1, 0}), Order::triangle), DegreeMismatch);
}

TEST_CASE("triangle order is a strict partial order refining sorted dominance") {
  for (int N = 2; N <= 4; ++N)
    for (int d = 1; d <= 4; ++d) {
      const auto all = compositions_of(d, N);
      for (const auto& a : all) {
        CHECK_FALSE(triangle_above(a, a));
        for (const auto& b : all) {
          if (triangle_above(a, b)) CHECK_FALSE(triangle_above(b, a));
          if (dominates_sorted(a, b)) CHECK(triangle_above(a, b));
          if (!triangle_above(a, b)) continue;
          for (const auto& c : all)
            if (triangle_above(b, c)) CHECK(triangle_above(a, c));
        }
      }
    }
}

TEST_CASE("tilde") {
  CHECK(tilde(C({2, 1, 3})) == C({2, 2, 1}));
  CHECK(tilde(C({1})) == C({0}));
  CHECK(tilde(C({4})) == C({3}));
  CHECK_THROWS_AS(tilde(C({0, 0})), ZeroComposition);
}

TEST_CASE("hook products") {
  CHECK(hook_product(C({2, 1}), HookParam::one) == KappaPoly::affine(1, 2));
  CHECK(hook_product(C({2, 1}), HookParam::kappa_plus_one) ==
        KappaPoly(2) * KappaPoly::affine(1, 1) * KappaPoly::affine(1, 1) * KappaPoly::affine(1, 1));
  for (int n = 1; n <= 6; ++n) CHECK(hook_product(C({n}), HookParam::one) == KappaPoly(factorial(n)));
  CHECK_THROWS_AS(hook_length(C({2, 1}), HookParam::one, 2, 2), NodeOutsideDiagram);
  CHECK_THROWS_AS(hook_length(C({2, 1}), HookParam::one, 3, 1), NodeOutsideDiagram);
}

TEST_CASE("hook products against cell enumeration and the hook-length formula") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : partitions_of(n, n)) {
      const Composition lam(p);
      for (const KappaPoly& t : {KappaPoly(1), KappaPoly::affine(1, 1), KappaPoly::affine(2, -1)})
        CHECK(hook_product(lam, t) == testing_support::hook_product_by_cells(p, t));
      // at κ = 1 the t = 1 product is the classical hook product
      const Rational classical = hook_product(lam, HookParam::one).eval(Q(1));
      CHECK(Rational(factorial(n)) / classical == Rational(static_cast<long>(syt_enumerate(p).size())));
    }
}

TEST_CASE("pochhammer") {
  const KappaPoly t = KappaPoly::affine(3, 1);
  CHECK(pochhammer(t, C({2, 1})) == KappaPoly::affine(3, 1) * KappaPoly::affine(3, 2) * KappaPoly::affine(2, 1));
  CHECK(pochhammer(t, C({0, 0})) == KappaPoly(1));
  CHECK(pochhammer(t, C({1})) == t);
}

TEST_CASE("e_factor") {
  for (const auto& p : partitions_of(5, 4)) {
    CHECK(e_factor(Composition(p, 4), 1).is_one());
    CHECK(e_factor(Composition(p, 4), -1).is_one());
  }
  CHECK(e_factor(C({0, 1}), -1) == KappaRatio(1, KappaPoly::affine(1, 1)));
  CHECK(e_factor(C({0, 1}), 1) == KappaRatio(KappaPoly::affine(2, 1), KappaPoly::affine(1, 1)));
}

TEST_CASE("build_lambda") {
  CHECK(build_lambda(1, 0, 1, 1, 1) == C({2, 1, 0}));
  CHECK(build_lambda(2, 1, 2, 1, 1) == C({4, 3, 3, 2, 2, 0, 0, 0, 0, 0}));
  const Composition big = build_lambda(3, 4, 4, 2, 3);
  CHECK(big.ambient() == 33);
  CHECK(big == parse_composition("27,27,24,24,24,21,21,21,18,18,18,15,15,15", 33));
  CHECK_THROWS_AS(build_lambda(2, 0, 1, 1, 3), ParameterViolation); // gcd(3,3) != 1
  CHECK_THROWS_AS(build_lambda(2, 0, 1, 3, 1), ParameterViolation); // rho > mu
  CHECK_THROWS_AS(build_lambda(1, 0, 0, 1, 1), ParameterViolation);
}

TEST_CASE("labels") {
  const SingularLabel a = resolve_label(1, 6, 10);
  CHECK(a.family == Family::two_part);
  CHECK(a.tau == std::vector<int>{5, 5});
  CHECK(a.lambda == C({1, 1, 1, 1, 1, 0, 0, 0, 0, 0}));

  const SingularLabel b = resolve_label(2, 6, 10);
  CHECK(b.tau == std::vector<int>{5, 2, 2, 1});
  CHECK(b.lambda == C({4, 3, 3, 2, 2, 0, 0, 0, 0, 0}));
  CHECK(b.kappa0 == Q(-1, 3));

  const SingularLabel c = resolve_label(3, 6, 10);
  CHECK(c.tau == std::vector<int>{5, 1, 1, 1, 1, 1});
  CHECK(c.lambda == build_lambda(1, 2, 4, 1, 1));

  CHECK_THROWS_AS(resolve_label(2, 2, 5), ParameterViolation);
  CHECK_THROWS_AS(resolve_label(1, 1, 5), ParameterViolation);
  CHECK_THROWS_AS(resolve_label(1, 6, 5), ParameterViolation);
}

TEST_CASE("label invariants for every label with N <= 8") {
  int labels = 0;
  for (int N = 2; N <= 8; ++N)
    for (int n = 2; n <= N; ++n)
      for (int m = 1; m <= 2 * n + 1; ++m) {
        if (m % n == 0) continue;
        const SingularLabel L = resolve_label(m, n, N);
        ++labels;
        int size = 0;
        for (int t : L.tau) size += t;
        CHECK(size == N);
        CHECK(L.kappa0 == Q(-m, n));
        CHECK(Rational(L.lambda.degree()) == -L.kappa0 * omega_eigenvalue(L.tau));
        CHECK(rlp_enumerate(L.lambda, L.gamma).size() == syt_enumerate(L.tau).size());
        if (L.family == Family::multi) {
          CHECK(L.lambda == build_lambda(L.mu, L.s, L.l, L.rho, L.m1));
          CHECK(N == lambda_ambient(L.mu, L.s, L.l, L.rho));
        }
      }
  CHECK(labels > 50);
}

TEST_CASE("omega eigenvalue") {
  CHECK(omega_eigenvalue({2, 1}) == Rational(3));
  CHECK(omega_eigenvalue({1, 1, 1}) == Rational(6));
  // (s(μ+1)+μ, μ^l, ρ) against the degree of Λ
  for (int mu = 1; mu <= 3; ++mu)
    for (int s = 0; s <= 2; ++s)
      for (int l = 1; l <= 2; ++l)
        for (int rho = 1; rho <= mu; ++rho) {
          std::vector<int> tau{s * (mu + 1) + mu};
          for (int j = 0; j < l; ++j) tau.push_back(mu);
          tau.push_back(rho);
          const Composition lam = build_lambda(mu, s, l, rho, 1);
          CHECK(omega_eigenvalue(tau) == Rational(mu + 1) * Rational(lam.degree()));
        }
}

TEST_CASE("omega eigenvalue strictly decreases along dominance, N <= 8") {
  for (int N = 1; N <= 8; ++N) {
    const auto parts = partitions_of(N, N);
    for (const auto& a : parts)
      for (const auto& b : parts)
        if (dominates_sorted(Composition(b, N), Composition(a, N)))
          CHECK(omega_eigenvalue(a) > omega_eigenvalue(b));
  }
}

TEST_CASE("content sequence matches the row-reading tableau") {
  const auto small = content_sequence(C({2, 1, 0}), Q(-1, 2));
  CHECK(small == std::vector<Rational>{Q(-2), Q(-1), Q(0)});
  for (auto [m, n, N] : std::vector<std::array<int, 3>>{{2, 6, 10}, {1, 3, 4}, {1, 4, 5}, {2, 6, 7}, {3, 4, 9}}) {
    const SingularLabel L = resolve_label(m, n, N);
    if (L.family != Family::multi) continue;
    const Tableau T0 = row_reading_tableau(L.tau);
    const auto c = content_sequence(L.lambda, L.kappa0);
    for (int kk = 1; kk <= N; ++kk) {
      CHECK(c[kk - 1] == Rational(T0.content(N + 1 - kk)));
      if (kk > L.lambda.length()) CHECK(c[kk - 1] == Rational(N - kk));
    }
  }
}

TEST_CASE("tableaux and reverse lattice permutations") {
  CHECK(rlp_enumerate(C({1, 0, 0}), {0, 1}) == std::vector<Composition>{C({1, 0, 0}), C({0, 1, 0})});
  CHECK(syt_enumerate({2, 1}).size() == 2);
  CHECK(rlp_enumerate(C({2, 1, 0}), {0, 1, 2}) == std::vector<Composition>{C({2, 1, 0})});
  CHECK(syt_enumerate({1, 1, 1}).size() == 1);
  CHECK(rlp_enumerate(C({1, 1, 0, 0}), {0, 1}) == std::vector<Composition>{C({1, 1, 0, 0}), C({1, 0, 1, 0})});
  CHECK(syt_enumerate({2, 2}).size() == 2);
  for (const auto& T : syt_enumerate({3, 2, 1})) CHECK(T.is_standard());
  CHECK(syt_enumerate({3, 2, 1}).size() == 16);
  CHECK(row_reading_tableau({2, 1}).rows == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("tableau of a reverse lattice permutation is standard") {
  const SingularLabel L = resolve_label(2, 6, 7);
  std::set<std::string> seen;
  for (const auto& a : rlp_enumerate(L.lambda, L.gamma)) {
    CHECK(is_reverse_lattice(a, L.gamma));
    const Tableau T = tableau_of(a, L.gamma);
    CHECK(T.is_standard());
    CHECK(T.shape == L.tau);
    seen.insert(T.to_string());
  }
  CHECK(seen.size() == syt_enumerate(L.tau).size());
}

TEST_CASE("lower bound on the affine forms") {
  for (int mu = 1; mu <= 5; ++mu)
    for (int m = 1; m <= 7; ++m) {
      if (std::gcd(m, mu + 1) != 1) continue;
      const Rational k0 = Q(-m, mu + 1);
      for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= mu; ++b)
          for (int c = 1; c <= m; ++c)
            CHECK_FALSE(is_zero(Rational(a) * (Rational(mu) * k0 + Rational(m)) + Rational(b) * k0 + Rational(c)));
    }
}

TEST_CASE("hook product zeros at the singular value") {
  for (int mu = 1; mu <= 3; ++mu)
    for (int s = 0; s <= 1; ++s)
      for (int l = 1; l <= 3; ++l)
        for (int rho = 1; rho <= mu; ++rho)
          for (int m = 1; m <= 3; ++m) {
            if (std::gcd(m, mu + 1) != 1) continue;
            const Composition lam = build_lambda(mu, s, l, rho, m);
            const Rational k0 = Q(-m, mu + 1);
            CHECK(root_multiplicity(hook_product(lam, HookParam::kappa_plus_one), k0) == 0);
            for (int k0i = 0; k0i <= l; ++k0i) {
              const Composition nu = lam.plus_unit(rho + k0i * mu, -1);
              CHECK(root_multiplicity(hook_product(nu, HookParam::kappa_plus_one), k0) == (k0i < l ? 1 : 0));
            }
          }
}

TEST_CASE("critical pairs") {
  const Composition lam = build_lambda(3, 4, 4, 2, 3).plus_unit(5, -1);
  const Composition beta =
      parse_composition("27,27,24,24,2,0,0,0,21,21,21,18,18,18,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3", 0);
  CHECK(critical_partner(3, 4, 4, 2, 3, 1) == beta);
  CHECK(beta.length() == 36);
  CHECK(is_critical_pair(lam, beta, 3, 4));
  CHECK(critical_by_definition(lam, beta, 3, 4));
  CHECK_FALSE(is_critical_pair(lam, lam, 3, 4));
  CHECK(is_critical_pair(C({2, 1}), C({1, 1, 1}), 1, 2) == critical_by_definition(C({2, 1}), C({1, 1, 1}), 1, 2));
  CHECK_THROWS_AS(is_critical_pair(C({2, 1}), C({1, 1}), 1, 2), DegreeMismatch);
}

TEST_CASE("constructed partners are critical and longer than N") {
  for (int mu = 1; mu <= 3; ++mu)
    for (int s = 0; s <= 2; ++s)
      for (int l = 1; l <= 3; ++l)
        for (int rho = 1; rho <= mu; ++rho)
          for (int m = 1; m <= 3; ++m) {
            if (std::gcd(m, mu + 1) != 1) continue;
            const int N = lambda_ambient(mu, s, l, rho);
            const Composition lam = build_lambda(mu, s, l, rho, m);
            for (int kk = 0; kk < l; ++kk) {
              const Composition beta = critical_partner(mu, s, l, rho, m, kk);
              CHECK(beta.length() == N + l - kk);
              const Composition nu = lam.plus_unit(rho + kk * mu, -1);
              CHECK(is_critical_pair(nu, beta, m, mu + 1));
              CHECK(critical_by_definition(nu, beta, m, mu + 1));
            }
          }
  CHECK_THROWS_AS(critical_partner(1, 0, 2, 1, 1, 2), ParameterViolation);
}

TEST_CASE("partner search") {
  const PartnerSearch one = find_critical_partners(C({2, 2, 1}), 1, 2, 7, 2);
  REQUIRE(one.partners.size() == 1);
  CHECK(is_critical_pair(C({2, 2, 1}), one.partners[0], 1, 2));
  CHECK(one.partners[0].with_ambient(7) == critical_partner(1, 0, 2, 1, 1, 0).with_ambient(7));
  CHECK(find_critical_partners(C({2, 1}), 1, 2, 3, 2).partners.empty());
  CHECK_THROWS_AS(find_critical_partners(C({2, 2, 1}), 1, 2, 7, 2, 5), SearchBudgetExceeded);
}

TEST_CASE("partner search agrees with brute force on small inputs") {
  Gen g(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int N = g.uniform(2, 4);
    const Composition lam = g.composition(N, g.uniform(1, 4));
    const int m = 1, n = g.uniform(2, 3);
    const int len = N + 2;
    std::vector<Composition> brute;
    for (const auto& b : compositions_of(lam.degree(), len)) {
      bool ok = true;
      for (int v : b.parts()) ok = ok && v <= 4;
      if (ok && critical_by_definition(lam, b, m, n)) brute.push_back(b);
    }
    auto found = find_critical_partners(lam, m, n, len, 4).partners;
    for (auto& b : found) b = b.with_ambient(len);
    std::sort(found.begin(), found.end());
    std::sort(brute.begin(), brute.end());
    CHECK_MESSAGE(found == brute, "lambda " << lam.to_string() << " n " << n);
  }
}

TEST_CASE("big-difference plan") {
  const BigDiffPlan p = bigdiff_plan(C({2, 1, 0}));
  CHECK(p.points == std::vector<int>{1, 2});
  CHECK(p.C.at({1, 2}) == KappaRatio(k, KappaPoly::affine(1, 1)));

  const Composition lam = build_lambda(1, 0, 2, 1, 1);
  CHECK(lam == C({3, 2, 1, 0}));
  const BigDiffPlan q = bigdiff_plan(lam);
  const Rational k0 = Q(-1, 2);
  for (const auto& [jk, c] : q.C) {
    REQUIRE_FALSE(c.has_pole_at(k0));
    CHECK(c.eval(k0) == Q(-1, jk.second - jk.first));
  }
  for (const auto& [kj, c] : q.Cprime) CHECK_FALSE(c.has_pole_at(k0));
  for (const auto& [jk, mu] : q.mu) CHECK(mu.sorted() == lam);
  for (const auto& [kj, nu] : q.nu) CHECK(nu.sorted() == lam.plus_unit(q.i(kj.second), -1).sorted());
  CHECK_THROWS_AS(bigdiff_plan(C({0, 0})), ZeroPartition);
  CHECK_THROWS_AS(bigdiff_plan(C({1, 2})), ParameterViolation);
}

TEST_CASE("big-difference coefficients have no poles at the singular value") {
  for (int mu = 1; mu <= 3; ++mu)
    for (int s = 0; s <= 1; ++s)
      for (int l = 1; l <= 3; ++l)
        for (int rho = 1; rho <= mu; ++rho) {
          const Composition lam = build_lambda(mu, s, l, rho, 1);
          const Rational k0 = Q(-1, mu + 1);
          const BigDiffPlan p = bigdiff_plan(lam);
          for (const auto& [jk, c] : p.C) {
            REQUIRE_FALSE(c.has_pole_at(k0));
            CHECK(c.eval(k0) == Q(-1, jk.second - jk.first));
          }
          for (const auto& [kj, c] : p.Cprime) CHECK_FALSE(c.has_pole_at(k0));
        }
}
