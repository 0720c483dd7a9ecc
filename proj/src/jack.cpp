#include "singpoly/jack.hpp"

#include "singpoly/linalg.hpp"
#include "singpoly/operators.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace singpoly {

namespace {

std::mutex g_zeta_mutex;
std::map<std::vector<int>, JackPoly> g_zeta_cache; // key: parts at ambient N

std::mutex g_p_mutex;
std::map<std::tuple<int, int, int>, KPoly> g_factor_cache; // (N, j, k)

struct PBasisInverse {
  std::vector<Composition> comps;
  std::vector<Mono> monos;
  Matrix<KappaRatio> inv; // rows: p-index, cols: monomial
};
std::map<std::pair<int, int>, PBasisInverse> g_pinv_cache;

KappaRatio affine_ratio(long slope, long intercept) { return KappaRatio(KappaPoly::affine(slope, intercept)); }

KappaPoly rising(const KappaPoly& t, int k) {
  KappaPoly p(1);
  for (int i = 0; i < k; ++i) p *= t + KappaPoly(i);
  return p;
}

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

JackPoly make_jack(const Composition& alpha, Basis basis, KPoly poly) {
  JackPoly z;
  z.alpha = alpha;
  z.N = alpha.ambient();
  z.basis = basis;
  z.poly = std::move(poly);
  z.denominator_factors = denominator_factors(z.poly);
  return z;
}

JackPoly build_zeta_x(const Composition& a) {
  const int N = a.ambient();
  const std::vector<Composition> ds = triangle_downset(a);
  std::map<Mono, std::size_t> index;
  for (std::size_t k = 0; k < ds.size(); ++k) index.emplace(make_mono(ds[k]), k);

  const std::vector<SpectralEntry> xa = spectral_vector(a);
  std::vector<std::vector<KappaRatio>> pending(static_cast<std::size_t>(N), std::vector<KappaRatio>(ds.size()));
  std::vector<KappaRatio> A(ds.size());
  for (std::size_t idx = 0; idx < ds.size(); ++idx) {
    const Composition& b = ds[idx];
    const std::vector<SpectralEntry> xb = spectral_vector(b);
    if (idx == 0) {
      A[idx] = KappaRatio(1);
    } else {
      int piv = -1;
      std::vector<KappaPoly> diff(static_cast<std::size_t>(N));
      for (int i = 0; i < N; ++i) {
        const auto& ea = xa[static_cast<std::size_t>(i)];
        const auto& eb = xb[static_cast<std::size_t>(i)];
        diff[static_cast<std::size_t>(i)] = KappaPoly::affine(ea.slope - eb.slope, ea.intercept - eb.intercept);
        if (piv < 0 && !diff[static_cast<std::size_t>(i)].is_zero()) piv = i;
      }
      if (piv < 0)
        throw SpectralCollision("spectral vectors of " + a.to_string() + " and " + b.to_string() + " coincide");
      A[idx] = pending[static_cast<std::size_t>(piv)][idx] / KappaRatio(diff[static_cast<std::size_t>(piv)]);
      for (int i = 0; i < N; ++i)
        if (!(pending[static_cast<std::size_t>(i)][idx] == A[idx] * KappaRatio(diff[static_cast<std::size_t>(i)])))
          throw SolveFailure("eigen-equation " + std::to_string(i + 1) + " fails at " + b.to_string() +
                             " while building zeta of " + a.to_string());
    }
    if (A[idx].is_zero()) continue;
    const Mono mb = make_mono(b);
    const std::vector<int> rb = ranks(b);
    for (int i = 1; i <= N; ++i) {
      for (const AffineTerm& t : cherednik_on_monomial(mb, N, i)) {
        if (t.mono == mb) {
          if (t.a != b.at(i) + 1 || t.b != N - rb[static_cast<std::size_t>(i - 1)])
            throw SolveFailure("Cherednik diagonal differs from the spectral vector at " + b.to_string());
          continue;
        }
        auto it = index.find(t.mono);
        if (it == index.end() || it->second <= idx)
          throw SolveFailure("Cherednik image leaves the triangular down-set of " + a.to_string());
        pending[static_cast<std::size_t>(i - 1)][it->second] += A[idx] * affine_ratio(t.b, t.a);
      }
    }
  }
  KPoly f(N);
  for (std::size_t k = 0; k < ds.size(); ++k) f.add_term(make_mono(ds[k]), A[k]);
  return make_jack(a, Basis::x_monic, std::move(f));
}

const KPoly& p_factor(int N, int j, int k) {
  std::lock_guard<std::mutex> lock(g_p_mutex);
  auto key = std::make_tuple(N, j, k);
  auto it = g_factor_cache.find(key);
  if (it != g_factor_cache.end()) return it->second;
  // coefficient of y_j^k in ∏_i (1 - x_i y_j)^{-(κ+δ_ij)}
  KPoly f(N);
  for (const Composition& c : compositions_of(k, N)) {
    KappaPoly num(1);
    Integer den = 1;
    for (int i = 1; i <= N; ++i) {
      const int ci = c.at(i);
      if (ci == 0) continue;
      num *= rising(KappaPoly::affine(1, i == j ? 1 : 0), ci);
      den *= factorial(ci);
    }
    f.add_term(make_mono(c), KappaRatio(num * KappaPoly(Rational(1, 1) / Rational(den))));
  }
  return g_factor_cache.emplace(key, std::move(f)).first->second;
}

const PBasisInverse& p_inverse(int degree, int N) {
  {
    std::lock_guard<std::mutex> lock(g_p_mutex);
    auto it = g_pinv_cache.find({degree, N});
    if (it != g_pinv_cache.end()) return it->second;
  }
  PBasisInverse pb;
  pb.comps = compositions_of(degree, N);
  pb.monos = monomials_of_degree(N, degree);
  const std::size_t n = pb.monos.size();
  // column c = coefficient vector of p_{comps[c]}
  Matrix<KappaRatio> P(n, std::vector<KappaRatio>(n));
  for (std::size_t c = 0; c < n; ++c) {
    KPoly p = p_basis(pb.comps[c], N);
    for (std::size_t r = 0; r < n; ++r) P[r][c] = p.coeff(pb.monos[r]);
  }
  auto inv = inverse(P);
  if (!inv) throw SolveFailure("p-basis of degree " + std::to_string(degree) + " is linearly dependent");
  pb.inv = std::move(*inv);
  std::lock_guard<std::mutex> lock(g_p_mutex);
  return g_pinv_cache.emplace(std::make_pair(degree, N), std::move(pb)).first->second;
}

} // namespace

std::vector<std::pair<KappaPoly, int>> denominator_factors(const KPoly& f) {
  std::vector<std::pair<KappaPoly, int>> out;
  std::unordered_map<std::string, bool> seen;
  for (const auto& [m, c] : f.terms()) {
    if (c.den().is_one()) continue;
    std::string key = c.den().to_string();
    if (seen.count(key)) continue;
    seen.emplace(key, true);
    for (const auto& [fac, mult] : rational_root_factors(c.den())) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == fac; });
      if (it == out.end())
        out.emplace_back(fac, mult);
      else
        it->second = std::max(it->second, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return x.first.coeffs() < y.first.coeffs();
  });
  return out;
}

std::vector<Composition> triangle_downset(const Composition& alpha) {
  const int N = alpha.ambient();
  const Composition top = alpha.sorted();
  std::vector<Composition> out;
  for (const auto& mu : partitions_of(alpha.degree(), N)) {
    Composition mc(mu, N);
    Cmp c = compare(mc, top, Order::dominance);
    if (c != Cmp::equal && c != Cmp::less) continue;
    for (auto& v : distinct_permutations(mc.parts())) {
      Composition b(std::move(v), N);
      if (c == Cmp::equal && !(b == alpha || dominates(alpha, b))) continue;
      out.push_back(std::move(b));
    }
  }
  return out;
}

JackPoly zeta_x(const Composition& alpha, int N) {
  if (alpha.length() > N) throw AmbientTooSmall("length of " + alpha.to_string() + " exceeds N = " + std::to_string(N));
  const Composition a = alpha.with_ambient(N);
  {
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    auto it = g_zeta_cache.find(a.parts());
    if (it != g_zeta_cache.end()) return it->second;
  }
  JackPoly z = build_zeta_x(a);
  std::lock_guard<std::mutex> lock(g_zeta_mutex);
  g_zeta_cache.emplace(a.parts(), z);
  return z;
}

KappaRatio p_over_x_factor(const Composition& alpha) {
  const Composition top = alpha.sorted();
  return e_factor(alpha, 1) * e_factor(alpha, -1) * KappaRatio(hook_product(top, HookParam::kappa_plus_one)) /
         KappaRatio(hook_product(top, HookParam::one));
}

JackPoly zeta_p(const Composition& alpha, int N) {
  JackPoly z = zeta_x(alpha, N);
  z.poly.scale(p_over_x_factor(z.alpha));
  z.basis = Basis::p_monic;
  z.denominator_factors = denominator_factors(z.poly);
  return z;
}

void clear_zeta_cache() {
  std::lock_guard<std::mutex> lock(g_zeta_mutex);
  g_zeta_cache.clear();
}

KPoly p_basis(const Composition& alpha, int N) {
  if (alpha.length() > N) throw AmbientTooSmall("length of " + alpha.to_string() + " exceeds N = " + std::to_string(N));
  const Composition a = alpha.with_ambient(N);
  KPoly f = KPoly::constant(N, KappaRatio(1));
  for (int j = 1; j <= N; ++j)
    if (a.at(j) > 0) f = f * p_factor(N, j, a.at(j));
  return f;
}

std::map<Composition, KappaRatio> p_expansion(const KPoly& f, int degree) {
  std::map<Composition, KappaRatio> out;
  if (f.is_zero()) return out;
  if (!f.is_homogeneous() || f.degree() != degree) throw DegreeMismatch("p-expansion needs a homogeneous polynomial of the stated degree");
  const PBasisInverse& pb = p_inverse(degree, f.ambient());
  std::vector<KappaRatio> v = coefficient_vector(f, pb.monos);
  for (std::size_t r = 0; r < pb.comps.size(); ++r) {
    KappaRatio acc;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero() && !pb.inv[r][c].is_zero()) acc += pb.inv[r][c] * v[c];
    if (!acc.is_zero()) out.emplace(pb.comps[r], acc);
  }
  return out;
}

bool verify_eigen(const JackPoly& z) {
  const OperatorContext ctx = OperatorContext::generic(z.N);
  const std::vector<SpectralEntry> xi = spectral_vector(z.alpha);
  for (int i = 1; i <= z.N; ++i)
    if (!(cherednik(ctx, i, z.poly) == scaled(z.poly, KappaRatio(xi[static_cast<std::size_t>(i - 1)].value()))))
      return false;
  return true;
}

bool cyclic_check(const JackPoly& zp) {
  const int m = zp.alpha.length();
  if (m == 0) throw PreconditionViolation("cyclic check needs a nonzero composition");
  const OperatorContext ctx = OperatorContext::generic(zp.N);
  KPoly g = apply_perm(Perm::cycle_theta(zp.N, m), dunkl(ctx, m, zp.poly));
  if (g.is_zero()) return false;
  const std::vector<SpectralEntry> xi = spectral_vector(tilde(zp.alpha));
  for (int i = 1; i <= zp.N; ++i)
    if (!(cherednik(ctx, i, g) == scaled(g, KappaRatio(xi[static_cast<std::size_t>(i - 1)].value())))) return false;
  return true;
}

JackPoly z2sz_step(const JackPoly& z, int i) {
  if (i < 1 || i >= z.N) throw IndexOutOfRange("z2sz index outside [1,N-1]");
  const Composition& a = z.alpha;
  if (a.at(i) <= a.at(i + 1)) throw NotDecreasingAt("alpha is not decreasing at " + std::to_string(i));
  const KappaRatio c(KappaPoly::kappa(), KappaPoly::affine(rank(a, i + 1) - rank(a, i), a.at(i) - a.at(i + 1)));
  KPoly f = swap_vars(i, i + 1, z.poly);
  f.add_scaled(z.poly, -c);
  if (z.basis == Basis::x_monic) {
    KappaRatio d = KappaRatio(1) - c * c;
    if (d.is_zero()) throw DegenerateFactor("1 - a^2 vanishes");
    f.scale(d.inverse());
  }
  std::vector<int> v = a.parts();
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return make_jack(Composition(v, z.N), z.basis, std::move(f));
}

namespace {

JackPoly shift_step(const JackPoly& z, int i, int s, bool right) {
  const char* name = right ? "movert" : "movelt";
  if (z.basis != Basis::p_monic) throw PreconditionViolation(std::string(name) + " needs a p-monic polynomial");
  if (s < 1 || i < 1 || i + s > z.N) throw PreconditionViolation(std::string(name) + " indices outside [1,N]");
  const Composition& a = z.alpha;
  int delta = 0;
  if (right) {
    const int hi = a.at(i), lo = a.at(i + 1);
    for (int j = 1; j <= s; ++j)
      if (a.at(i + j) != lo)
        throw PreconditionViolation("movert: entries i+1..i+s must be equal, entry " + std::to_string(i + j) + " differs");
    if (hi <= lo) throw PreconditionViolation("movert: entry i must exceed entries i+1..i+s");
    delta = hi - lo;
  } else {
    const int hi = a.at(i), lo = a.at(i + s);
    for (int j = 0; j < s; ++j)
      if (a.at(i + j) != hi)
        throw PreconditionViolation("movelt: entries i..i+s-1 must be equal, entry " + std::to_string(i + j) + " differs");
    if (hi <= lo) throw PreconditionViolation("movelt: entries i..i+s-1 must exceed entry i+s");
    delta = hi - lo;
  }
  const KappaRatio c(KappaPoly::kappa(), KappaPoly::affine(rank(a, i + s) - rank(a, i), delta));
  KPoly sum = z.poly;
  for (int j = 1; j < s; ++j) sum += right ? swap_vars(i, i + j, z.poly) : swap_vars(i + j, i + s, z.poly);
  KPoly f = swap_vars(i, i + s, z.poly);
  f.add_scaled(sum, -c);
  std::vector<int> v = a.parts();
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i + s - 1)]);
  return make_jack(Composition(v, z.N), z.basis, std::move(f));
}

} // namespace

JackPoly movert_step(const JackPoly& z, int i, int s) { return shift_step(z, i, s, true); }
JackPoly movelt_step(const JackPoly& z, int i, int s) { return shift_step(z, i, s, false); }

DmResult dm_formula(const JackPoly& zp) {
  if (zp.basis != Basis::p_monic) throw PreconditionViolation("dm_formula needs a p-monic polynomial");
  const Composition& a = zp.alpha;
  const int m = a.length();
  if (m == 0) throw PreconditionViolation("dm_formula needs a nonzero composition");
  const int N = zp.N;
  DmResult res;
  res.coefficient = affine_ratio(N + 1 - rank(a, m), a.at(m));
  res.alpha_tilde = tilde(a);
  res.rhs = apply_perm(Perm::cycle_theta(N, m).inverse(), zeta_p(res.alpha_tilde, N).poly);
  const OperatorContext ctx = OperatorContext::generic(N);
  KPoly lhs = dunkl(ctx, m, zp.poly);
  KPoly rhs = scaled(res.rhs, res.coefficient);
  if (!(lhs == rhs))
    throw FormulaMismatch("D_" + std::to_string(m) + " zeta_" + a.to_string() + ": " + poly_to_string(lhs) +
                          " != " + poly_to_string(rhs));
  for (int i = m + 1; i <= N; ++i) {
    KPoly d = dunkl(ctx, i, zp.poly);
    if (!d.is_zero())
      throw FormulaMismatch("D_" + std::to_string(i) + " zeta_" + a.to_string() + " = " + poly_to_string(d) + " != 0");
  }
  return res;
}

BigDiffReport bigdiff_verify(const Composition& lambda) {
  BigDiffReport rep;
  rep.plan = bigdiff_plan(lambda);
  const BigDiffPlan& p = rep.plan;
  const int N = p.N, M = p.M, m = p.m();
  const OperatorContext ctx = OperatorContext::generic(N);
  auto zp = [&](const Composition& a) { return zeta_p(a, N).poly; };
  auto fail = [&](int j, const std::string& what) {
    throw FormulaMismatch("bigdiff " + lambda.to_string() + " at j=" + std::to_string(j) + ": " + what);
  };

  for (int j = 1; j <= M; ++j) {
    for (int k = j; k < M; ++k)
      if (!(zp(p.mu.at({j, k + 1})) == p.z.at({j, k + 1}).apply(zp(p.mu.at({j, k})))))
        fail(j, "mu chain step k=" + std::to_string(k + 1));
    for (int k = j - 1; k >= 0; --k)
      if (!(zp(p.nu.at({k, j})) == p.nu_step.at({k, j}).apply(zp(p.nu.at({k + 1, j})))))
        fail(j, "nu chain step k=" + std::to_string(k));
    DmResult dm = dm_formula(zeta_p(p.mu.at({j, M}), N));
    if (!(dm.alpha_tilde == p.nu.at({0, j})) || !(dm.coefficient == p.final_coefficient(j)))
      fail(j, "D_m on mu(j,M) does not land on nu(0,j)");
    rep.coefficients[j] = p.final_coefficient(j);
  }

  const Perm theta_inv = Perm::cycle_theta(N, m).inverse();
  std::map<int, GroupElement> G;
  for (int s = 1; s <= M; ++s) {
    GroupElement g = GroupElement::single(theta_inv, KappaRatio(1));
    for (int k = 0; k < s; ++k) g = g * p.nu_step.at({k, s});
    G[s] = g;
  }
  auto chain = [&](int j, int t) {
    GroupElement g = GroupElement::identity(N);
    for (int r = j; r < t; ++r) g = g * GroupElement::transposition(N, p.i(r), p.i(r + 1));
    return g;
  };

  std::map<int, std::map<int, GroupElement>> V;
  for (int j = M; j >= 1; --j) {
    std::map<int, GroupElement>& Vj = V[j];
    Vj[j] = chain(j, M) * G.at(j);
    for (int t = j + 1; t <= M; ++t) {
      GroupElement pre = chain(j, t) * p.w.at(t - 1);
      for (int r = t - 1; r > j; --r) pre = pre * p.z.at({j, r});
      pre.scale(p.C.at({j, t}));
      for (const auto& [s, g] : V.at(t)) {
        auto it = Vj.try_emplace(s, N).first;
        it->second += pre * g;
      }
    }
    KPoly sum(N);
    for (const auto& [s, g] : Vj) {
      if (!g.within_first(m)) fail(j, "u_{j," + std::to_string(s) + "} moves points above m");
      sum.add_scaled(g.apply(zp(lambda.plus_unit(p.i(s), -1))), rep.coefficients.at(s));
      rep.u[{j, s}] = g;
    }
    if (!(sum == dunkl(ctx, p.i(j), zp(lambda)))) fail(j, "recursion differs from direct Dunkl");
    ++rep.checked_indices;
  }

  const KPoly z = zp(lambda);
  for (int j = 1; j <= M; ++j) {
    const KPoly dj = dunkl(ctx, p.i(j), z);
    for (int i = p.i(j - 1) + 1; i < p.i(j); ++i) {
      if (!(dunkl(ctx, i, z) == swap_vars(i, p.i(j), dj))) fail(j, "D_" + std::to_string(i) + " is not a transposed copy");
      ++rep.checked_indices;
    }
  }
  for (int i = m + 1; i <= N; ++i) {
    if (!dunkl(ctx, i, z).is_zero()) fail(M, "D_" + std::to_string(i) + " does not vanish");
    ++rep.checked_indices;
  }
  return rep;
}

std::map<Composition, KappaRatio> dunkl_p_expansion(const Composition& beta, int m) {
  std::map<Composition, KappaRatio> out;
  const int N = beta.ambient();
  const int bm = beta.at(m);
  if (bm == 0) return out;
  auto add = [&](const Composition& g, const KappaRatio& c) {
    auto it = out.try_emplace(g).first;
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  };
  int ge = 0;
  for (int j = 1; j <= N; ++j)
    if (beta.at(j) >= bm) ++ge;
  add(beta.plus_unit(m, -1), affine_ratio(N - ge + 1, bm));
  const KappaRatio k = KappaRatio::kappa();
  for (int j = 1; j <= N; ++j) {
    if (j == m) continue;
    const int bj = beta.at(j);
    for (int n = std::max(0, bj - bm); n <= bj - 1; ++n) add(beta.plus_unit(m, n).plus_unit(j, -(n + 1)), k);
    for (int n = std::max(1, bm - bj); n <= bm - 1; ++n) add(beta.plus_unit(m, -(n + 1)).plus_unit(j, n), -k);
  }
  return out;
}

DifpReport difp_support_check(const Composition& alpha) {
  const int m = alpha.length();
  if (m == 0) throw PreconditionViolation("difp check needs a nonzero composition");
  const int N = alpha.ambient(), d = alpha.degree();
  const OperatorContext ctx = OperatorContext::generic(N);
  const Composition target = alpha.plus_unit(m, -1);
  DifpReport rep;
  rep.expected = affine_ratio(N + 1 - rank(alpha, m), alpha.at(m));
  rep.trichotomy = true;
  rep.expansion_formula = true;
  for (const Composition& beta : compositions_of(d, N)) {
    if (beta.length() != m) continue;
    auto e = p_expansion(dunkl(ctx, m, p_basis(beta, N)), d - 1);
    if (e != dunkl_p_expansion(beta, m)) rep.expansion_formula = false;
    auto it = e.find(target);
    KappaRatio c = it == e.end() ? KappaRatio() : it->second;
    if (beta == alpha) rep.coefficient = c;
    else if (!c.is_zero() && !triangle_above(alpha, beta)) rep.trichotomy = false;
  }
  return rep;
}

bool ks_coefficient_check(const Composition& lambda, int N) {
  const int m = lambda.length(), n = lambda.degree();
  if (N < m + n) throw AmbientTooSmall("need N >= l(lambda) + |lambda|");
  if (!lambda.is_partition()) throw ParameterViolation("squarefree coefficient check needs a partition");
  const Composition lam = lambda.with_ambient(N);
  std::vector<int> e(static_cast<std::size_t>(N), 0);
  for (int i = m; i < m + n; ++i) e[static_cast<std::size_t>(i)] = 1;
  KappaRatio got = zeta_x(lam, N).poly.coeff(make_mono(e));
  KappaPoly kn(1);
  for (int i = 0; i < n; ++i) kn *= KappaPoly::kappa();
  KappaRatio want(kn * KappaPoly(Rational(factorial(n))), hook_product(lam, HookParam::kappa_plus_one));
  return got == want;
}

} // namespace singpoly
