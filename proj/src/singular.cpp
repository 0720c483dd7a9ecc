#include "singpoly/singular.hpp"

#include "singpoly/operators.hpp"

#include <algorithm>
#include <set>

namespace singpoly {

namespace {

// Eigenvalue c with g = c f, if any.
std::optional<Rational> eigenvalue(const QPoly& f, const QPoly& g) {
  if (f.is_zero()) return std::nullopt;
  const auto& [mono, c0] = *f.terms().begin();
  Rational c = g.coeff(mono) / c0;
  if (!(g == scaled(f, c))) return std::nullopt;
  return c;
}

Perm perm_of(const Composition& alpha) {
  std::vector<int> r = ranks(alpha);
  for (int& v : r) --v;
  return Perm(r).inverse(); // w⁻¹(i) = r(α,i)
}

void fill_murphy(BasisElement& b, const SingularLabel& L) {
  const int N = L.N;
  const OperatorContext ctx = OperatorContext::at(N, L.kappa0);
  b.murphy_spectrum.clear();
  bool ok = true;
  for (int i = 1; i <= N; ++i) {
    auto c = eigenvalue(b.zeta, murphy(ctx, i, b.zeta));
    if (!c) {
      ok = false;
      b.murphy_spectrum.emplace_back(0);
      continue;
    }
    b.murphy_spectrum.push_back(*c);
    if (*c != Rational(b.tableau.content(i))) ok = false;
  }
  // ω_{N+1-i} eigenvalue = N - r(α,i) + α_i/κ0
  for (int i = 1; i <= N && ok; ++i) {
    Rational want = Rational(N - rank(b.alpha, i)) + Rational(b.alpha.at(i)) / L.kappa0;
    if (b.murphy_spectrum[static_cast<std::size_t>(N - i)] != want) ok = false;
  }
  b.murphy_spectrum_ok = ok;
}

} // namespace

bool SingularModule::certified() const {
  if (basis.empty()) return false;
  for (const auto& b : basis)
    if (!b.annihilated || !b.pole_free || !b.murphy_spectrum_ok) return false;
  return true;
}

bool verify_singular(const QPoly& f) {
  if (f.is_zero() || f.degree() <= 0) return false;
  if (!f.kappa0()) throw FieldMismatch("verify_singular needs a specialized polynomial");
  const OperatorContext ctx = OperatorContext::at(f.ambient(), *f.kappa0());
  for (int i = 1; i <= f.ambient(); ++i)
    if (!dunkl(ctx, i, f).is_zero()) return false;
  return true;
}

SingularModule build_module_from_label(const SingularLabel& L, bool strict) {
  if (L.family == Family::two_part && !two_part_gcd_ok(L))
    throw GcdConditionViolated("gcd(m, mu+1)(N-mu) >= mu+1 for the two-part label (" + std::to_string(L.m) + "," +
                               std::to_string(L.n) + "," + std::to_string(L.N) + ")");
  SingularModule mod;
  mod.label = L;
  mod.e_tau = rlp_enumerate(L.lambda, L.gamma);
  for (const Composition& alpha : mod.e_tau) {
    BasisElement b;
    b.alpha = alpha;
    b.w = perm_of(alpha);
    b.tableau = tableau_of(alpha, L.gamma);
    const JackPoly z = zeta_x(alpha, L.N);
    try {
      b.zeta = specialize(z.poly, L.kappa0);
    } catch (const PoleError& e) {
      throw PoleAtSingularValue("zeta^x_" + alpha.to_string() + " has a pole at kappa0 = " + to_string(L.kappa0) +
                                " (factor " + e.factor() + ", monomial " + e.exponent() + ")");
    }
    b.pole_free = true;
    b.annihilated = verify_singular(b.zeta);
    fill_murphy(b, L);
    if (strict && !b.annihilated) {
      const OperatorContext ctx = OperatorContext::at(L.N, L.kappa0);
      int i = 1;
      while (i <= L.N && dunkl(ctx, i, b.zeta).is_zero()) ++i;
      throw NotAnnihilated("D_" + std::to_string(i) + " does not annihilate zeta^x_" + alpha.to_string() + " (w = " +
                           b.w.to_string() + ")");
    }
    if (strict && !b.murphy_spectrum_ok)
      throw FormulaMismatch("Murphy spectrum of zeta^x_" + alpha.to_string() + " differs from the tableau contents");
    mod.basis.push_back(std::move(b));
  }
  return mod;
}

SingularModule build_module(int m, int n, int N, bool strict) {
  return build_module_from_label(resolve_label(m, n, N), strict);
}

int basis_rank(const SingularModule& module) {
  std::set<Mono, GrlexDesc> support;
  for (const auto& b : module.basis)
    for (const auto& [mono, c] : b.zeta.terms()) support.insert(mono);
  const std::vector<Mono> monos(support.begin(), support.end());
  Matrix<Rational> rows;
  for (const auto& b : module.basis) rows.push_back(coefficient_vector(b.zeta, monos));
  return matrix_rank(rows, static_cast<int>(monos.size()));
}

PoleReport pole_analysis(int mu, int s, int l, int rho, int m, int k, std::uint64_t budget) {
  const Composition lam = build_lambda(mu, s, l, rho, m);
  if (k < 0 || k > l) throw ParameterViolation("pole analysis needs 0 <= k <= l");
  PoleReport r;
  r.N = lam.ambient();
  r.kappa0 = Rational(-m, mu + 1);
  r.kappa0.canonicalize();
  r.nu = lam.plus_unit(rho + k * mu, -1);
  r.hook_multiplicity = root_multiplicity(hook_product(r.nu, HookParam::kappa_plus_one), r.kappa0);
  const JackPoly z = zeta_x(r.nu, r.N);
  r.pole_free = true;
  for (const auto& [mono, c] : z.poly.terms())
    if (c.has_pole_at(r.kappa0)) {
      r.pole_free = false;
      break;
    }
  const int cap = r.nu.sorted().at(1);
  PartnerSearch at_n = find_critical_partners(r.nu, m, mu + 1, r.N, cap, budget);
  r.partners_at_N = at_n.partners;
  PartnerSearch beyond = find_critical_partners(r.nu, m, mu + 1, r.N + l - k, cap, budget);
  r.partners_beyond = beyond.partners;
  r.search_nodes = at_n.nodes + beyond.nodes;
  if (k < l) {
    r.constructed_partner = critical_partner(mu, s, l, rho, m, k);
    const int M = r.N + l - k;
    for (const auto& b : r.partners_beyond)
      if (b.with_ambient(M) == r.constructed_partner.with_ambient(M)) r.constructed_partner_found = true;
  }
  return r;
}

IsotypeReport isotype_check(const SingularModule& module) {
  const SingularLabel& L = module.label;
  const OperatorContext ctx = OperatorContext::at(L.N, L.kappa0);
  IsotypeReport rep;
  rep.omega_value = omega_eigenvalue(L.tau);
  rep.omega_ok = rep.degree_ok = rep.invariance_ok = !module.basis.empty();
  for (const auto& b : module.basis) {
    if (!(omega_central(ctx, b.zeta) == scaled(b.zeta, rep.omega_value))) rep.omega_ok = false;
    if (Rational(b.zeta.degree()) != -L.kappa0 * rep.omega_value) rep.degree_ok = false;
    for (int p = 1; p < L.N; ++p)
      if (b.alpha.at(p) == b.alpha.at(p + 1) && !(swap_vars(p, p + 1, b.zeta) == b.zeta)) rep.invariance_ok = false;
  }
  return rep;
}

bool murphy_spectrum_check(const SingularModule& module) {
  std::set<std::vector<Rational>> spectra;
  for (const auto& b : module.basis) {
    BasisElement c = b;
    fill_murphy(c, module.label);
    if (!c.murphy_spectrum_ok) return false;
    spectra.insert(c.murphy_spectrum);
  }
  return spectra.size() == module.basis.size();
}

SeminormalReport seminormal_matrices(const SingularModule& module) {
  const SingularLabel& L = module.label;
  const int N = L.N;
  const std::size_t dim = module.basis.size();
  SeminormalReport rep;

  std::set<Mono, GrlexDesc> support;
  for (const auto& b : module.basis)
    for (const auto& [mono, c] : b.zeta.terms()) support.insert(mono);
  for (const auto& b : module.basis)
    for (int p = 1; p < N; ++p) {
      const QPoly img = swap_vars(p, p + 1, b.zeta);
      for (const auto& [mono, c] : img.terms()) support.insert(mono);
    }
  const std::vector<Mono> monos(support.begin(), support.end());
  std::vector<std::vector<Rational>> cols;
  for (const auto& b : module.basis) cols.push_back(coefficient_vector(b.zeta, monos));

  for (int p = 1; p < N; ++p) {
    Matrix<Rational> S(dim, std::vector<Rational>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
      auto x = solve_in_span(cols, coefficient_vector(swap_vars(p, p + 1, module.basis[c].zeta), monos));
      if (!x)
        throw ExpansionFailure("(" + std::to_string(p) + "," + std::to_string(p + 1) + ") zeta^x_" +
                               module.basis[c].alpha.to_string() + " leaves the span of the basis");
      for (std::size_t r = 0; r < dim; ++r) S[r][c] = (*x)[r];
    }
    rep.matrices.push_back(std::move(S));
  }

  // Murphy's rules, read with entry i = N - p of the tableau.
  rep.rules_ok = true;
  auto violation = [&](int p, std::size_t c, const std::string& what) {
    rep.rules_ok = false;
    rep.violations.push_back("(" + std::to_string(p) + "," + std::to_string(p + 1) + ") on " +
                             module.basis[c].alpha.to_string() + ": " + what);
  };
  for (int p = 1; p < N; ++p) {
    const Matrix<Rational>& S = rep.matrices[static_cast<std::size_t>(p - 1)];
    const int i = N - p;
    for (std::size_t c = 0; c < dim; ++c) {
      const Tableau& T = module.basis[c].tableau;
      std::vector<Rational> want(dim);
      if (T.row_of(i) == T.row_of(i + 1)) {
        want[c] = 1;
      } else if (T.col_of(i) == T.col_of(i + 1)) {
        want[c] = -1;
      } else {
        Rational a = Rational(1) / Rational(T.content(i + 1) - T.content(i));
        Tableau T2 = T;
        for (auto& row : T2.rows)
          for (int& v : row) v = v == i ? i + 1 : (v == i + 1 ? i : v);
        std::size_t c2 = dim;
        for (std::size_t k = 0; k < dim; ++k)
          if (module.basis[k].tableau == T2) c2 = k;
        if (c2 == dim) {
          violation(p, c, "swapped tableau is not in the basis");
          continue;
        }
        want[c] = a;
        want[c2] = T.row_of(i) < T.row_of(i + 1) ? Rational(1) - a * a : Rational(1);
      }
      for (std::size_t r = 0; r < dim; ++r)
        if (S[r][c] != want[r]) {
          violation(p, c, "entry " + std::to_string(r + 1) + " is " + to_string(S[r][c]) + ", expected " + to_string(want[r]));
          break;
        }
    }
  }

  auto mul = [&](const Matrix<Rational>& A, const Matrix<Rational>& B) {
    Matrix<Rational> C(dim, std::vector<Rational>(dim));
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(A[r][k]) != 0)
          for (std::size_t c = 0; c < dim; ++c) C[r][c] += A[r][k] * B[k][c];
    return C;
  };
  Matrix<Rational> I(dim, std::vector<Rational>(dim));
  for (std::size_t k = 0; k < dim; ++k) I[k][k] = 1;
  rep.involution_ok = rep.braid_ok = true;
  for (std::size_t p = 0; p < rep.matrices.size(); ++p) {
    const auto& A = rep.matrices[p];
    if (mul(A, A) != I) rep.involution_ok = false;
    for (std::size_t q = p + 1; q < rep.matrices.size(); ++q) {
      const auto& B = rep.matrices[q];
      if (q == p + 1) {
        if (mul(mul(A, B), A) != mul(mul(B, A), B)) rep.braid_ok = false;
      } else if (mul(A, B) != mul(B, A)) {
        rep.braid_ok = false;
      }
    }
  }
  return rep;
}

bool cherednik_closure_check(const SingularModule& module, const QPoly& p, std::size_t g) {
  if (g >= module.basis.size()) throw IndexOutOfRange("basis index out of range");
  const SingularLabel& L = module.label;
  const OperatorContext ctx = OperatorContext::at(L.N, L.kappa0);
  const QPoly& f = module.basis[g].zeta;
  if (p.ambient() != L.N || p.kappa0() != f.kappa0()) throw FieldMismatch("p must live over the module's field");
  for (int i = 1; i <= L.N; ++i) {
    QPoly lhs = dunkl(ctx, i, p * f);
    const QPoly dg = dunkl(ctx, i, f);
    QPoly rhs = p * dg + f * partial(i, p);
    QPoly rest = f.zero_like();
    for (int j = 1; j <= L.N; ++j)
      if (j != i) rest += swap_vars(i, j, f) * divided_difference(i, j, p);
    rhs.add_scaled(rest, L.kappa0);
    if (!(lhs == rhs)) return false;
    // with D_i g = 0 the right side is g∂_ip plus S_N-images of g times polynomials
    if (!dg.is_zero()) return false;
    QPoly visible = f * partial(i, p);
    visible.add_scaled(rest, L.kappa0);
    if (!(lhs == visible)) return false;
  }
  return true;
}

} // namespace singpoly
