#include "singpoly/json_io.hpp"

namespace singpoly {

namespace {

std::string field_tag(const std::optional<Rational>& k0) { return k0 ? "Q@" + to_string(*k0) : "Q(k)"; }

template <class C> Json poly_json(const Poly<C>& f) {
  Json terms = Json::array();
  for (const auto& [mono, c] : f.terms())
    terms.push_back({{"exp", mono_exps(mono, f.ambient())}, {"coeff", to_json(c)}});
  return {{"N", f.ambient()}, {"field", field_tag(f.kappa0())}, {"terms", terms}};
}

Json factors_json(const std::vector<std::pair<KappaPoly, int>>& fs) {
  Json out = Json::array();
  for (const auto& [f, k] : fs) out.push_back({{"factor", to_json(f)}, {"multiplicity", k}});
  return out;
}

} // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const KappaPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json to_json(const KappaRatio& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const Composition& a) { return a.parts(); }

Json to_json(const KPoly& f) { return poly_json(f); }
Json to_json(const QPoly& f) { return poly_json(f); }

Json to_json(const JackPoly& z) {
  Json j = {{"alpha", to_json(z.alpha)}, {"basis", z.basis == Basis::x_monic ? "x" : "p"}};
  j["denominator_factors"] = factors_json(z.denominator_factors);
  j["poly"] = to_json(z.poly);
  return j;
}

Json to_json(const SingularLabel& L) {
  Json j = {{"m", L.m}, {"n", L.n}, {"N", L.N}, {"d", L.d}, {"m1", L.m1}, {"n1", L.n1}, {"kappa0", to_json(L.kappa0)}};
  j["family"] = L.family == Family::two_part ? "two_part" : "multi";
  j["mu"] = L.mu;
  if (L.family == Family::multi) {
    j["s"] = L.s;
    j["l"] = L.l;
    j["rho"] = L.rho;
  }
  j["tau"] = L.tau;
  j["lambda"] = to_json(L.lambda);
  j["gamma"] = L.gamma;
  j["omega_eigenvalue"] = to_json(omega_eigenvalue(L.tau));
  return j;
}

Json to_json(const Tableau& t) { return t.rows; }

Json to_json(const Matrix<Rational>& a) {
  Json out = Json::array();
  for (const auto& row : a) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    out.push_back(r);
  }
  return out;
}

Json to_json(const KernelReport& r) {
  Json j = {{"N", r.N}, {"degree", r.degree}, {"kappa0", to_json(r.kappa0)}};
  j["monomial_basis_size"] = r.monomial_basis_size;
  j["kernel_dimension"] = r.kernel_dimension;
  Json cols = Json::array();
  for (const auto& m : r.monomials) cols.push_back(mono_exps(m, r.N));
  j["columns"] = cols;
  j["kernel_basis"] = to_json(r.kernel_basis.rows);
  j["pivots"] = r.kernel_basis.pivots;
  if (r.comparison.compared)
    j["comparison"] = {{"contains_module", r.comparison.contains_module},
                       {"equal_to_module", r.comparison.equal_to_module},
                       {"module_dim", r.comparison.module_dim}};
  return j;
}

Json module_json(const SingularModule& module, const IsotypeReport* iso, const SeminormalReport* semi) {
  Json j = {{"label", to_json(module.label)}};
  Json basis = Json::array();
  for (const auto& b : module.basis) {
    Json e = {{"alpha", to_json(b.alpha)}, {"w", b.w.images()}, {"tableau", to_json(b.tableau)}};
    for (auto& v : e["w"]) v = v.get<int>() + 1;
    Json spec = Json::array();
    for (const auto& q : b.murphy_spectrum) spec.push_back(to_string(q));
    e["murphy_spectrum"] = spec;
    e["certificates"] = {{"annihilated", b.annihilated}, {"pole_free", b.pole_free},
                         {"murphy_spectrum_ok", b.murphy_spectrum_ok}};
    e["basis"] = "x";
    e["poly"] = to_json(b.zeta);
    basis.push_back(e);
  }
  j["basis"] = basis;
  j["dimension"] = module.basis.size();
  j["certified"] = module.certified();
  if (iso)
    j["isotype"] = {{"omega_eigenvalue", to_json(iso->omega_value)}, {"omega_ok", iso->omega_ok},
                    {"degree_ok", iso->degree_ok}, {"invariance_ok", iso->invariance_ok}};
  if (semi) {
    Json mats = Json::array();
    for (std::size_t p = 0; p < semi->matrices.size(); ++p)
      mats.push_back({{"transposition", {p + 1, p + 2}}, {"matrix", to_json(semi->matrices[p])}});
    j["seminormal"] = {{"matrices", mats}, {"rules_ok", semi->rules_ok}, {"involution_ok", semi->involution_ok},
                       {"braid_ok", semi->braid_ok}, {"violations", semi->violations}};
  }
  return j;
}

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

KappaPoly kappa_poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return KappaPoly(std::move(c));
}

KappaRatio kappa_ratio_from_json(const Json& j) {
  return KappaRatio(kappa_poly_from_json(j.at("num")), kappa_poly_from_json(j.at("den")));
}

KPoly kpoly_from_json(const Json& j) {
  if (j.at("field").get<std::string>() != "Q(k)") throw ParseError("expected a generic polynomial");
  KPoly f(j.at("N").get<int>());
  for (const auto& t : j.at("terms")) f.add_term(make_mono(t.at("exp").get<std::vector<int>>()), kappa_ratio_from_json(t.at("coeff")));
  return f;
}

JackPoly jack_from_json(const Json& j) {
  JackPoly z;
  z.poly = kpoly_from_json(j.at("poly"));
  z.N = z.poly.ambient();
  z.alpha = Composition(j.at("alpha").get<std::vector<int>>(), z.N);
  const std::string b = j.at("basis").get<std::string>();
  if (b != "x" && b != "p") throw ParseError("basis must be x or p");
  z.basis = b == "x" ? Basis::x_monic : Basis::p_monic;
  for (const auto& f : j.at("denominator_factors"))
    z.denominator_factors.emplace_back(kappa_poly_from_json(f.at("factor")), f.at("multiplicity").get<int>());
  return z;
}

} // namespace singpoly
