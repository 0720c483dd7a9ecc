#include "singpoly/multipoly.hpp"

#include <functional>

namespace singpoly {

int mono_degree(const Mono& a) {
  int d = 0;
  for (auto e : a) d += e;
  return d;
}

Mono make_mono(const std::vector<int>& exps) {
  if (static_cast<int>(exps.size()) > kMaxVars)
    throw AmbientMismatch("at most " + std::to_string(kMaxVars) + " variables are supported");
  Mono m{};
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] < 0 || exps[k] > 255) throw ParameterViolation("exponent outside [0,255]");
    m[k] = static_cast<std::uint8_t>(exps[k]);
  }
  return m;
}

Mono make_mono(const Composition& alpha) { return make_mono(alpha.parts()); }

std::vector<int> mono_exps(const Mono& a, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)];
  return v;
}

std::vector<Mono> monomials_of_degree(int n, int d) {
  std::vector<Mono> out;
  for (const auto& c : compositions_of(d, n)) out.push_back(make_mono(c));
  return out;
}

QPoly specialize(const KPoly& f, const Rational& kappa0) {
  QPoly out(f.ambient(), kappa0);
  for (const auto& [a, c] : f.terms()) {
    if (c.has_pole_at(kappa0)) {
      std::string exps;
      for (int k = 0; k < f.ambient(); ++k) exps += (k ? "," : "") + std::to_string(a[static_cast<std::size_t>(k)]);
      throw PoleError("coefficient of x^(" + exps + ") has denominator " + c.den().to_string() +
                          " vanishing at k = " + to_string(kappa0),
                      c.den().to_string(), exps);
    }
    out.add_term(a, c.eval(kappa0));
  }
  return out;
}

} // namespace singpoly
