#ifndef SINGPOLY_JACK_HPP
#define SINGPOLY_JACK_HPP

#include "singpoly/bigdiff.hpp"
#include "singpoly/multipoly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace singpoly {

enum class Basis { x_monic, p_monic };

struct JackPoly {
  Composition alpha; // stored at ambient N
  int N = 0;
  Basis basis = Basis::x_monic;
  KPoly poly;
  std::vector<std::pair<KappaPoly, int>> denominator_factors;
};

// Irreducible rational-root factors of the coefficient denominators, with the
// largest multiplicity seen; a non-split remainder is kept as one factor.
std::vector<std::pair<KappaPoly, int>> denominator_factors(const KPoly& f);

// Triangular down-set of α in processing order (α first).
std::vector<Composition> triangle_downset(const Composition& alpha);

JackPoly zeta_x(const Composition& alpha, int N);
JackPoly zeta_p(const Composition& alpha, int N);
// ζ_α = factor·ζ_α^x
KappaRatio p_over_x_factor(const Composition& alpha);
void clear_zeta_cache();

KPoly p_basis(const Composition& alpha, int N);
// Coefficients of f in the p-basis of its degree; empty map for f = 0.
std::map<Composition, KappaRatio> p_expansion(const KPoly& f, int degree);

// U_i ζ = ξ_i(α) ζ for all i.
bool verify_eigen(const JackPoly& z);
// θ_m D_m ζ_α is a simultaneous eigenvector with the spectral vector of α̃.
bool cyclic_check(const JackPoly& zp);

JackPoly z2sz_step(const JackPoly& z, int i);
JackPoly movert_step(const JackPoly& z, int i, int s);
JackPoly movelt_step(const JackPoly& z, int i, int s);

struct DmResult {
  KappaRatio coefficient;
  Composition alpha_tilde;
  KPoly rhs; // θ_m⁻¹ ζ_{α̃}
};
DmResult dm_formula(const JackPoly& zp);

struct BigDiffReport {
  BigDiffPlan plan;
  std::map<int, KappaRatio> coefficients;                // s -> (N+1-i_s)κ + λ_{i_s}
  std::map<std::pair<int, int>, GroupElement> u;         // (j,s)
  int checked_indices = 0;
};
BigDiffReport bigdiff_verify(const Composition& lambda);

struct DifpReport {
  KappaRatio coefficient;
  KappaRatio expected;
  bool trichotomy = false;
  bool expansion_formula = false;
};
DifpReport difp_support_check(const Composition& alpha);
// Explicit expansion of D_m p_β in the p-basis.
std::map<Composition, KappaRatio> dunkl_p_expansion(const Composition& beta, int m);

bool ks_coefficient_check(const Composition& lambda, int N);

} // namespace singpoly

#endif
