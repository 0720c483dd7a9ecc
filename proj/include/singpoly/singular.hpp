#ifndef SINGPOLY_SINGULAR_HPP
#define SINGPOLY_SINGULAR_HPP

#include "singpoly/jack.hpp"
#include "singpoly/linalg.hpp"

#include <string>
#include <vector>

namespace singpoly {

struct BasisElement {
  Perm w;            // wλ = alpha
  Composition alpha;
  QPoly zeta;        // ζ^x_{wλ} at κ0
  Tableau tableau;   // entry i in row j iff alpha_{N+1-i} = γ_j
  std::vector<Rational> murphy_spectrum; // eigenvalues of ω_1..ω_N
  bool annihilated = false;
  bool pole_free = false;
  bool murphy_spectrum_ok = false;
};

struct SingularModule {
  SingularLabel label;
  std::vector<BasisElement> basis; // ordered like e_tau
  std::vector<Composition> e_tau;  // reverse lattice permutations, lex descending

  bool certified() const;
};

// Throws on the first failed certificate unless strict is false, in which case
// the certificate flags are left for the caller to inspect.
SingularModule build_module(int m, int n, int N, bool strict = true);
SingularModule build_module_from_label(const SingularLabel& label, bool strict = true);

// Positive degree and D_i f = 0 for all i at the field tag of f.
bool verify_singular(const QPoly& f);

// Rank of the basis over Q.
int basis_rank(const SingularModule& module);

struct PoleReport {
  Composition nu;              // Λ - ε(ρ+kμ)
  int N = 0;
  Rational kappa0;
  int hook_multiplicity = 0;   // of κ0 in h(ν,κ+1)
  bool pole_free = false;      // ζ^x_ν at ambient N
  std::vector<Composition> partners_at_N;
  std::vector<Composition> partners_beyond; // ambient N+l-k
  Composition constructed_partner;          // only for k < l
  bool constructed_partner_found = false;
  std::uint64_t search_nodes = 0;
};
PoleReport pole_analysis(int mu, int s, int l, int rho, int m, int k,
                         std::uint64_t budget = kDefaultSearchBudget);

struct IsotypeReport {
  Rational omega_value;
  bool omega_ok = false;
  bool degree_ok = false;
  bool invariance_ok = false;
  bool ok() const { return omega_ok && degree_ok && invariance_ok; }
};
IsotypeReport isotype_check(const SingularModule& module);

struct SeminormalReport {
  std::vector<Matrix<Rational>> matrices; // index p-1 for (p,p+1)
  bool rules_ok = false;
  bool involution_ok = false;
  bool braid_ok = false;
  std::vector<std::string> violations;
};
SeminormalReport seminormal_matrices(const SingularModule& module);

bool murphy_spectrum_check(const SingularModule& module);
bool cherednik_closure_check(const SingularModule& module, const QPoly& p, std::size_t g);

} // namespace singpoly

#endif
