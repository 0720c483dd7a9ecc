#ifndef SINGPOLY_COMBINATORICS_HPP
#define SINGPOLY_COMBINATORICS_HPP

#include "singpoly/kappa.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace singpoly {

// Nonnegative integer sequence with an explicit ambient dimension N. Parts are
// always stored padded to length N.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::vector<int> parts, int ambient);

  int ambient() const noexcept { return static_cast<int>(p_.size()); }
  int operator[](int k) const { return p_[static_cast<std::size_t>(k)]; } // 0-based
  int at(int i) const;                                                    // 1-based
  const std::vector<int>& parts() const noexcept { return p_; }

  int degree() const;
  int length() const; // ℓ(α)
  bool is_partition() const;
  Composition sorted() const; // α⁺, same ambient
  Composition with_ambient(int n) const;
  // α ± ε(i), 1-based.
  Composition plus_unit(int i, int delta) const;

  std::string to_string() const; // "2,1,0"

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> p_;
};

// "27,27,24" -> parts. Ambient defaults to the list length.
Composition parse_composition(std::string_view text, int ambient = 0);

// r(α,i) for 1 <= i <= N.
int rank(const Composition& alpha, int i);
std::vector<int> ranks(const Composition& alpha); // 1-based values, index 0..N-1

struct SpectralEntry {
  int slope;     // N - r(α,i)
  int intercept; // α_i + 1
  KappaPoly value() const { return KappaPoly::affine(slope, intercept); }
  friend bool operator==(const SpectralEntry&, const SpectralEntry&) = default;
};
std::vector<SpectralEntry> spectral_vector(const Composition& alpha);

enum class Order { dominance, triangle };
enum class Cmp { greater, less, equal, incomparable };
Cmp compare(const Composition& a, const Composition& b, Order order);
inline bool dominates(const Composition& a, const Composition& b) {
  return compare(a, b, Order::dominance) == Cmp::greater;
}
inline bool triangle_above(const Composition& a, const Composition& b) {
  return compare(a, b, Order::triangle) == Cmp::greater;
}

Composition tilde(const Composition& alpha);

// Enumeration, all in lexicographically descending order.
std::vector<std::vector<int>> partitions_of(int n, int max_parts);
std::vector<Composition> compositions_of(int n, int ambient);
std::vector<std::vector<int>> distinct_permutations(std::vector<int> v);

enum class HookParam { one, kappa_plus_one };
KappaPoly hook_param_value(HookParam t);
KappaPoly hook_length(const Composition& lambda, const KappaPoly& t, int i, int j);
KappaPoly hook_length(const Composition& lambda, HookParam t, int i, int j);
KappaPoly hook_product(const Composition& lambda, const KappaPoly& t);
KappaPoly hook_product(const Composition& lambda, HookParam t);
KappaPoly pochhammer(const KappaPoly& t, const Composition& lambda);
KappaRatio e_factor(const Composition& alpha, int sign);

// Λ(μ,s,l,ρ,m) at its ambient N = (s+l+1)μ + s + ρ.
Composition build_lambda(int mu, int s, int l, int rho, int m);
int lambda_ambient(int mu, int s, int l, int rho);

enum class Family { two_part, multi };

struct SingularLabel {
  int m = 0, n = 0, N = 0;
  int d = 0, m1 = 0, n1 = 0;
  Rational kappa0;
  Family family = Family::two_part;
  int mu = 0, s = 0, l = 0, rho = 0; // mu for both families; s,l,rho for multi
  std::vector<int> tau;
  Composition lambda;
  std::vector<int> gamma; // distinct values of λ ascending, including 0
};

SingularLabel resolve_label(int m, int n, int N);
// Two-part condition gcd(m, μ+1) < (μ+1)/(N-μ).
bool two_part_gcd_ok(const SingularLabel& label);

Rational omega_eigenvalue(const std::vector<int>& tau);
std::vector<Rational> content_sequence(const Composition& lambda, const Rational& kappa0);

// Standard Young tableau; rows and columns are 1-based in the accessors.
struct Tableau {
  std::vector<int> shape;
  std::vector<std::vector<int>> rows;

  int size() const;
  int row_of(int value) const;
  int col_of(int value) const;
  int content(int value) const { return col_of(value) - row_of(value); }
  bool is_standard() const;
  std::string to_string() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

Tableau row_reading_tableau(const std::vector<int>& shape); // T₀
std::vector<Tableau> syt_enumerate(const std::vector<int>& shape);
std::vector<Composition> rlp_enumerate(const Composition& lambda, const std::vector<int>& gamma);
bool is_reverse_lattice(const Composition& alpha, const std::vector<int>& gamma);
// Entry i sits in row j iff α_{N+1-i} = γ_j.
Tableau tableau_of(const Composition& alpha, const std::vector<int>& gamma);

bool is_critical_pair(const Composition& alpha, const Composition& beta, int m, int n);
Composition critical_partner(int mu, int s, int l, int rho, int m, int k);

struct PartnerSearch {
  std::vector<Composition> partners;
  std::uint64_t nodes = 0;
};
constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;
PartnerSearch find_critical_partners(const Composition& lambda, int m, int n, int max_len,
                                     int value_cap,
                                     std::uint64_t budget = kDefaultSearchBudget);

} // namespace singpoly

#endif
