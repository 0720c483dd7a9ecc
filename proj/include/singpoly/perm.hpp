#ifndef SINGPOLY_PERM_HPP
#define SINGPOLY_PERM_HPP

#include <compare>
#include <string>
#include <vector>

namespace singpoly {

// Permutation of {1..N}, stored 0-based: img[k] is w(k+1)-1.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n);                       // identity
  explicit Perm(std::vector<int> images0);    // validated
  static Perm transposition(int n, int i, int j); // (i,j), 1-based
  // θ_m: k -> k+1 for k < m, m -> 1.
  static Perm cycle_theta(int n, int m);
  static Perm reversal(int n);                // w0

  int size() const noexcept { return static_cast<int>(img_.size()); }
  // 1-based image w(i).
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }
  const std::vector<int>& images() const noexcept { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  // Largest point moved (1-based), 0 for the identity.
  int support_max() const;

  friend Perm operator*(const Perm& u, const Perm& v); // u∘v
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  std::string to_string() const;

private:
  std::vector<int> img_;
};

// (wα)_i = α_{w⁻¹(i)}
std::vector<int> act(const Perm& w, const std::vector<int>& alpha);

} // namespace singpoly

#endif
