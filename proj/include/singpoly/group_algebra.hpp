#ifndef SINGPOLY_GROUP_ALGEBRA_HPP
#define SINGPOLY_GROUP_ALGEBRA_HPP

#include "singpoly/multipoly.hpp"
#include "singpoly/perm.hpp"

#include <map>
#include <string>

namespace singpoly {

// Element of Q(κ)S_N as a list of (coefficient, permutation); like terms are
// merged, nothing else is simplified.
class GroupElement {
public:
  explicit GroupElement(int n = 0) : n_(n) {}
  static GroupElement identity(int n) { return single(Perm(n), KappaRatio(1)); }
  static GroupElement single(const Perm& w, const KappaRatio& c);
  static GroupElement transposition(int n, int i, int j) {
    return single(Perm::transposition(n, i, j), KappaRatio(1));
  }

  int degree() const noexcept { return n_; }
  const std::map<Perm, KappaRatio>& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }

  void add(const Perm& w, const KappaRatio& c);
  GroupElement& operator+=(const GroupElement& o);
  GroupElement& operator-=(const GroupElement& o);
  GroupElement& scale(const KappaRatio& c);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator*(GroupElement a, const KappaRatio& c) { return a.scale(c); }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  KPoly apply(const KPoly& f) const;
  // Every permutation fixes the points above m.
  bool within_first(int m) const;
  std::string to_string() const;

private:
  int n_;
  std::map<Perm, KappaRatio> t_;
};

} // namespace singpoly

#endif
