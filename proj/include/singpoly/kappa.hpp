#ifndef SINGPOLY_KAPPA_HPP
#define SINGPOLY_KAPPA_HPP

#include "singpoly/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace singpoly {

/// Univariate polynomial in the formal parameter κ with rational
/// coefficients. Coefficients are stored in ascending powers with no trailing
/// zeros, so the zero polynomial is the empty list.
class KappaPoly {
public:
  KappaPoly() = default;
  KappaPoly(long c); // NOLINT(google-explicit-constructor)
  KappaPoly(const Rational& c); // NOLINT(google-explicit-constructor)
  explicit KappaPoly(std::vector<Rational> coeffs);
  KappaPoly(std::initializer_list<long> coeffs);

  /// κ itself.
  static KappaPoly kappa();
  /// a·κ + b.
  static KappaPoly affine(const Rational& a, const Rational& b);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of κ^k (zero beyond the degree).
  Rational coeff(int k) const;
  const Rational& leading() const;
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const;

  Rational eval(const Rational& at) const;
  KappaPoly monic() const;

  KappaPoly& operator+=(const KappaPoly& o);
  KappaPoly& operator-=(const KappaPoly& o);
  KappaPoly& operator*=(const KappaPoly& o);
  KappaPoly& operator*=(const Rational& s);

  friend KappaPoly operator+(KappaPoly a, const KappaPoly& b) { return a += b; }
  friend KappaPoly operator-(KappaPoly a, const KappaPoly& b) { return a -= b; }
  friend KappaPoly operator*(const KappaPoly& a, const KappaPoly& b);
  friend KappaPoly operator-(KappaPoly a);
  friend bool operator==(const KappaPoly& a, const KappaPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division over Q: returns (quotient, remainder).
  static std::pair<KappaPoly, KappaPoly> divmod(const KappaPoly& a, const KappaPoly& b);
  /// Exact division; throws DivisionByZero / std::logic_error on a remainder.
  KappaPoly exact_div(const KappaPoly& b) const;
  bool divides(const KappaPoly& other) const;

  /// Human-readable, e.g. "2*k^2 + k - 1/2".
  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd in Q[κ], computed with the subresultant PRS over Z[κ].
/// gcd(0, 0) = 0; otherwise the result is monic.
KappaPoly gcd(const KappaPoly& a, const KappaPoly& b);

/// Largest k with (κ − at)^k dividing p. Throws ZeroPolynomial for p = 0.
int root_multiplicity(const KappaPoly& p, const Rational& at);

/// Splits a nonzero polynomial into monic linear factors found by rational
/// root extraction, with multiplicities; any remaining factor without rational
/// roots is appended with multiplicity 1. The leading coefficient is dropped.
std::vector<std::pair<KappaPoly, int>> rational_root_factors(const KappaPoly& p);

/// Element of Q(κ) in canonical form: gcd(num, den) = 1 and den monic.
class KappaRatio {
public:
  KappaRatio() : den_(1) {}
  KappaRatio(long c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
  KappaRatio(const Rational& c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
  KappaRatio(KappaPoly p) : num_(std::move(p)), den_(1) {} // NOLINT(google-explicit-constructor)
  /// Canonicalizes; throws DivisionByZero if den = 0.
  KappaRatio(KappaPoly num, KappaPoly den);

  static KappaRatio kappa() { return KappaRatio(KappaPoly::kappa()); }

  const KappaPoly& num() const noexcept { return num_; }
  const KappaPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// num(at)/den(at); throws PoleError when den(at) = 0.
  Rational eval(const Rational& at) const;
  bool has_pole_at(const Rational& at) const { return singpoly::is_zero(den_.eval(at)); }

  KappaRatio& operator+=(const KappaRatio& o);
  KappaRatio& operator-=(const KappaRatio& o);
  KappaRatio& operator*=(const KappaRatio& o);
  KappaRatio& operator/=(const KappaRatio& o);

  friend KappaRatio operator+(KappaRatio a, const KappaRatio& b) { return a += b; }
  friend KappaRatio operator-(KappaRatio a, const KappaRatio& b) { return a -= b; }
  friend KappaRatio operator*(KappaRatio a, const KappaRatio& b) { return a *= b; }
  friend KappaRatio operator/(KappaRatio a, const KappaRatio& b) { return a /= b; }
  friend KappaRatio operator-(KappaRatio a);
  friend bool operator==(const KappaRatio& a, const KappaRatio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  KappaRatio inverse() const;
  std::string to_string() const;

private:
  struct NoReduce {};
  KappaRatio(KappaPoly num, KappaPoly den, NoReduce)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  KappaPoly num_;
  KappaPoly den_;
};

inline bool is_zero(const KappaRatio& r) { return r.is_zero(); }
inline bool is_zero(const KappaPoly& p) { return p.is_zero(); }

/// Coefficient-field helpers shared by generic code over Rational and
/// KappaRatio.
template <class C> struct FieldTraits;

template <> struct FieldTraits<Rational> {
  static Rational from_int(long v) { return Rational(v); }
  static bool zero(const Rational& c) { return sgn(c) == 0; }
};

template <> struct FieldTraits<KappaRatio> {
  static KappaRatio from_int(long v) { return KappaRatio(v); }
  static bool zero(const KappaRatio& c) { return c.is_zero(); }
};

} // namespace singpoly

#endif
