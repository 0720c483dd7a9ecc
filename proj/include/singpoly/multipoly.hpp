#ifndef SINGPOLY_MULTIPOLY_HPP
#define SINGPOLY_MULTIPOLY_HPP

#include "singpoly/combinatorics.hpp"
#include "singpoly/errors.hpp"
#include "singpoly/kappa.hpp"
#include "singpoly/perm.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace singpoly {

constexpr int kMaxVars = 16;
using Mono = std::array<std::uint8_t, kMaxVars>;

int mono_degree(const Mono& a);
Mono make_mono(const std::vector<int>& exps);
Mono make_mono(const Composition& alpha);
std::vector<int> mono_exps(const Mono& a, int n);

// Graded lexicographic, descending: higher total degree first, then larger
// exponent vector first.
struct GrlexDesc {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// All monomials of total degree d in n variables, grlex descending.
std::vector<Mono> monomials_of_degree(int n, int d);

// Sparse polynomial in x_1..x_N. Coefficients are KappaRatio (generic κ) or
// Rational (specialized, with the κ0 value carried as the field tag).
template <class C> class Poly {
public:
  using Terms = std::map<Mono, C, GrlexDesc>;

  explicit Poly(int n = 0, std::optional<Rational> kappa0 = std::nullopt) : n_(n), k0_(std::move(kappa0)) {
    if (n < 0 || n > kMaxVars) throw AmbientMismatch("ambient must lie in [0," + std::to_string(kMaxVars) + "]");
  }

  static Poly monomial(int n, const Mono& a, C c, std::optional<Rational> kappa0 = std::nullopt) {
    Poly p(n, std::move(kappa0));
    p.add_term(a, c);
    return p;
  }
  static Poly constant(int n, C c, std::optional<Rational> kappa0 = std::nullopt) {
    return monomial(n, Mono{}, std::move(c), std::move(kappa0));
  }

  int ambient() const noexcept { return n_; }
  const std::optional<Rational>& kappa0() const noexcept { return k0_; }
  const Terms& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  std::size_t size() const noexcept { return t_.size(); }

  void add_term(const Mono& a, const C& c) {
    if (FieldTraits<C>::zero(c)) return;
    auto [it, inserted] = t_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (FieldTraits<C>::zero(it->second)) t_.erase(it);
    }
  }

  C coeff(const Mono& a) const {
    auto it = t_.find(a);
    return it == t_.end() ? FieldTraits<C>::from_int(0) : it->second;
  }

  // Total degree of the leading term; -1 for zero.
  int degree() const { return t_.empty() ? -1 : mono_degree(t_.begin()->first); }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = degree();
    for (const auto& [a, c] : t_)
      if (mono_degree(a) != d) return false;
    return true;
  }

  void check_compatible(const Poly& o) const {
    if (n_ != o.n_) throw AmbientMismatch("ambient " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    if (k0_ != o.k0_) throw FieldMismatch("coefficient fields differ");
  }

  Poly& operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [a, c] : o.t_) add_term(a, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [a, c] : o.t_) add_term(a, -c);
    return *this;
  }
  Poly& scale(const C& s) {
    if (FieldTraits<C>::zero(s)) {
      t_.clear();
      return *this;
    }
    for (auto& [a, c] : t_) c *= s;
    return *this;
  }
  void add_scaled(const Poly& o, const C& s) {
    check_compatible(o);
    if (FieldTraits<C>::zero(s)) return;
    for (const auto& [a, c] : o.t_) add_term(a, c * s);
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [m, c] : a.t_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly out(a.n_, a.k0_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m{};
        for (int k = 0; k < a.n_; ++k) {
          int e = ma[static_cast<std::size_t>(k)] + mb[static_cast<std::size_t>(k)];
          if (e > 255) throw InexactDivision("exponent overflow");
          m[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(e);
        }
        out.add_term(m, ca * cb);
      }
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.k0_ == b.k0_ && a.t_ == b.t_;
  }

  Poly zero_like() const { return Poly(n_, k0_); }

private:
  int n_;
  std::optional<Rational> k0_;
  Terms t_;
};

using KPoly = Poly<KappaRatio>;
using QPoly = Poly<Rational>;

template <class C> Poly<C> scaled(Poly<C> p, const C& s) { return p.scale(s); }

// w·f with w(x^α) = x^{wα}.
template <class C> Poly<C> apply_perm(const Perm& w, const Poly<C>& f) {
  if (w.size() != f.ambient()) throw SizeMismatch("permutation size differs from ambient");
  Poly<C> out = f.zero_like();
  const auto& img = w.images();
  for (const auto& [a, c] : f.terms()) {
    Mono b{};
    for (int k = 0; k < f.ambient(); ++k) b[static_cast<std::size_t>(img[static_cast<std::size_t>(k)])] = a[static_cast<std::size_t>(k)];
    out.add_term(b, c);
  }
  return out;
}

// (i,j)f, 1-based.
template <class C> Poly<C> swap_vars(int i, int j, const Poly<C>& f) {
  if (i < 1 || j < 1 || i > f.ambient() || j > f.ambient()) throw IndexOutOfRange("transposition index outside [1,N]");
  Poly<C> out = f.zero_like();
  for (const auto& [a, c] : f.terms()) {
    Mono b = a;
    std::swap(b[static_cast<std::size_t>(i - 1)], b[static_cast<std::size_t>(j - 1)]);
    out.add_term(b, c);
  }
  return out;
}

// Multiplies f in place by x_{k+1}^e (k 0-based).
template <class C> void shift_var(Poly<C>& f, std::size_t k, int e) {
  Poly<C> out = f.zero_like();
  for (const auto& [a, c] : f.terms()) {
    Mono b = a;
    b[k] = static_cast<std::uint8_t>(b[k] + e);
    out.add_term(b, c);
  }
  f = std::move(out);
}

// Exact quotient (f - (i,j)f)/(x_i - x_j) by iterated division in x_i.
template <class C> Poly<C> divided_difference(int i, int j, const Poly<C>& f) {
  if (i == j) throw IndexOutOfRange("divided difference needs i != j");
  Poly<C> g = f - swap_vars(i, j, f);
  const std::size_t ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
  // g = Σ_k g_k x_i^k with g_k free of x_i
  std::map<int, Poly<C>, std::greater<>> slices;
  for (const auto& [a, c] : g.terms()) {
    Mono b = a;
    int k = b[ii];
    b[ii] = 0;
    auto it = slices.try_emplace(k, g.zero_like()).first;
    it->second.add_term(b, c);
  }
  Poly<C> q = f.zero_like();
  if (slices.empty()) return q;
  // q_{k-1} = g_k + x_j q_k, remainder g_0 + x_j q_0
  Poly<C> carry = f.zero_like();
  int top = slices.begin()->first;
  for (int k = top; k >= 0; --k) {
    Poly<C> cur = carry;
    shift_var(cur, jj, 1);
    auto it = slices.find(k);
    if (it != slices.end()) cur += it->second;
    if (k == 0) {
      if (!cur.is_zero()) throw InexactDivision("numerator not divisible by x_i - x_j");
      break;
    }
    for (const auto& [a, c] : cur.terms()) {
      Mono b = a;
      b[ii] = static_cast<std::uint8_t>(k - 1);
      q.add_term(b, c);
    }
    carry = std::move(cur);
  }
  return q;
}

template <class C> Poly<C> partial(int i, const Poly<C>& f) {
  if (i < 1 || i > f.ambient()) throw IndexOutOfRange("partial index outside [1,N]");
  Poly<C> out = f.zero_like();
  const std::size_t k = static_cast<std::size_t>(i - 1);
  for (const auto& [a, c] : f.terms()) {
    if (a[k] == 0) continue;
    Mono b = a;
    b[k] = static_cast<std::uint8_t>(b[k] - 1);
    out.add_term(b, c * FieldTraits<C>::from_int(a[k]));
  }
  return out;
}

template <class C> Poly<C> multiply_var(int i, const Poly<C>& f) {
  if (i < 1 || i > f.ambient()) throw IndexOutOfRange("variable index outside [1,N]");
  Poly<C> out = f;
  shift_var(out, static_cast<std::size_t>(i - 1), 1);
  return out;
}

template <class C> C eval_ones(const Poly<C>& f) {
  C acc = FieldTraits<C>::from_int(0);
  for (const auto& [a, c] : f.terms()) acc += c;
  return acc;
}

template <class C> C coeff(const Poly<C>& f, const Composition& alpha) {
  if (alpha.ambient() != f.ambient()) throw AmbientMismatch("composition ambient differs from polynomial");
  return f.coeff(make_mono(alpha));
}

// Maps every coefficient through eval_at; PoleError names the exponent.
QPoly specialize(const KPoly& f, const Rational& kappa0);

// Σ c·x^{β} for β in the given monomial list (coefficient vector view).
template <class C> std::vector<C> coefficient_vector(const Poly<C>& f, const std::vector<Mono>& basis) {
  std::vector<C> v;
  v.reserve(basis.size());
  for (const auto& m : basis) v.push_back(f.coeff(m));
  return v;
}

inline std::string coeff_string(const Rational& q) { return to_string(q); }
inline std::string coeff_string(const KappaRatio& q) { return q.to_string(); }

// "(c)*x1^2*x3 + ..." in the map order; "0" for the zero polynomial.
template <class C> std::string poly_to_string(const Poly<C>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [a, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + coeff_string(c) + ")";
    for (int k = 0; k < f.ambient(); ++k) {
      int e = a[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      s += "*x" + std::to_string(k + 1);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

} // namespace singpoly

#endif
