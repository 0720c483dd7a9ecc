#ifndef SINGPOLY_OPERATORS_HPP
#define SINGPOLY_OPERATORS_HPP

#include "singpoly/multipoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace singpoly {

struct OperatorContext {
  int N = 0;
  std::optional<Rational> kappa0; // nullopt: generic κ

  static OperatorContext generic(int n) { return {n, std::nullopt}; }
  static OperatorContext at(int n, Rational k0) { return {n, std::move(k0)}; }
};

template <class C> C kappa_value(const OperatorContext& ctx);
template <> inline KappaRatio kappa_value<KappaRatio>(const OperatorContext& ctx) {
  if (ctx.kappa0) throw FieldMismatch("generic polynomial used with a specialized context");
  return KappaRatio::kappa();
}
template <> inline Rational kappa_value<Rational>(const OperatorContext& ctx) {
  if (!ctx.kappa0) throw FieldMismatch("specialized polynomial used with a generic context");
  return *ctx.kappa0;
}

namespace detail {

inline void check_index(const OperatorContext& ctx, int i, int n) {
  if (ctx.N != n) throw AmbientMismatch("context ambient differs from polynomial");
  if (i < 1 || i > n) throw IndexOutOfRange("operator index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
}

// (x^a - (i,j)x^a)/(x_i - x_j) accumulated into out with factor c.
template <class C> void add_monomial_dd(Poly<C>& out, const Mono& a, std::size_t i, std::size_t j, const C& c) {
  const int ai = a[i], aj = a[j];
  if (ai == aj) return;
  if (ai > aj) {
    for (int t = 0; t < ai - aj; ++t) {
      Mono b = a;
      b[i] = static_cast<std::uint8_t>(ai - 1 - t);
      b[j] = static_cast<std::uint8_t>(aj + t);
      out.add_term(b, c);
    }
  } else {
    C neg = -c;
    for (int t = 0; t < aj - ai; ++t) {
      Mono b = a;
      b[j] = static_cast<std::uint8_t>(aj - 1 - t);
      b[i] = static_cast<std::uint8_t>(ai + t);
      out.add_term(b, neg);
    }
  }
}

} // namespace detail

// Closed-form divided difference, used on the hot path.
template <class C> Poly<C> divided_difference_fast(int i, int j, const Poly<C>& f) {
  if (i == j) throw IndexOutOfRange("divided difference needs i != j");
  Poly<C> out = f.zero_like();
  for (const auto& [a, c] : f.terms())
    detail::add_monomial_dd(out, a, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), c);
  return out;
}

template <class C> Poly<C> dunkl(const OperatorContext& ctx, int i, const Poly<C>& f) {
  detail::check_index(ctx, i, f.ambient());
  const C kappa = kappa_value<C>(ctx);
  const std::size_t ii = static_cast<std::size_t>(i - 1);
  Poly<C> out = f.zero_like();
  for (const auto& [a, c] : f.terms()) {
    if (a[ii] > 0) {
      Mono b = a;
      b[ii] = static_cast<std::uint8_t>(b[ii] - 1);
      out.add_term(b, c * FieldTraits<C>::from_int(a[ii]));
    }
    C ck = c * kappa;
    for (int j = 0; j < f.ambient(); ++j)
      if (static_cast<std::size_t>(j) != ii) detail::add_monomial_dd(out, a, ii, static_cast<std::size_t>(j), ck);
  }
  return out;
}

template <class C> Poly<C> cherednik(const OperatorContext& ctx, int i, const Poly<C>& f) {
  detail::check_index(ctx, i, f.ambient());
  Poly<C> out = dunkl(ctx, i, multiply_var(i, f));
  const C kappa = kappa_value<C>(ctx);
  for (int j = 1; j < i; ++j) out.add_scaled(swap_vars(j, i, f), -kappa);
  return out;
}

// ω f = Σ_{i<j} (1 - (i,j)) f
template <class C> Poly<C> omega_central(const OperatorContext& ctx, const Poly<C>& f) {
  if (ctx.N != f.ambient()) throw AmbientMismatch("context ambient differs from polynomial");
  const int n = f.ambient();
  Poly<C> out = f;
  out.scale(FieldTraits<C>::from_int(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out -= swap_vars(i, j, f);
  return out;
}

// Σ x_i D_i f = Σ x_i ∂_i f + κ ω f
template <class C> bool euler_identity_check(const OperatorContext& ctx, const Poly<C>& f) {
  Poly<C> lhs = f.zero_like(), rhs = f.zero_like();
  for (int i = 1; i <= f.ambient(); ++i) {
    lhs += multiply_var(i, dunkl(ctx, i, f));
    rhs += multiply_var(i, partial(i, f));
  }
  rhs.add_scaled(omega_central(ctx, f), kappa_value<C>(ctx));
  return lhs == rhs;
}

// ω_i f = Σ_{j=N-i+2}^{N} (N+1-i, j) f, ω_1 = 0
template <class C> Poly<C> murphy(const OperatorContext& ctx, int i, const Poly<C>& f) {
  detail::check_index(ctx, i, f.ambient());
  const int n = f.ambient();
  Poly<C> out = f.zero_like();
  for (int j = n - i + 2; j <= n; ++j) out += swap_vars(n + 1 - i, j, f);
  return out;
}

// U_i x^β as a list of (γ, a, b) meaning (a + bκ) x^γ; the diagonal term is
// included.
struct AffineTerm {
  Mono mono;
  long a;
  long b;
};
std::vector<AffineTerm> cherednik_on_monomial(const Mono& beta, int n, int i);

} // namespace singpoly

#endif
