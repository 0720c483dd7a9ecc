#include "singpoly/kappa.hpp"
#include "singpoly/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace singpoly {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ++i;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------
// KappaPoly

KappaPoly::KappaPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

KappaPoly::KappaPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

KappaPoly::KappaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

KappaPoly::KappaPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

KappaPoly KappaPoly::kappa() { return KappaPoly{0, 1}; }

KappaPoly KappaPoly::affine(const Rational& a, const Rational& b) {
  return KappaPoly(std::vector<Rational>{b, a});
}

void KappaPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational KappaPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

const Rational& KappaPoly::leading() const {
  if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
  return c_.back();
}

bool KappaPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational KappaPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

KappaPoly KappaPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  KappaPoly r = *this;
  Rational inv = 1 / c_.back();
  r *= inv;
  return r;
}

KappaPoly& KappaPoly::operator+=(const KappaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

KappaPoly& KappaPoly::operator-=(const KappaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

KappaPoly operator*(const KappaPoly& a, const KappaPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return KappaPoly(std::move(out));
}

KappaPoly& KappaPoly::operator*=(const KappaPoly& o) { return *this = *this * o; }

KappaPoly& KappaPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

KappaPoly operator-(KappaPoly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::pair<KappaPoly, KappaPoly> KappaPoly::divmod(const KappaPoly& a, const KappaPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {KappaPoly{}, a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lb = b.c_.back();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    Rational q = rem[k] / lb;
    quo[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c_[j];
  }
  rem.resize(db);
  return {KappaPoly(std::move(quo)), KappaPoly(std::move(rem))};
}

KappaPoly KappaPoly::exact_div(const KappaPoly& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw std::logic_error("KappaPoly::exact_div: nonzero remainder");
  return q;
}

bool KappaPoly::divides(const KappaPoly& other) const {
  if (is_zero()) return other.is_zero();
  return divmod(other, *this).second.is_zero();
}

std::string KappaPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (k == 0) {
      os << singpoly::to_string(mag);
      continue;
    }
    if (!unit) os << singpoly::to_string(mag) << "*";
    os << "k";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd over Z[κ] via the subresultant PRS

namespace {

using ZPoly = std::vector<Integer>; // ascending, no trailing zeros

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly primitive_integer(const KappaPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  out.reserve(p.coeffs().size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

ZPoly primitive_part(ZPoly p) {
  Integer g = 0;
  for (const auto& v : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return p;
}

// lc(b)^(deg a - deg b + 1) · a  mod  b
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  int e = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
  while (!a.empty() && a.size() - 1 >= db) {
    Integer lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& v : a) v *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= lead * b[j];
    ztrim(a);
    --e;
  }
  if (e > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& v : a) v *= f;
  }
  return a;
}

Integer ipow(const Integer& b, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

} // namespace

KappaPoly gcd(const KappaPoly& a, const KappaPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return KappaPoly(1);

  ZPoly A = primitive_integer(a);
  ZPoly B = primitive_integer(b);
  if (A.size() < B.size()) std::swap(A, B);
  Integer g = 1, h = 1;
  for (;;) {
    long delta = static_cast<long>(A.size()) - static_cast<long>(B.size());
    ZPoly R = pseudo_remainder(A, B);
    if (R.empty()) break;
    if (R.size() == 1) return KappaPoly(1);
    A = std::move(B);
    Integer div = g * ipow(h, delta);
    for (auto& v : R) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
    B = std::move(R);
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      Integer num = ipow(g, delta);
      Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  ZPoly P = primitive_part(std::move(B));
  std::vector<Rational> out;
  out.reserve(P.size());
  for (auto& v : P) out.emplace_back(v);
  return KappaPoly(std::move(out)).monic();
}

int root_multiplicity(const KappaPoly& p, const Rational& at) {
  if (p.is_zero()) throw ZeroPolynomial("root_multiplicity of the zero polynomial");
  std::vector<Rational> c = p.coeffs();
  int mult = 0;
  while (c.size() > 1) {
    // synthetic division by (κ - at)
    std::vector<Rational> q(c.size() - 1);
    Rational carry(0);
    for (std::size_t k = c.size(); k-- > 1;) {
      carry = carry * at + c[k];
      q[k - 1] = carry;
    }
    Rational rem = carry * at + c[0];
    if (sgn(rem) != 0) break;
    c = std::move(q);
    ++mult;
  }
  return mult;
}

namespace {

std::vector<Integer> divisors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  if (n == 0) return out;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  out = small;
  out.insert(out.end(), large.rbegin(), large.rend());
  return out;
}

} // namespace

std::vector<std::pair<KappaPoly, int>> rational_root_factors(const KappaPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("rational_root_factors of the zero polynomial");
  std::vector<std::pair<KappaPoly, int>> out;
  KappaPoly rest = p.monic();
  auto extract = [&](const Rational& r) {
    int k = root_multiplicity(rest, r);
    if (k == 0) return;
    KappaPoly lin = KappaPoly::affine(1, -r);
    for (int i = 0; i < k; ++i) rest = rest.exact_div(lin);
    out.emplace_back(lin, k);
  };
  extract(Rational(0));
  if (rest.degree() >= 1) {
    ZPoly z = primitive_integer(rest);
    const Integer limit("1000000000000");
    if (abs(z.front()) <= limit && abs(z.back()) <= limit) {
      std::vector<Rational> candidates;
      for (const auto& num : divisors(z.front()))
        for (const auto& den : divisors(z.back())) {
          Rational r(num, den);
          r.canonicalize();
          candidates.push_back(r);
          candidates.push_back(-r);
        }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (const auto& r : candidates) {
        if (rest.degree() < 1) break;
        extract(r);
      }
    }
  }
  if (rest.degree() >= 1) out.emplace_back(rest, 1);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return x.first.coeffs() < y.first.coeffs();
  });
  return out;
}

// ---------------------------------------------------------------------------
// KappaRatio

KappaRatio::KappaRatio(KappaPoly num, KappaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("KappaRatio with zero denominator");
  canonicalize();
}

void KappaRatio::canonicalize() {
  if (num_.is_zero()) {
    den_ = KappaPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    KappaPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  const Rational& lc = den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational KappaRatio::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (sgn(d) == 0)
    throw PoleError("denominator " + den_.to_string() + " vanishes at k = " + singpoly::to_string(at),
                    den_.to_string());
  return num_.eval(at) / d;
}

KappaRatio& KappaRatio::operator+=(const KappaRatio& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  KappaPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    KappaPoly n = num_ * o.den_ + o.num_ * den_;
    KappaPoly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    if (num_.is_zero()) den_ = KappaPoly(1);
    return *this;
  }
  KappaPoly b1 = den_.exact_div(g);
  KappaPoly d1 = o.den_.exact_div(g);
  KappaPoly n = num_ * d1 + o.num_ * b1;
  KappaPoly d = b1 * d1 * g;
  num_ = std::move(n);
  den_ = std::move(d);
  canonicalize();
  return *this;
}

KappaRatio& KappaRatio::operator-=(const KappaRatio& o) { return *this += -o; }

KappaRatio& KappaRatio::operator*=(const KappaRatio& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = KappaRatio();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  KappaPoly a = num_, b = den_, c = o.num_, d = o.den_;
  KappaPoly g1 = d.is_constant() ? KappaPoly(1) : gcd(a, d);
  KappaPoly g2 = b.is_constant() ? KappaPoly(1) : gcd(c, b);
  if (!g1.is_one()) {
    a = a.exact_div(g1);
    d = d.exact_div(g1);
  }
  if (!g2.is_one()) {
    c = c.exact_div(g2);
    b = b.exact_div(g2);
  }
  num_ = a * c;
  den_ = b * d;
  const Rational& lc = den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

KappaRatio KappaRatio::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero ratio");
  KappaRatio r(den_, num_, NoReduce{});
  const Rational& lc = r.den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

KappaRatio& KappaRatio::operator/=(const KappaRatio& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero ratio");
  return *this *= o.inverse();
}

KappaRatio operator-(KappaRatio a) {
  a.num_ = -a.num_;
  return a;
}

std::string KappaRatio::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const KappaPoly& p) {
    std::string s = p.to_string();
    return p.degree() >= 1 && s.find_first_of("+-", 1) != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

} // namespace singpoly
