#include "singpoly/combinatorics.hpp"
#include "singpoly/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace singpoly {

Composition::Composition(std::vector<int> parts) : Composition(parts, static_cast<int>(parts.size())) {}

Composition::Composition(std::vector<int> parts, int ambient) : p_(std::move(parts)) {
  for (int v : p_)
    if (v < 0) throw ParameterViolation("composition parts must be nonnegative");
  if (ambient < 0) throw ParameterViolation("negative ambient dimension");
  while (static_cast<int>(p_.size()) > ambient && p_.back() == 0) p_.pop_back();
  if (static_cast<int>(p_.size()) > ambient)
    throw ParameterViolation("composition of length " + std::to_string(p_.size()) +
                             " exceeds ambient " + std::to_string(ambient));
  p_.resize(static_cast<std::size_t>(ambient), 0);
}

int Composition::at(int i) const {
  if (i < 1 || i > ambient()) throw IndexOutOfRange("index " + std::to_string(i) + " outside [1," + std::to_string(ambient()) + "]");
  return p_[static_cast<std::size_t>(i - 1)];
}

int Composition::degree() const { return std::accumulate(p_.begin(), p_.end(), 0); }

int Composition::length() const {
  for (int k = ambient(); k-- > 0;)
    if (p_[static_cast<std::size_t>(k)] > 0) return k + 1;
  return 0;
}

bool Composition::is_partition() const { return std::is_sorted(p_.rbegin(), p_.rend()); }

Composition Composition::sorted() const {
  std::vector<int> q = p_;
  std::sort(q.begin(), q.end(), std::greater<>());
  return Composition(std::move(q), ambient());
}

Composition Composition::with_ambient(int n) const { return Composition(p_, n); }

Composition Composition::plus_unit(int i, int delta) const {
  std::vector<int> q = p_;
  if (i < 1 || i > ambient()) throw IndexOutOfRange("plus_unit index outside [1,N]");
  q[static_cast<std::size_t>(i - 1)] += delta;
  return Composition(std::move(q), ambient());
}

std::string Composition::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < p_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(p_[k]);
  }
  return s;
}

Composition parse_composition(std::string_view text, int ambient) {
  std::vector<int> parts;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty composition");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      throw ParseError("bad composition part '" + std::string(tok) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  int n = ambient > 0 ? ambient : static_cast<int>(parts.size());
  return Composition(std::move(parts), n);
}

int rank(const Composition& alpha, int i) {
  const int v = alpha.at(i);
  int r = 0;
  for (int j = 1; j <= alpha.ambient(); ++j) {
    int a = alpha[j - 1];
    if (a > v || (a == v && j <= i)) ++r;
  }
  return r;
}

std::vector<int> ranks(const Composition& alpha) {
  const int n = alpha.ambient();
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) r[static_cast<std::size_t>(i - 1)] = rank(alpha, i);
  return r;
}

std::vector<SpectralEntry> spectral_vector(const Composition& alpha) {
  std::vector<int> r = ranks(alpha);
  std::vector<SpectralEntry> out;
  out.reserve(r.size());
  for (int i = 0; i < alpha.ambient(); ++i)
    out.push_back({alpha.ambient() - r[static_cast<std::size_t>(i)], alpha[i] + 1});
  return out;
}

namespace {

Cmp dominance_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t n = std::max(a.size(), b.size());
  long sa = 0, sb = 0;
  bool ge = true, le = true;
  for (std::size_t k = 0; k < n; ++k) {
    sa += k < a.size() ? a[k] : 0;
    sb += k < b.size() ? b[k] : 0;
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return Cmp::equal;
  if (ge) return Cmp::greater;
  if (le) return Cmp::less;
  return Cmp::incomparable;
}

} // namespace

Cmp compare(const Composition& a, const Composition& b, Order order) {
  if (order == Order::dominance) return dominance_cmp(a.parts(), b.parts());
  if (a.degree() != b.degree())
    throw DegreeMismatch("triangle order needs equal degrees (" + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()) + ")");
  Cmp c = dominance_cmp(a.sorted().parts(), b.sorted().parts());
  if (c != Cmp::equal) return c;
  return dominance_cmp(a.parts(), b.parts());
}

Composition tilde(const Composition& alpha) {
  const int m = alpha.length();
  if (m == 0) throw ZeroComposition("tilde of the zero composition");
  std::vector<int> q(static_cast<std::size_t>(alpha.ambient()), 0);
  q[0] = alpha[m - 1] - 1;
  for (int k = 1; k < m; ++k) q[static_cast<std::size_t>(k)] = alpha[k - 1];
  return Composition(std::move(q), alpha.ambient());
}

std::vector<std::vector<int>> partitions_of(int n, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int cap) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int v = std::min(rem, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Composition> compositions_of(int n, int ambient) {
  std::vector<Composition> out;
  std::vector<int> cur(static_cast<std::size_t>(ambient), 0);
  std::function<void(int, int)> rec = [&](int k, int rem) {
    if (k == ambient - 1) {
      cur[static_cast<std::size_t>(k)] = rem;
      out.emplace_back(cur, ambient);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      cur[static_cast<std::size_t>(k)] = v;
      rec(k + 1, rem - v);
    }
  };
  if (ambient == 0) {
    if (n == 0) out.emplace_back(std::vector<int>{}, 0);
    return out;
  }
  rec(0, n);
  return out;
}

std::vector<std::vector<int>> distinct_permutations(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::prev_permutation(v.begin(), v.end()));
  return out;
}

KappaPoly hook_param_value(HookParam t) {
  return t == HookParam::one ? KappaPoly(1) : KappaPoly{1, 1};
}

KappaPoly hook_length(const Composition& lambda, const KappaPoly& t, int i, int j) {
  if (i < 1 || i > lambda.ambient() || j < 1 || j > lambda[i - 1])
    throw NodeOutsideDiagram("node (" + std::to_string(i) + "," + std::to_string(j) + ") not in diagram of " +
                             lambda.to_string());
  int leg = 0;
  for (int l = i + 1; l <= lambda.ambient(); ++l)
    if (lambda[l - 1] >= j) ++leg;
  return t + KappaPoly::affine(leg, lambda[i - 1] - j);
}

KappaPoly hook_length(const Composition& lambda, HookParam t, int i, int j) {
  return hook_length(lambda, hook_param_value(t), i, j);
}

KappaPoly hook_product(const Composition& lambda, const KappaPoly& t) {
  KappaPoly h(1);
  for (int i = 1; i <= lambda.ambient(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j) h *= hook_length(lambda, t, i, j);
  return h;
}

KappaPoly hook_product(const Composition& lambda, HookParam t) {
  return hook_product(lambda, hook_param_value(t));
}

KappaPoly pochhammer(const KappaPoly& t, const Composition& lambda) {
  KappaPoly p(1);
  for (int i = 1; i <= lambda.ambient(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j) p *= t + KappaPoly::affine(-(i - 1), j - 1);
  return p;
}

KappaRatio e_factor(const Composition& alpha, int sign) {
  if (sign != 1 && sign != -1) throw ParameterViolation("e_factor sign must be +1 or -1");
  std::vector<int> r = ranks(alpha);
  KappaRatio acc(1);
  const int n = alpha.ambient();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (alpha[i] >= alpha[j]) continue;
      KappaPoly den = KappaPoly::affine(r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)], alpha[j] - alpha[i]);
      // 1 + εκ/den = (den + εκ)/den
      acc *= KappaRatio(den + KappaPoly::affine(sign, 0), den);
    }
  return acc;
}

int lambda_ambient(int mu, int s, int l, int rho) { return (s + l + 1) * mu + s + rho; }

Composition build_lambda(int mu, int s, int l, int rho, int m) {
  if (mu < 1 || l < 1 || s < 0 || rho < 1 || rho > mu || m < 1)
    throw ParameterViolation("Lambda needs mu,l >= 1, s >= 0, 1 <= rho <= mu, m >= 1");
  if (std::gcd(m, mu + 1) != 1) throw ParameterViolation("Lambda needs gcd(m, mu+1) = 1");
  std::vector<int> parts(static_cast<std::size_t>(rho), m * (s + l + 1));
  for (int t = l; t >= 1; --t) parts.insert(parts.end(), static_cast<std::size_t>(mu), m * (s + t));
  return Composition(std::move(parts), lambda_ambient(mu, s, l, rho));
}

SingularLabel resolve_label(int m, int n, int N) {
  if (n < 2 || n > N) throw ParameterViolation("need 2 <= n <= N");
  if (m < 1) throw ParameterViolation("need m >= 1");
  if (m % n == 0) throw ParameterViolation("m/n must not be an integer");
  SingularLabel L;
  L.m = m;
  L.n = n;
  L.N = N;
  L.d = std::gcd(m, n);
  L.m1 = m / L.d;
  L.n1 = n / L.d;
  L.kappa0 = Rational(-m, n);
  L.kappa0.canonicalize();
  const int span = N + 1 - n;
  const int step = L.n1 - 1;
  L.l = (span + step - 1) / step - 1;
  L.rho = span - L.l * step;
  if (L.l == 0) {
    L.family = Family::two_part;
    L.mu = n - 1;
    L.s = 0;
    L.rho = 0;
    L.tau = {n - 1, span};
    L.lambda = Composition(std::vector<int>(static_cast<std::size_t>(span), m), N);
    L.gamma = {0, m};
  } else {
    L.family = Family::multi;
    L.mu = L.n1 - 1;
    L.s = L.d - 1;
    L.tau = {n - 1};
    L.tau.insert(L.tau.end(), static_cast<std::size_t>(L.l), L.mu);
    L.tau.push_back(L.rho);
    L.lambda = build_lambda(L.mu, L.s, L.l, L.rho, L.m1);
    if (L.lambda.ambient() != N) throw std::logic_error("resolve_label: ambient mismatch");
    L.gamma = {0};
    for (int j = 2; j <= L.l + 2; ++j) L.gamma.push_back(L.m1 * (L.s + j - 1));
  }
  return L;
}

bool two_part_gcd_ok(const SingularLabel& label) {
  const int mu = label.tau.at(0);
  const int rest = label.N - mu;
  if (rest <= 0) return false;
  // gcd(m, μ+1) < (μ+1)/(N-μ)
  return std::gcd(label.m, mu + 1) * rest < mu + 1;
}

Rational omega_eigenvalue(const std::vector<int>& tau) {
  long n = 0, content = 0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    n += tau[i];
    for (int j = 1; j <= tau[i]; ++j) content += j - static_cast<long>(i + 1);
  }
  return Rational(n * (n - 1) / 2 - content);
}

std::vector<Rational> content_sequence(const Composition& lambda, const Rational& kappa0) {
  if (sgn(kappa0) >= 0) throw ParameterViolation("content sequence needs kappa0 < 0");
  if (!lambda.is_partition()) throw ParameterViolation("content sequence needs a partition");
  const int n = lambda.ambient();
  std::vector<Rational> c;
  for (int k = 1; k <= n; ++k) {
    Rational v = Rational(n - k) + Rational(lambda[k - 1]) / kappa0;
    if (v.get_den() != 1) throw ParameterViolation("content " + to_string(v) + " is not an integer");
    c.push_back(v);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Tableaux

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

int Tableau::row_of(int value) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int v : rows[r])
      if (v == value) return static_cast<int>(r + 1);
  throw IndexOutOfRange("value " + std::to_string(value) + " not in tableau");
}

int Tableau::col_of(int value) const {
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] == value) return static_cast<int>(c + 1);
  throw IndexOutOfRange("value " + std::to_string(value) + " not in tableau");
}

bool Tableau::is_standard() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape[r]) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  std::vector<int> all;
  for (const auto& row : rows) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k + 1)) return false;
  return true;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << "/";
    for (std::size_t c = 0; c < rows[r].size(); ++c) os << (c ? " " : "") << rows[r][c];
  }
  return os.str();
}

namespace {

void check_shape(const std::vector<int>& shape) {
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] <= 0) throw ShapeViolation("shape parts must be positive");
    if (i > 0 && shape[i] > shape[i - 1]) throw ShapeViolation("shape must be weakly decreasing");
  }
}

} // namespace

Tableau row_reading_tableau(const std::vector<int>& shape) {
  check_shape(shape);
  Tableau t;
  t.shape = shape;
  int v = 1;
  for (int len : shape) {
    std::vector<int> row;
    for (int c = 0; c < len; ++c) row.push_back(v++);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<Tableau> syt_enumerate(const std::vector<int>& shape) {
  check_shape(shape);
  Tableau t;
  t.shape = shape;
  t.rows.assign(shape.size(), {});
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<Tableau> out;
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (static_cast<int>(t.rows[r].size()) >= shape[r]) continue;
      if (r > 0 && t.rows[r - 1].size() <= t.rows[r].size()) continue;
      t.rows[r].push_back(v);
      rec(v + 1);
      t.rows[r].pop_back();
    }
  };
  rec(1);
  return out;
}

namespace {

int gamma_index(const std::vector<int>& gamma, int v) {
  auto it = std::find(gamma.begin(), gamma.end(), v);
  if (it == gamma.end()) throw ShapeViolation("value " + std::to_string(v) + " not among the gamma values");
  return static_cast<int>(it - gamma.begin());
}

void check_gamma(const std::vector<int>& gamma) {
  if (gamma.empty()) throw ShapeViolation("empty gamma");
  for (std::size_t i = 1; i < gamma.size(); ++i)
    if (gamma[i] <= gamma[i - 1]) throw ShapeViolation("gamma must be strictly increasing");
}

} // namespace

bool is_reverse_lattice(const Composition& alpha, const std::vector<int>& gamma) {
  check_gamma(gamma);
  std::vector<int> count(gamma.size(), 0);
  for (int k = alpha.ambient(); k-- > 0;) {
    ++count[static_cast<std::size_t>(gamma_index(gamma, alpha[k]))];
    for (std::size_t i = 0; i + 1 < gamma.size(); ++i)
      if (count[i] < count[i + 1]) return false;
  }
  return true;
}

std::vector<Composition> rlp_enumerate(const Composition& lambda, const std::vector<int>& gamma) {
  check_gamma(gamma);
  for (int v : lambda.parts()) gamma_index(gamma, v);
  std::vector<Composition> out;
  for (auto& p : distinct_permutations(lambda.parts())) {
    Composition c(std::move(p), lambda.ambient());
    if (is_reverse_lattice(c, gamma)) out.push_back(std::move(c));
  }
  return out;
}

Tableau tableau_of(const Composition& alpha, const std::vector<int>& gamma) {
  check_gamma(gamma);
  const int n = alpha.ambient();
  Tableau t;
  t.rows.assign(gamma.size(), {});
  for (int i = 1; i <= n; ++i)
    t.rows[static_cast<std::size_t>(gamma_index(gamma, alpha[n - i]))].push_back(i);
  while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
  for (const auto& r : t.rows) t.shape.push_back(static_cast<int>(r.size()));
  return t;
}

// ---------------------------------------------------------------------------
// Critical pairs

bool is_critical_pair(const Composition& alpha, const Composition& beta, int m, int n) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw ParameterViolation("critical pairs need gcd(m,n) = 1");
  if (alpha.degree() != beta.degree()) throw DegreeMismatch("critical pair degrees differ");
  const int M = std::max({alpha.ambient(), beta.ambient(), alpha.length(), beta.length()});
  Composition a = alpha.with_ambient(M), b = beta.with_ambient(M);
  if (!triangle_above(a, b)) return false;
  std::vector<int> ra = ranks(a), rb = ranks(b);
  for (int i = 0; i < M; ++i) {
    long lhs = static_cast<long>(rb[static_cast<std::size_t>(i)] - ra[static_cast<std::size_t>(i)]) * m;
    long rhs = static_cast<long>(a[i] - b[i]) * n;
    if (lhs != rhs) return false;
  }
  return true;
}

Composition critical_partner(int mu, int s, int l, int rho, int m, int k) {
  build_lambda(mu, s, l, rho, m); // parameter validation
  if (k < 0 || k > l - 1) throw ParameterViolation("critical partner needs 0 <= k <= l-1");
  const int N = lambda_ambient(mu, s, l, rho);
  const int L = rho + l * mu;
  const int len = N + l - k;
  std::vector<int> beta(static_cast<std::size_t>(len), 0);
  auto cell_of = [&](int i) { return i <= rho ? 0 : (i - rho - 1) / mu + 1; };
  for (int i = 1; i <= L; ++i) {
    int j = cell_of(i);
    int v;
    if (j <= k)
      v = m * (l + s + 1 - j);
    else if (j == k + 1)
      v = 0;
    else
      v = m * (l + s + 2 - j);
    beta[static_cast<std::size_t>(i - 1)] = v;
  }
  beta[static_cast<std::size_t>(rho + k * mu - 1)] = m - 1;
  for (int i = L + 1; i <= len; ++i) beta[static_cast<std::size_t>(i - 1)] = m;
  return Composition(std::move(beta), len);
}

PartnerSearch find_critical_partners(const Composition& lambda, int m, int n, int max_len, int value_cap,
                                     std::uint64_t budget) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw ParameterViolation("critical pairs need gcd(m,n) = 1");
  PartnerSearch result;
  const int M = max_len;
  if (lambda.length() > M) return result;
  const Composition lam = lambda.with_ambient(M);
  const std::vector<int> rl = ranks(lam);
  const int total = lam.degree();
  const std::vector<int> lam_sorted = lam.sorted().parts();
  std::vector<long> lam_prefix(static_cast<std::size_t>(M) + 1, 0);
  for (int k = 0; k < M; ++k) lam_prefix[static_cast<std::size_t>(k) + 1] = lam_prefix[static_cast<std::size_t>(k)] + lam_sorted[static_cast<std::size_t>(k)];
  const int cap = std::min(value_cap, lam_sorted.empty() ? 0 : lam_sorted[0]);

  std::vector<int> beta(static_cast<std::size_t>(M), 0), target(static_cast<std::size_t>(M), 0);
  std::vector<char> used_rank(static_cast<std::size_t>(M) + 2, 0);
  std::vector<int> desc; // assigned values, descending

  auto ranks_feasible = [&](int t) {
    // positions 0..t-1 assigned
    for (int i = 0; i < t; ++i) {
      int v = beta[static_cast<std::size_t>(i)];
      int lower = 0;
      for (int j = 0; j < t; ++j) {
        int w = beta[static_cast<std::size_t>(j)];
        if (w > v || (w == v && j <= i)) ++lower;
      }
      int upper = lower + (M - t);
      int r = target[static_cast<std::size_t>(i)];
      if (r < lower || r > upper) return false;
    }
    return true;
  };

  std::function<void(int, int)> rec = [&](int t, int used) {
    if (++result.nodes > budget)
      throw SearchBudgetExceeded("critical partner search exceeded " + std::to_string(budget) + " nodes");
    if (t == M) {
      if (used != total) return;
      Composition b(beta, M);
      if (b != lam && is_critical_pair(lam, b, m, n)) result.partners.push_back(std::move(b));
      return;
    }
    const int li = lam[t];
    const int rem_slots = M - t - 1;
    for (int v = std::min(cap, total - used); v >= 0; --v) {
      if (((li - v) % m + m) % m != 0) continue;
      long num = static_cast<long>(n) * (li - v);
      int r = rl[static_cast<std::size_t>(t)] + static_cast<int>(num / m);
      if (r < 1 || r > M || used_rank[static_cast<std::size_t>(r)]) continue;
      if (total - used - v > static_cast<long>(cap) * rem_slots) break; // smaller v only worse
      beta[static_cast<std::size_t>(t)] = v;
      target[static_cast<std::size_t>(t)] = r;
      auto pos = std::upper_bound(desc.begin(), desc.end(), v, std::greater<>());
      pos = desc.insert(pos, v);
      bool ok = true;
      long acc = 0;
      for (std::size_t k = 0; k < desc.size(); ++k) {
        acc += desc[k];
        if (acc > lam_prefix[k + 1]) {
          ok = false;
          break;
        }
      }
      if (ok) ok = ranks_feasible(t + 1);
      if (ok) {
        used_rank[static_cast<std::size_t>(r)] = 1;
        rec(t + 1, used + v);
        used_rank[static_cast<std::size_t>(r)] = 0;
      }
      desc.erase(std::find(desc.begin(), desc.end(), v));
    }
    beta[static_cast<std::size_t>(t)] = 0;
  };
  rec(0, 0);
  return result;
}

} // namespace singpoly
