#include "singpoly/bigdiff.hpp"

namespace singpoly {

namespace {

KappaRatio kappa_over(long slope, long intercept) {
  return KappaRatio(KappaPoly::kappa(), KappaPoly::affine(slope, intercept));
}

} // namespace

std::vector<int> points_of_decrease(const Composition& lambda) {
  std::vector<int> pts;
  for (int i = 1; i <= lambda.ambient(); ++i) {
    int next = i < lambda.ambient() ? lambda.at(i + 1) : 0;
    if (lambda.at(i) > next) pts.push_back(i);
  }
  return pts;
}

KappaRatio BigDiffPlan::final_coefficient(int s) const {
  return KappaRatio(KappaPoly::affine(N + 1 - i(s), lambda.at(i(s))));
}

BigDiffPlan bigdiff_plan(const Composition& lambda) {
  if (!lambda.is_partition()) throw ParameterViolation("bigdiff needs a partition");
  if (lambda.degree() == 0) throw ZeroPartition("bigdiff of the zero partition");
  BigDiffPlan p;
  p.lambda = lambda;
  p.N = lambda.ambient();
  p.points = points_of_decrease(lambda);
  p.M = static_cast<int>(p.points.size());
  const int N = p.N, M = p.M;
  auto lam = [&](int i) { return lambda.at(i); };
  auto tr = [&](int a, int b) { return GroupElement::transposition(N, a, b); };

  for (int j = 1; j <= M; ++j)
    for (int k = j + 1; k <= M; ++k)
      p.C[{j, k}] = kappa_over(p.i(k) - p.i(j), lam(p.i(j)) - lam(p.i(k)));

  for (int j = 1; j < M; ++j) {
    GroupElement g = GroupElement::identity(N);
    for (int r = p.i(j) + 1; r <= p.i(j + 1) - 1; ++r) g += tr(p.i(j), r);
    p.w[j] = g;
  }

  for (int j = 1; j <= M; ++j)
    for (int k = j + 1; k <= M; ++k)
      p.z[{j, k}] = tr(p.i(k - 1), p.i(k)) - p.w.at(k - 1) * p.C.at({j, k});

  // μ(j,k): cyclic shift of λ on [i_j, i_k]
  for (int j = 1; j <= M; ++j)
    for (int k = j; k <= M; ++k) {
      std::vector<int> v = lambda.parts();
      for (int t = p.i(j); t < p.i(k); ++t) v[static_cast<std::size_t>(t - 1)] = lam(t + 1);
      v[static_cast<std::size_t>(p.i(k) - 1)] = lam(p.i(j));
      p.mu[{j, k}] = Composition(v, N);
    }

  // ν(k,j): λ with λ_{i_j}-1 moved to position i_k+1
  for (int j = 1; j <= M; ++j) {
    p.nu[{j, j}] = lambda.plus_unit(p.i(j), -1);
    for (int k = 0; k < j; ++k) {
      std::vector<int> v = lambda.parts();
      v[static_cast<std::size_t>(p.i(k))] = lam(p.i(j)) - 1;
      for (int t = p.i(k) + 2; t <= p.i(j); ++t) v[static_cast<std::size_t>(t - 1)] = lam(t - 1);
      p.nu[{k, j}] = Composition(v, N);
    }
  }

  for (int j = 1; j <= M; ++j) {
    for (int k = 0; k + 1 < j; ++k) {
      p.Cprime[{k, j}] = kappa_over(p.i(j) - p.i(k) - 1, lam(p.i(k + 1)) - lam(p.i(j)) + 1);
      GroupElement g = GroupElement::identity(N);
      for (int r = p.i(k) + 2; r <= p.i(k + 1); ++r) g += tr(r, p.i(k + 1) + 1);
      p.wprime[{k, j}] = g;
      p.nu_step[{k, j}] = tr(p.i(k) + 1, p.i(k + 1) + 1) - g * p.Cprime.at({k, j});
    }
    const int k = j - 1;
    if (p.i(j) == p.i(k) + 1) {
      p.nu_step[{k, j}] = GroupElement::identity(N);
      continue;
    }
    p.Cprime[{k, j}] = kappa_over(p.i(j) - p.i(k) - 1, 1);
    GroupElement g = GroupElement::identity(N);
    for (int r = p.i(k) + 2; r <= p.i(j) - 1; ++r) g += tr(r, p.i(j));
    p.wprime[{k, j}] = g;
    p.nu_step[{k, j}] = tr(p.i(k) + 1, p.i(j)) - g * p.Cprime.at({k, j});
  }
  return p;
}

} // namespace singpoly
