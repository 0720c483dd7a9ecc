#ifndef SINGPOLY_BIGDIFF_HPP
#define SINGPOLY_BIGDIFF_HPP

#include "singpoly/combinatorics.hpp"
#include "singpoly/group_algebra.hpp"

#include <map>
#include <utility>
#include <vector>

namespace singpoly {

// Data for expressing D_iζ_λ through ζ_{λ-ε(i_s)}. Indices j,k are 1-based
// positions in the list of points of decrease; i(0) = 0.
struct BigDiffPlan {
  Composition lambda;
  int N = 0;
  int M = 0;
  std::vector<int> points; // i_1 < ... < i_M

  std::map<std::pair<int, int>, KappaRatio> C;       // (j,k), 1 <= j < k <= M
  std::map<std::pair<int, int>, KappaRatio> Cprime;  // (k,j), 0 <= k < j <= M
  std::map<int, GroupElement> w;                     // w_j, 1 <= j < M
  std::map<std::pair<int, int>, GroupElement> wprime; // (k,j)
  std::map<std::pair<int, int>, GroupElement> z;     // z_{jk}, 1 <= j < k <= M
  // ζ_{ν(k,j)} = step(k,j) ζ_{ν(k+1,j)}
  std::map<std::pair<int, int>, GroupElement> nu_step;
  std::map<std::pair<int, int>, Composition> mu; // μ(j,k), 1 <= j <= k <= M
  std::map<std::pair<int, int>, Composition> nu; // ν(k,j), 0 <= k <= j <= M

  int i(int j) const { return j == 0 ? 0 : points[static_cast<std::size_t>(j - 1)]; }
  int m() const { return lambda.length(); }
  // (N+1-i_s)κ + λ_{i_s}
  KappaRatio final_coefficient(int s) const;
};

std::vector<int> points_of_decrease(const Composition& lambda);
BigDiffPlan bigdiff_plan(const Composition& lambda);

} // namespace singpoly

#endif
