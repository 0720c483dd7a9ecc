#include "singpoly/operators.hpp"

#include <map>

namespace singpoly {

std::vector<AffineTerm> cherednik_on_monomial(const Mono& beta, int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("operator index outside [1,N]");
  const std::size_t ii = static_cast<std::size_t>(i - 1);
  std::map<Mono, std::pair<long, long>, GrlexDesc> acc;
  acc[beta].first += beta[ii] + 1;
  // κ Σ_{j≠i} δ_ij x^{β+e_i}
  const int a = beta[ii] + 1;
  for (int j = 0; j < n; ++j) {
    if (static_cast<std::size_t>(j) == ii) continue;
    const std::size_t jj = static_cast<std::size_t>(j);
    const int b = beta[jj];
    if (a > b) {
      for (int t = 0; t < a - b; ++t) {
        Mono g = beta;
        g[ii] = static_cast<std::uint8_t>(a - 1 - t);
        g[jj] = static_cast<std::uint8_t>(b + t);
        acc[g].second += 1;
      }
    } else if (a < b) {
      for (int t = 0; t < b - a; ++t) {
        Mono g = beta;
        g[jj] = static_cast<std::uint8_t>(b - 1 - t);
        g[ii] = static_cast<std::uint8_t>(a + t);
        acc[g].second -= 1;
      }
    }
  }
  // -κ Σ_{j<i} (j,i) x^β
  for (std::size_t j = 0; j < ii; ++j) {
    Mono g = beta;
    std::swap(g[j], g[ii]);
    acc[g].second -= 1;
  }
  std::vector<AffineTerm> out;
  for (const auto& [g, ab] : acc)
    if (ab.first != 0 || ab.second != 0) out.push_back({g, ab.first, ab.second});
  return out;
}

} // namespace singpoly
