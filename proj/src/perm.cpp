#include "singpoly/perm.hpp"
#include "singpoly/errors.hpp"

#include <sstream>

namespace singpoly {

Perm::Perm(int n) : img_(static_cast<std::size_t>(n)) {
  for (int k = 0; k < n; ++k) img_[static_cast<std::size_t>(k)] = k;
}

Perm::Perm(std::vector<int> images0) : img_(std::move(images0)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw SizeMismatch("not a permutation of 0.." + std::to_string(size() - 1));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw IndexOutOfRange("transposition index outside [1,N]");
  Perm p(n);
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Perm Perm::cycle_theta(int n, int m) {
  if (m < 1 || m > n) throw IndexOutOfRange("theta_m needs 1 <= m <= N");
  Perm p(n);
  for (int k = 1; k < m; ++k) p.img_[static_cast<std::size_t>(k - 1)] = k;
  p.img_[static_cast<std::size_t>(m - 1)] = 0;
  return p;
}

Perm Perm::reversal(int n) {
  Perm p(n);
  for (int k = 0; k < n; ++k) p.img_[static_cast<std::size_t>(k)] = n - 1 - k;
  return p;
}

Perm Perm::inverse() const {
  Perm p(size());
  for (int k = 0; k < size(); ++k) p.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(k)])] = k;
  return p;
}

bool Perm::is_identity() const {
  for (int k = 0; k < size(); ++k)
    if (img_[static_cast<std::size_t>(k)] != k) return false;
  return true;
}

int Perm::support_max() const {
  for (int k = size(); k-- > 0;)
    if (img_[static_cast<std::size_t>(k)] != k) return k + 1;
  return 0;
}

Perm operator*(const Perm& u, const Perm& v) {
  if (u.size() != v.size()) throw SizeMismatch("permutation sizes differ");
  Perm p(u.size());
  for (int k = 0; k < u.size(); ++k)
    p.img_[static_cast<std::size_t>(k)] = u.img_[static_cast<std::size_t>(v.img_[static_cast<std::size_t>(k)])];
  return p;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k < size(); ++k) os << (k ? "," : "") << img_[static_cast<std::size_t>(k)] + 1;
  os << "]";
  return os.str();
}

std::vector<int> act(const Perm& w, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != w.size()) throw SizeMismatch("permutation/composition sizes differ");
  std::vector<int> out(alpha.size());
  for (int k = 0; k < w.size(); ++k)
    out[static_cast<std::size_t>(w.images()[static_cast<std::size_t>(k)])] = alpha[static_cast<std::size_t>(k)];
  return out;
}

} // namespace singpoly
