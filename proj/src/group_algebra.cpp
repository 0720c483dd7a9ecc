#include "singpoly/group_algebra.hpp"

namespace singpoly {

GroupElement GroupElement::single(const Perm& w, const KappaRatio& c) {
  GroupElement g(w.size());
  g.add(w, c);
  return g;
}

void GroupElement::add(const Perm& w, const KappaRatio& c) {
  if (w.size() != n_) throw SizeMismatch("group element degree mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
  for (const auto& [w, c] : o.t_) add(w, c);
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) {
  for (const auto& [w, c] : o.t_) add(w, -c);
  return *this;
}

GroupElement& GroupElement::scale(const KappaRatio& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, v] : t_) v *= c;
  return *this;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.n_ != b.n_) throw SizeMismatch("group element degree mismatch");
  GroupElement out(a.n_);
  for (const auto& [u, cu] : a.t_)
    for (const auto& [v, cv] : b.t_) out.add(u * v, cu * cv);
  return out;
}

KPoly GroupElement::apply(const KPoly& f) const {
  KPoly out = f.zero_like();
  for (const auto& [w, c] : t_) out.add_scaled(apply_perm(w, f), c);
  return out;
}

bool GroupElement::within_first(int m) const {
  for (const auto& [w, c] : t_)
    if (w.support_max() > m) return false;
  return true;
}

std::string GroupElement::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + w.to_string();
  }
  return s;
}

} // namespace singpoly
