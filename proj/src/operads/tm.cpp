#include "hopfop/operads/tm.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hopfop {

namespace {

void shift_labels(RootedTree& t, int above, int by) {
  for (auto& l : t.legs)
    if (l > above) l += by;
  for (auto& c : t.children) shift_labels(c, above, by);
}

void relabel(RootedTree& t, const Perm& sigma) {
  for (auto& l : t.legs) l = sigma[l - 1];
  for (auto& c : t.children) relabel(c, sigma);
}

bool attach_at_leg(RootedTree& t, int i, const RootedTree& s) {
  auto it = std::find(t.legs.begin(), t.legs.end(), i);
  if (it != t.legs.end()) {
    t.legs.erase(it);
    t.children.push_back(s);
    return true;
  }
  for (auto& c : t.children)
    if (attach_at_leg(c, i, s)) return true;
  return false;
}

}  // namespace

RootedTree tm_graft(const RootedTree& t, int i, const RootedTree& s) {
  const int n = t.leg_total(), m = s.leg_total();
  if (i < 1 || i > n) throw std::out_of_range("tm: slot out of range");
  RootedTree outer = t, inner = s;
  shift_labels(inner, 0, i - 1);
  // Free label i first so the shifted outer labels cannot collide with it.
  RootedTree placeholder;
  if (!attach_at_leg(outer, i, placeholder)) throw std::invalid_argument("tm: leg label missing");
  shift_labels(outer, i, m - 1);
  // Replace the placeholder child (the only legless leaf) with inner.
  std::function<bool(RootedTree&)> swap_in = [&](RootedTree& v) {
    for (auto& c : v.children) {
      if (c.legs.empty() && c.children.empty()) {
        c = inner;
        return true;
      }
      if (swap_in(c)) return true;
    }
    return false;
  };
  swap_in(outer);
  return canonicalize(std::move(outer));
}

std::vector<BasisKey> TmOperad::basis(int n) const {
  if (n < 1 || n > max_arity_) return {};
  if (n == 1) return {kIdentity};
  std::lock_guard lock(mutex_);
  auto& slot = cache_[n];
  if (slot.empty()) {
    for (const auto& t : enumerate_tm_trees(n)) slot.push_back(format_tree(t));
    std::sort(slot.begin(), slot.end());
  }
  return slot;
}

int TmOperad::arity(const BasisKey& key) const {
  if (key == kIdentity) return 1;
  return parse_tree(key).leg_total();
}

LinComb TmOperad::circ(const BasisKey& p, int i, const BasisKey& q) const {
  if (p == kIdentity) {
    if (i != 1) throw std::out_of_range("tm: slot out of range");
    return LinComb(q);
  }
  if (q == kIdentity) {
    if (i < 1 || i > arity(p)) throw std::out_of_range("tm: slot out of range");
    return LinComb(p);
  }
  return LinComb(format_tree(tm_graft(parse_tree(p), i, parse_tree(q))));
}

LinComb TmOperad::act(const BasisKey& p, const Perm& sigma) const {
  if (p == kIdentity) return LinComb(p);
  RootedTree t = parse_tree(p);
  if (static_cast<int>(sigma.size()) != t.leg_total()) throw std::invalid_argument("tm: permutation size");
  relabel(t, sigma);
  return LinComb(format_tree(canonicalize(std::move(t))));
}

BasisKey TmOperad::orbit_key(const BasisKey& p) const {
  if (p == kIdentity) return p;
  return Operad::orbit_key(p);
}

}  // namespace hopfop
