#include "hopfop/ck/ck_trees.hpp"

#include <algorithm>

#include "hopfop/operads/tm.hpp"

namespace hopfop {

BasisKey tree_key(const RootedTree& t) { return format_tree(canonicalize(t)); }

BasisKey forest_key(std::vector<RootedTree> trees) {
  if (trees.empty()) return kUnitKey;
  std::vector<BasisKey> keys;
  for (const auto& t : trees) keys.push_back(tree_key(t));
  std::sort(keys.begin(), keys.end());
  BasisKey out;
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "*" : "") + keys[i];
  return out;
}

int TreeGeneratorSource::degree(const BasisKey& generator) const {
  return parse_tree(generator).vertex_count();
}

std::vector<BasisKey> TreeGeneratorSource::generators(int degree) const {
  std::vector<BasisKey> out;
  for (const auto& t : enumerate_trees(degree)) out.push_back(tree_key(t));
  std::sort(out.begin(), out.end());
  return out;
}

LinComb TreeGeneratorSource::generator_coproduct(const BasisKey& generator) const {
  RootedTree t = parse_tree(generator);
  if (t.leg_total() != 0) throw std::invalid_argument("CK trees carry no extra legs: " + generator);
  LinComb out;
  for (const auto& cut : admissible_cuts(t))
    out.add(tensor_key(tree_key(cut.root_part), forest_key(cut.pruned)), 1);
  out.add(tensor_key(kUnitKey, tree_key(t)), 1);
  return out;
}

const FreeBialgebra& ck_tree_algebra() {
  static const FreeBialgebra algebra(std::make_shared<TreeGeneratorSource>());
  return algebra;
}

LinComb parse_forest_combination(const std::string& text) {
  // Canonicalize every factor so that hand-written input matches keys.
  const auto& B = ck_tree_algebra();
  return parse_lincomb(text).map_keys([&](const BasisKey& k) {
    std::vector<BasisKey> letters;
    for (const auto& l : B.letters(k)) letters.push_back(tree_key(parse_tree(l)));
    return B.word_key(std::move(letters));
  });
}

LinComb ck_tree_coproduct(const LinComb& forests) { return ck_tree_algebra().coproduct(forests); }

LinComb ck_tree_antipode(const LinComb& forests) { return ck_tree_algebra().antipode(forests); }

LinComb tree_bullet(const LinComb& t, const LinComb& s) {
  LinComb out;
  for (const auto& [tk, tc] : t) {
    RootedTree a = parse_tree(tk);
    for (const auto& [sk, sc] : s) {
      RootedTree b = parse_tree(sk);
      for (int v = 1; v <= a.vertex_count(); ++v) out.add(tree_key(graft(a, v, b)), tc * sc);
    }
  }
  return out;
}

LinComb tree_lie_bracket(const LinComb& t, const LinComb& s) { return tree_bullet(t, s) - tree_bullet(s, t); }

namespace {

Scalar leg_factorials(const RootedTree& t) {
  Scalar f = Scalar(factorial(static_cast<unsigned>(t.legs.size())));
  for (const auto& c : t.children) f *= leg_factorials(c);
  return f;
}

LinComb phi_impl(const LinComb& x, bool kill_saturated) {
  LinComb out;
  for (const auto& [k, c] : x) {
    if (k == TmOperad::kIdentity) continue;
    RootedTree t = parse_tree(k);
    if (kill_saturated && has_saturated_vertex(t)) continue;
    out.add(tree_key(strip_legs(t)), c * leg_factorials(t));
  }
  return out;
}

}  // namespace

LinComb phi_tm_to_lr(const LinComb& tm_element) { return phi_impl(tm_element, false); }

LinComb phi_tm_to_lr_mod_saturated(const LinComb& tm_element) { return phi_impl(tm_element, true); }

}  // namespace hopfop
