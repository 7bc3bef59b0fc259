#include "hopfop/combinat/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

#include "hopfop/core/scalar.hpp"

namespace hopfop {

int RootedTree::vertex_count() const {
  int n = 1;
  for (const auto& c : children) n += c.vertex_count();
  return n;
}

int RootedTree::leg_total() const {
  int n = static_cast<int>(legs.size());
  for (const auto& c : children) n += c.leg_total();
  return n;
}

RootedTree canonicalize(RootedTree t) {
  std::sort(t.legs.begin(), t.legs.end());
  for (auto& c : t.children) c = canonicalize(std::move(c));
  std::sort(t.children.begin(), t.children.end());
  return t;
}

std::string format_tree(const RootedTree& t) {
  std::string out = "(l:";
  bool labelled = std::any_of(t.legs.begin(), t.legs.end(), [](int l) { return l != 0; });
  if (labelled) {
    out += "[";
    for (std::size_t i = 0; i < t.legs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(t.legs[i]);
    }
    out += "]";
  } else {
    out += std::to_string(t.legs.size());
  }
  for (const auto& c : t.children) out += " " + format_tree(c);
  return out + ")";
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  RootedTree parse() {
    RootedTree t = node();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return canonicalize(std::move(t));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  RootedTree node() {
    expect('(');
    expect('l');
    expect(':');
    RootedTree t;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '[') {
      ++pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
      } else {
        for (;;) {
          int l = number();
          if (l <= 0) fail("leg labels must be positive");
          t.legs.push_back(l);
          skip();
          if (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            continue;
          }
          expect(']');
          break;
        }
      }
    } else {
      t.legs.assign(number(), 0);
    }
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '(') {
        t.children.push_back(node());
        continue;
      }
      expect(')');
      return t;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void collect_preorder(const RootedTree& t, std::vector<const RootedTree*>& out) {
  out.push_back(&t);
  for (const auto& c : t.children) collect_preorder(c, out);
}

bool graft_at(RootedTree& t, int& remaining, const RootedTree& s) {
  if (--remaining == 0) {
    t.children.push_back(s);
    return true;
  }
  for (auto& c : t.children)
    if (graft_at(c, remaining, s)) return true;
  return false;
}

}  // namespace

RootedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

RootedTree single_vertex() { return RootedTree{}; }

RootedTree chain_tree(int n) {
  if (n < 1) throw std::invalid_argument("chain_tree: n >= 1 required");
  RootedTree t;
  for (int i = 1; i < n; ++i) {
    RootedTree parent;
    parent.children.push_back(std::move(t));
    t = std::move(parent);
  }
  return t;
}

RootedTree corolla_tree(int n) {
  RootedTree t;
  t.children.assign(n, RootedTree{});
  return t;
}

std::vector<const RootedTree*> preorder(const RootedTree& t) {
  std::vector<const RootedTree*> out;
  collect_preorder(t, out);
  return out;
}

RootedTree graft(const RootedTree& t, int v, const RootedTree& s) {
  if (v < 1 || v > t.vertex_count()) throw std::out_of_range("graft: no vertex " + std::to_string(v));
  RootedTree r = t;
  int remaining = v;
  graft_at(r, remaining, s);
  return canonicalize(std::move(r));
}

RootedTree strip_legs(const RootedTree& t) {
  RootedTree r;
  for (const auto& c : t.children) r.children.push_back(strip_legs(c));
  return canonicalize(std::move(r));
}

namespace {

struct PartialCut {
  RootedTree kept;
  std::vector<RootedTree> pruned;
  std::vector<int> edges;
};

// `index` is the preorder number of t's root within the whole tree.
std::vector<PartialCut> cuts_below(const RootedTree& t, int index) {
  std::vector<PartialCut> acc(1);
  acc[0].kept.legs = t.legs;
  int child_index = index + 1;
  for (const auto& c : t.children) {
    std::vector<PartialCut> options;
    PartialCut drop;
    drop.pruned.push_back(c);
    drop.edges.push_back(child_index);
    options.push_back(std::move(drop));
    for (auto& sub : cuts_below(c, child_index)) {
      PartialCut keep;
      keep.kept.legs = {};
      keep.pruned = std::move(sub.pruned);
      keep.edges = std::move(sub.edges);
      // Stash the kept child subtree in kept.children[0].
      keep.kept.children.push_back(std::move(sub.kept));
      options.push_back(std::move(keep));
    }
    std::vector<PartialCut> next;
    for (const auto& a : acc) {
      for (const auto& o : options) {
        PartialCut m = a;
        if (!o.kept.children.empty()) m.kept.children.push_back(o.kept.children[0]);
        m.pruned.insert(m.pruned.end(), o.pruned.begin(), o.pruned.end());
        m.edges.insert(m.edges.end(), o.edges.begin(), o.edges.end());
        next.push_back(std::move(m));
      }
    }
    acc = std::move(next);
    child_index += c.vertex_count();
  }
  return acc;
}

}  // namespace

std::vector<Cut> admissible_cuts(const RootedTree& t) {
  RootedTree ct = canonicalize(t);
  std::vector<Cut> out;
  for (auto& p : cuts_below(ct, 1)) {
    Cut c;
    std::sort(p.edges.begin(), p.edges.end());
    c.edges = std::move(p.edges);
    c.root_part = canonicalize(std::move(p.kept));
    c.pruned = std::move(p.pruned);
    std::sort(c.pruned.begin(), c.pruned.end());
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

std::vector<RootedTree> enumerate_trees(int n) {
  if (n < 1) return {};
  std::set<RootedTree> cur{single_vertex()};
  for (int k = 2; k <= n; ++k) {
    std::set<RootedTree> next;
    for (const auto& t : cur)
      for (int v = 1; v <= t.vertex_count(); ++v) next.insert(graft(t, v, single_vertex()));
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

namespace {

// Set partitions of `items` into blocks of size >= 2.
void partitions_min2(const std::vector<int>& items, std::size_t i, std::vector<std::vector<int>>& blocks,
                     const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (i == items.size()) {
    for (const auto& b : blocks)
      if (b.size() < 2) return;
    emit(blocks);
    return;
  }
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    blocks[j].push_back(items[i]);
    partitions_min2(items, i + 1, blocks, emit);
    blocks[j].pop_back();
  }
  blocks.push_back({items[i]});
  partitions_min2(items, i + 1, blocks, emit);
  blocks.pop_back();
}

std::vector<RootedTree> tm_trees_on(const std::vector<int>& labels) {
  std::vector<RootedTree> out;
  const std::size_t n = labels.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> here, rest;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? here : rest).push_back(labels[i]);
    std::vector<std::vector<int>> blocks;
    partitions_min2(rest, 0, blocks, [&](const std::vector<std::vector<int>>& parts) {
      if (here.size() + parts.size() < 2) return;
      std::vector<RootedTree> partial{RootedTree{here, {}}};
      for (const auto& part : parts) {
        auto subs = tm_trees_on(part);
        std::vector<RootedTree> next;
        for (const auto& p : partial)
          for (const auto& s : subs) {
            RootedTree q = p;
            q.children.push_back(s);
            next.push_back(std::move(q));
          }
        partial = std::move(next);
      }
      for (auto& p : partial) out.push_back(canonicalize(std::move(p)));
    });
  }
  return out;
}

}  // namespace

std::vector<RootedTree> enumerate_tm_trees(int n) {
  if (n < 2) return {};
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  auto out = tm_trees_on(labels);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_saturated_vertex(const RootedTree& t) {
  if (t.legs.empty()) return true;
  return std::any_of(t.children.begin(), t.children.end(), has_saturated_vertex);
}

}  // namespace hopfop
