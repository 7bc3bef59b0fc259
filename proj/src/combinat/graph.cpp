#include "hopfop/combinat/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

#include "hopfop/core/lincomb.hpp"

namespace hopfop {

void LabelledGraph::validate() const {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("graph: self-loops are not allowed");
  }
  for (int v : legs)
    if (v < 1 || v > n) throw std::invalid_argument("graph: leg vertex out of range");
}

int LabelledGraph::valence(int k) const {
  int d = leg_count(k);
  for (auto [a, b] : edges) d += (a == k) + (b == k);
  return d;
}

int LabelledGraph::leg_count(int k) const {
  return static_cast<int>(std::count(legs.begin(), legs.end(), k));
}

std::vector<int> LabelledGraph::leg_counts() const {
  std::vector<int> out(n, 0);
  for (int v : legs) ++out[v - 1];
  return out;
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  if (s.empty()) throw ParseError("graph: empty " + std::string(what));
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("graph: bad " + std::string(what) + " '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

std::string_view inside(std::string_view s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw ParseError("graph: expected " + std::string(1, open) + "..." + std::string(1, close));
  return s.substr(1, s.size() - 2);
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(',', start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

LabelledGraph parse_graph(std::string_view text) {
  std::string s = strip_spaces(text);
  LabelledGraph g;
  bool have_n = false;
  std::string_view rest = s;
  while (!rest.empty()) {
    auto semi = rest.find(';');
    std::string_view field = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view() : rest.substr(semi + 1);
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("graph: field without '='");
    std::string_view name = field.substr(0, eq);
    std::string_view value = field.substr(eq + 1);
    if (name == "n") {
      g.n = parse_int(value, "vertex count");
      have_n = true;
    } else if (name == "e") {
      for (auto e : split_commas(inside(value, '{', '}'))) {
        auto dash = e.find('-');
        if (dash == std::string_view::npos) throw ParseError("graph: edge must be i-j");
        int a = parse_int(e.substr(0, dash), "edge endpoint");
        int b = parse_int(e.substr(dash + 1), "edge endpoint");
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
      }
    } else if (name == "legs") {
      for (auto l : split_commas(inside(value, '[', ']'))) g.legs.push_back(parse_int(l, "leg vertex"));
    } else {
      throw ParseError("graph: unknown field '" + std::string(name) + "'");
    }
  }
  if (!have_n) throw ParseError("graph: missing n=");
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return g;
}

std::string format_graph(const LabelledGraph& g) {
  std::string out = "n=" + std::to_string(g.n) + ";e={";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.edges[i].first) + "-" + std::to_string(g.edges[i].second);
  }
  out += "};legs=[";
  for (std::size_t i = 0; i < g.legs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.legs[i]);
  }
  return out + "]";
}

LabelledGraph normalize(const LabelledGraph& g) {
  LabelledGraph c = g;
  for (auto& [a, b] : c.edges)
    if (a > b) std::swap(a, b);
  std::sort(c.edges.begin(), c.edges.end());
  std::sort(c.legs.begin(), c.legs.end());
  return c;
}

namespace {

// Counts bijections of `items` onto itself that preserve the attachment
// label, by backtracking over image choices.
template <typename T>
std::uint64_t count_label_preserving_bijections(const std::vector<T>& items) {
  const std::size_t m = items.size();
  std::vector<bool> used(m, false);
  std::function<std::uint64_t(std::size_t)> rec = [&](std::size_t i) -> std::uint64_t {
    if (i == m) return 1;
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || !(items[j] == items[i])) continue;
      used[j] = true;
      total += rec(i + 1);
      used[j] = false;
    }
    return total;
  };
  return rec(0);
}

}  // namespace

CanonicalGraph canonical_graph(const LabelledGraph& g) {
  g.validate();
  CanonicalGraph out;
  out.graph = normalize(g);
  out.numbered_aut_count = count_label_preserving_bijections(out.graph.edges) *
                           count_label_preserving_bijections(out.graph.legs);
  return out;
}

LabelledGraph relabel_vertices(const LabelledGraph& g, const Perm& perm) {
  LabelledGraph r;
  r.n = g.n;
  r.edges.reserve(g.edges.size());
  for (auto [a, b] : g.edges) {
    int x = perm[a - 1], y = perm[b - 1];
    r.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  for (int v : g.legs) r.legs.push_back(perm[v - 1]);
  return normalize(r);
}

LabelledGraph unnumbered_canonical(const LabelledGraph& g) {
  LabelledGraph best = normalize(g);
  Perm p = identity_perm(g.n);
  while (std::next_permutation(p.begin(), p.end())) {
    LabelledGraph cand = relabel_vertices(g, p);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

std::uint64_t vertex_stabilizer_size(const LabelledGraph& g) {
  LabelledGraph base = normalize(g);
  std::uint64_t count = 0;
  Perm p = identity_perm(g.n);
  do {
    if (relabel_vertices(g, p) == base) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

IsoResult unnumbered_iso(const LabelledGraph& g, const LabelledGraph& h) {
  IsoResult r;
  if (g.n != h.n || g.edges.size() != h.edges.size() || g.legs.size() != h.legs.size()) return r;
  LabelledGraph target = normalize(h);
  Perm p = identity_perm(g.n);
  do {
    if (relabel_vertices(g, p) == target) {
      r.iso = true;
      break;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  if (r.iso) r.unnumbered_aut_count = vertex_stabilizer_size(g) * canonical_graph(g).numbered_aut_count;
  return r;
}

Scalar symmetry_factor(const LabelledGraph& g) {
  return Scalar(static_cast<unsigned long>(vertex_stabilizer_size(g)));
}

bool is_connected(const LabelledGraph& g) {
  if (g.n <= 1) return true;
  std::vector<int> parent(g.n + 1);
  for (int v = 0; v <= g.n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int components = g.n;
  for (auto [a, b] : g.edges) {
    int x = find(a), y = find(b);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components == 1;
}

bool is_1pi(const LabelledGraph& g) {
  if (g.n < 1 || g.total_legs() < 2 || !is_connected(g)) return false;
  for (int v = 1; v <= g.n; ++v) {
    int d = g.valence(v);
    if (d != 2 && d != 3) return false;
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    LabelledGraph minus = g;
    minus.edges.erase(minus.edges.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_connected(minus)) return false;
  }
  return true;
}

LabelledGraph corolla_graph(int m) {
  LabelledGraph g;
  g.n = 1;
  g.legs.assign(m, 1);
  return g;
}

std::vector<LabelledGraph> enumerate_graphs(int n, int max_valence) {
  std::vector<LabelledGraph> out;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  std::vector<int> degree(n + 1, 0);
  LabelledGraph cur;
  cur.n = n;
  std::function<void(int)> legs_rec = [&](int v) {
    if (v > n) {
      out.push_back(normalize(cur));
      return;
    }
    int room = max_valence - degree[v];
    for (int l = 0; l <= room; ++l) {
      for (int t = 0; t < l; ++t) cur.legs.push_back(v);
      legs_rec(v + 1);
      for (int t = 0; t < l; ++t) cur.legs.pop_back();
    }
  };
  std::function<void(std::size_t)> edges_rec = [&](std::size_t i) {
    if (i == pairs.size()) {
      legs_rec(1);
      return;
    }
    auto [a, b] = pairs[i];
    int added = 0;
    for (;;) {
      edges_rec(i + 1);
      if (degree[a] >= max_valence || degree[b] >= max_valence) break;
      cur.edges.emplace_back(a, b);
      ++degree[a];
      ++degree[b];
      ++added;
    }
    for (int t = 0; t < added; ++t) {
      cur.edges.pop_back();
      --degree[a];
      --degree[b];
    }
  };
  edges_rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_insertable_1pi(const LabelledGraph& g) { return g.total_legs() <= 3 && is_1pi(g); }

}  // namespace hopfop
