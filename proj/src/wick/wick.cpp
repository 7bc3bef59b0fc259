#include "hopfop/wick/wick.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hopfop/operads/graph_operads.hpp"

namespace hopfop {

void QuadraticSpace::validate() const {
  if (d < 1 || static_cast<int>(b.size()) != d) throw std::invalid_argument("quadratic form: need a d×d array");
  for (const auto& row : b)
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("quadratic form: ragged row");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (b[i][j] != b[j][i]) throw std::invalid_argument("quadratic form: not symmetric");
}

QuadraticSpace parse_quadratic_space(const std::string& text) {
  QuadraticSpace V;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<Scalar> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_scalar(tok));
    if (!row.empty()) V.b.push_back(std::move(row));
  }
  V.d = static_cast<int>(V.b.size());
  try {
    V.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return V;
}

BasisKey sym_word_key(SymWord w) {
  std::sort(w.begin(), w.end());
  std::string out = "{";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + "}";
}

SymWord parse_sym_word(std::string_view key) {
  std::string s = trim(key);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw ParseError("word: expected {i,j,...}");
  SymWord w;
  for (const auto& part : split_top_level(std::string_view(s).substr(1, s.size() - 2), ',')) {
    if (part.empty()) continue;
    int v = 0;
    for (char c : part) {
      if (c < '0' || c > '9') throw ParseError("word: bad index '" + part + "'");
      v = v * 10 + (c - '0');
    }
    if (v < 1) throw ParseError("word: indices start at 1");
    w.push_back(v);
  }
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<SymWord> sym_words(int k, int d) {
  std::vector<SymWord> out;
  SymWord cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int a = lo; a <= d; ++a) {
      cur.push_back(a);
      rec(a);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

namespace {

BasisKey slots_key(const std::vector<SymWord>& slots) {
  std::vector<BasisKey> keys;
  for (const auto& s : slots) keys.push_back(sym_word_key(s));
  return tensor_key(keys);
}

std::vector<SymWord> parse_slots(const BasisKey& key) {
  std::vector<SymWord> out;
  for (const auto& f : split_tensor(key)) out.push_back(parse_sym_word(f));
  return out;
}

// Contracts in place on a combination of slot tuples.
LinComb contract_all(const LinComb& x, const std::pair<int, int>& e, const QuadraticSpace& V) {
  LinComb out;
  for (const auto& [k, c] : x) out.add_scaled(contract_edge(parse_slots(k), e.first, e.second, V), c);
  return out;
}

}  // namespace

LinComb contract_edge(const std::vector<SymWord>& slots, int i, int j, const QuadraticSpace& V) {
  LinComb out;
  const auto& wi = slots.at(i - 1);
  const auto& wj = slots.at(j - 1);
  for (std::size_t a = 0; a < wi.size(); ++a)
    for (std::size_t b = 0; b < wj.size(); ++b) {
      const Scalar& f = V.form(wi[a], wj[b]);
      if (f == 0) continue;
      auto next = slots;
      next[i - 1].erase(next[i - 1].begin() + a);
      next[j - 1].erase(next[j - 1].begin() + b);
      out.add(slots_key(next), f);
    }
  return out;
}

LinComb tau_eta(const LabelledGraph& eta, const std::vector<SymWord>& args, const QuadraticSpace& V) {
  if (static_cast<int>(args.size()) != eta.n) throw std::invalid_argument("tau: one argument per vertex");
  for (int v = 1; v <= eta.n; ++v)
    if (static_cast<int>(args[v - 1].size()) != eta.valence(v)) return {};
  for (const auto& w : args)
    for (int l : w)
      if (l < 1 || l > V.d) throw std::invalid_argument("tau: letter outside 1..d");
  LinComb state(slots_key(args));
  for (const auto& e : eta.edges) {
    state = contract_all(state, e, V);
    if (state.is_zero()) return {};
  }
  Scalar weight = 1;
  for (int c : eta.leg_counts()) weight *= Scalar(factorial(c));
  LinComb out;
  for (const auto& [k, c] : state) {
    SymWord merged;
    for (const auto& w : parse_slots(k)) merged.insert(merged.end(), w.begin(), w.end());
    out.add(sym_word_key(merged), c * weight);
  }
  return out;
}

LinComb gamma_algebra(const LabelledGraph& eta, const std::vector<SymWord>& args, const QuadraticSpace& V) {
  auto aut = canonical_graph(eta).numbered_aut_count;
  return tau_eta(eta, args, V) * (Scalar(1) / Scalar(static_cast<unsigned long>(aut)));
}

long check_wick_composition(const LabelledGraph& eta, const LabelledGraph& zeta, const QuadraticSpace& V,
                            std::string* witness) {
  if (eta.valence(1) != zeta.total_legs()) return 0;
  LinComb composite = graph_circ(GraphVariant::GammaTilde, eta, 1, zeta);
  std::vector<std::pair<LabelledGraph, Scalar>> terms;
  for (const auto& [k, c] : composite) terms.emplace_back(parse_graph(k), c);

  std::vector<std::vector<SymWord>> choices;
  for (int v = 1; v <= zeta.n; ++v) choices.push_back(sym_words(zeta.valence(v), V.d));
  for (int v = 2; v <= eta.n; ++v) choices.push_back(sym_words(eta.valence(v), V.d));
  std::vector<std::size_t> sizes;
  for (const auto& c : choices) sizes.push_back(c.size());

  long checked = 0;
  bool failed = false;
  for_each_index_tuple(sizes, [&](std::span<const std::size_t> idx) {
    if (failed) return;
    std::vector<SymWord> za, ea;
    for (int v = 0; v < zeta.n; ++v) za.push_back(choices[v][idx[v]]);
    for (int v = zeta.n; v < static_cast<int>(choices.size()); ++v) ea.push_back(choices[v][idx[v]]);
    LinComb lhs;
    for (const auto& [w, c] : tau_eta(zeta, za, V)) {
      std::vector<SymWord> outer{parse_sym_word(w)};
      outer.insert(outer.end(), ea.begin(), ea.end());
      lhs.add_scaled(tau_eta(eta, outer, V), c);
    }
    std::vector<SymWord> all = za;
    all.insert(all.end(), ea.begin(), ea.end());
    LinComb rhs;
    for (const auto& [g, c] : terms) rhs.add_scaled(tau_eta(g, all, V), c);
    ++checked;
    if (lhs != rhs) {
      failed = true;
      if (witness) {
        *witness = format_graph(eta) + " o_1 " + format_graph(zeta) + " args ";
        for (const auto& w : all) *witness += sym_word_key(w) + " ";
        *witness += ": " + to_text(lhs - rhs);
      }
    }
  });
  return failed ? -1 : checked;
}

}  // namespace hopfop
