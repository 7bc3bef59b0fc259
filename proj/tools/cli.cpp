#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "hopfop/ck/ck_graphs.hpp"
#include "hopfop/ck/ck_trees.hpp"
#include "hopfop/combinat/graph.hpp"
#include "hopfop/combinat/tree.hpp"
#include "hopfop/cooperad/ca_cooperad.hpp"
#include "hopfop/cooperad/finite_bialgebra.hpp"
#include "hopfop/groups/series.hpp"
#include "hopfop/hopf/operad_hopf.hpp"
#include "hopfop/operads/graph_operads.hpp"
#include "hopfop/operads/registry.hpp"
#include "hopfop/wick/wick.hpp"

namespace hopfop::cli {
namespace {

using json = nlohmann::ordered_json;

/// Every text line has exactly one JSON twin in "result".
class Output {
 public:
  explicit Output(bool as_json) : as_json_(as_json) {}

  void line(const std::string& text, json item) {
    lines_.push_back(text);
    items_.push_back(std::move(item));
  }
  void value(const std::string& text) { line(text, text); }
  void lincomb(const LinComb& x) {
    json terms = json::array();
    for (const auto& [k, c] : to_pairs(x)) terms.push_back({{"key", k}, {"coeff", c}});
    line(to_text(x), terms);
  }
  /// Returns false when some check failed.
  bool report(const std::string& suite, const AxiomReport& r) {
    for (const auto& c : r.checks) {
      std::string head = (c.pass ? "PASS " : "FAIL ") + (suite.empty() ? "" : suite + ": ") + c.name;
      std::string text = c.pass ? head + " (" + std::to_string(c.cases) + " cases)" : head + ": " + c.witness;
      json item{{"suite", suite}, {"check", c.name}, {"pass", c.pass}, {"cases", c.cases}};
      if (!c.pass) item["witness"] = c.witness;
      line(text, item);
    }
    return r.ok();
  }

  void flush(const std::string& command, std::ostream& out) const {
    if (as_json_) {
      out << json{{"command", command}, {"result", items_}}.dump(2) << "\n";
      return;
    }
    for (const auto& l : lines_) out << l << "\n";
  }

 private:
  bool as_json_;
  std::vector<std::string> lines_;
  std::vector<json> items_;
};

/// "-" reads stdin, an existing path reads the file, anything else is the
/// payload itself. Lines starting with '#' are dropped.
std::string read_input(const std::string& arg) {
  std::string raw;
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    raw = os.str();
  } else if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::ostringstream os;
    os << in.rdbuf();
    raw = os.str();
  } else {
    return arg;
  }
  std::istringstream is(raw);
  std::string line, out;
  while (std::getline(is, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out += (out.empty() ? "" : "\n") + t;
  }
  return out;
}

/// Inline series accept ';' in place of newlines.
std::string series_text(const std::string& arg) {
  std::string s = read_input(arg);
  for (char& c : s)
    if (c == ';') c = '\n';
  return s;
}

std::shared_ptr<const FiniteBialgebra> load_bialgebra(const std::string& arg) {
  return std::make_shared<const FiniteBialgebra>(FiniteBialgebra::parse(read_input(arg)));
}

LabelledGraph graph_arg(const std::string& arg) { return parse_graph(read_input(arg)); }

GraphVariant parse_graph_variant(const std::string& s) {
  if (s == "gamma") return GraphVariant::Gamma;
  if (s == "gamma-tilde") return GraphVariant::GammaTilde;
  throw ParseError("unknown graph variant '" + s + "' (gamma|gamma-tilde)");
}

/// Rejects letters that are not generators of B up to max_degree.
void check_letters(const FreeBialgebra& B, const LinComb& x, int max_degree) {
  std::set<BasisKey> gens;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& g : B.source().generators(d)) gens.insert(g);
  for (const auto& [w, c] : x)
    for (const auto& l : B.letters(w))
      if (!gens.count(l))
        throw ParseError("'" + l + "' is not a generator of degree <= " + std::to_string(max_degree));
}

/// The aggregate run behind `verify all`; every suite is bounded by
/// max_degree and by per-structure caps that keep the run short.
bool verify_all(Output& out, int N) {
  bool ok = true;
  auto cap = [N](int c) { return std::min(N, c); };

  const std::vector<std::pair<std::string, int>> law_arities = {
      {"com", N + 1}, {"ass", cap(3) + 1}, {"lie", cap(3) + 1}, {"tm", cap(3) + 1},
      {"gamma", cap(2) + 1}, {"gamma-tilde", cap(2) + 1}, {"gamma-1pi", cap(2) + 1}};
  for (const auto& [name, arity] : law_arities) {
    OperadOptions o;
    o.max_arity = arity;
    ok &= out.report("operad " + name, verify_operad_axioms(*make_operad(name, o), arity));
  }

  const std::vector<std::pair<std::string, int>> hopf_degrees = {
      {"com", N}, {"ass", cap(3)}, {"lie", cap(3)}, {"tm", cap(3)}, {"gamma-1pi", cap(3)}};
  for (const auto& [name, d] : hopf_degrees) {
    OperadOptions o;
    o.max_arity = d + 1;
    auto P = make_operad(name, o);
    ok &= out.report("H " + name, verify_hopf(P, HopfVariant::H, d));
    // Orbit duals need an action permuting the basis, which Lie lacks.
    if (name != "lie") ok &= out.report("Hbar " + name, verify_hopf(P, HopfVariant::Hbar, d));
    if (name == "com" || name == "ass") ok &= out.report("Sym " + name, verify_symmetric_maps(P, d));
  }

  BialgebraVerifyOptions trees;
  trees.max_degree = N + 1;
  trees.commutative_product = true;
  ok &= out.report("CK trees", verify_bialgebra(ck_tree_algebra(), trees));
  BialgebraVerifyOptions graphs;
  graphs.max_degree = cap(2);
  graphs.commutative_product = true;
  ok &= out.report("CK graphs", verify_bialgebra(ck_graph_algebra(), graphs));
  ok &= out.report("CK graphs", ck_iso_check(cap(3)));

  QuadraticSpace V = parse_quadratic_space("1 1\n1 2");
  AxiomCheck wick{"composition of contractions"};
  std::vector<LabelledGraph> small;
  for (int n = 1; n <= cap(3); ++n)
    for (auto& g : enumerate_graphs(n, 3)) small.push_back(std::move(g));
  for (const auto& eta : small)
    for (const auto& zeta : small) {
      if (eta.valence(1) != zeta.total_legs() || eta.n + zeta.n - 1 > cap(3)) continue;
      std::string witness;
      long cases = check_wick_composition(eta, zeta, V, &witness);
      record(wick, cases >= 0, [&] { return witness; });
    }
  ok &= out.report("Wick", AxiomReport{{wick}});

  for (const auto* name : {"kZ2.bialg", "kS3.bialg"}) {
    auto A = load_bialgebra(std::string(HOPFOP_DATA_DIR) + "/" + name);
    ok &= out.report(std::string("C_A ") + name, verify_ca_cooperad(*A, N + 1));
    if (A->is_commutative()) ok &= out.report(std::string("C_A ") + name, verify_ca_equivariance(*A, N + 1));
    ok &= out.report(std::string("B_CA ") + name, verify_bca(A, BcaVariant::Tensor, false, cap(2)));
    ok &= out.report(std::string("B_CA pinter ") + name, verify_bca(A, BcaVariant::Tensor, true, cap(2)));
    if (A->is_commutative())
      ok &= out.report(std::string("B_CA symmetric ") + name, verify_bca(A, BcaVariant::Symmetric, false, cap(2)));
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf algebras of operads, series groups and their combinatorial models", "hopfop"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string operad_name = "com", variant = "H", form_file, bialgebra_file, graph_variant = "gamma";
  int max_degree = 3, order = 5, vertex = 1, max_arity = kDefaultMaxArity, max_valence = 3;
  bool pinter = false, equivariant = false;
  std::vector<std::string> inputs;
  std::vector<int> parts;

  // Each leaf subcommand installs the action run after parsing.
  std::string command;
  std::function<int(Output&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::size_t nargs,
                  std::function<int(Output&)> f) {
    CLI::App* sub = parent->add_subcommand(name, help);
    auto* opt = sub->add_option("inputs", inputs, "Inline payloads or file paths ('-' for stdin)");
    // Fixed arity also keeps a payload like "[g,g]" from being split into a list.
    if (nargs) opt->expected(static_cast<int>(nargs))->required()->allow_extra_args(false);
    sub->callback([&, sub, f] {
      command = sub->get_parent()->get_name() + " " + sub->get_name();
      action = f;
    });
    return sub;
  };
  auto operad_opts = [&](CLI::App* sub) {
    sub->add_option("--operad", operad_name, "Operad name")->check(CLI::IsMember(operad_names()));
    sub->add_option("--max-arity", max_arity, "Arity truncation of the operad");
    sub->add_option("--max-valence", max_valence, "Vertex valence bound for graph operads");
  };
  auto operad = [&] {
    OperadOptions o;
    o.max_arity = max_arity;
    o.max_valence = max_valence;
    return make_operad(operad_name, o);
  };

  // hopf
  CLI::App* hopf = app.add_subcommand("hopf", "Coproduct and antipode in H_P or Hbar_P");
  hopf->require_subcommand(1);
  auto hopf_op = [&](bool antipode) {
    return [&, antipode](Output& o) {
      if (max_arity < max_degree + 1) max_arity = max_degree + 1;
      FreeBialgebra B = make_operad_hopf(operad(), parse_hopf_variant(variant), max_degree);
      LinComb x = parse_lincomb(read_input(inputs[0]));
      check_letters(B, x, max_degree);
      o.lincomb(antipode ? B.antipode(x) : B.coproduct(x));
      return 0;
    };
  };
  for (bool a : {false, true}) {
    auto* s = leaf(hopf, a ? "antipode" : "coprod", a ? "Antipode of an element" : "Coproduct of an element", 1,
                   hopf_op(a));
    operad_opts(s);
    s->add_option("--variant", variant, "H or Hbar")->check(CLI::IsMember({"H", "Hbar"}));
    s->add_option("--max-degree", max_degree, "Degree truncation")->required();
  }

  // series
  CLI::App* series = app.add_subcommand("series", "Composition and inversion of operad series");
  series->require_subcommand(1);
  auto parse_f = [&](const std::string& arg) {
    auto P = operad();
    return operad_name == "com" ? parse_com_polynomial(P, read_input(arg), order) : parse_series(P, series_text(arg), order);
  };
  auto emit_series = [&](Output& o, const OperadSeries& f) {
    if (operad_name == "com") {
      o.value(format_com_polynomial(f));
      return;
    }
    for (int n = 2; n <= f.order(); ++n) {
      const LinComb c = f.component(n);
      json terms = json::array();
      for (const auto& [k, v] : to_pairs(c)) terms.push_back({{"key", k}, {"coeff", v}});
      o.line(std::to_string(n) + ": " + to_text(c), {{"arity", n}, {"terms", terms}});
    }
  };
  for (bool inv : {false, true}) {
    auto* s = leaf(series, inv ? "invert" : "compose", inv ? "Inverse f^{-1}" : "Composite f o g", inv ? 1 : 2,
                   [&, inv](Output& o) {
                     if (max_arity < order) max_arity = order;
                     if (inv) emit_series(o, invert(parse_f(inputs[0])));
                     else emit_series(o, compose(parse_f(inputs[0]), parse_f(inputs[1])));
                     return 0;
                   });
    operad_opts(s);
    s->add_option("-N,--order", order, "Arity truncation of the series")->required();
  }

  // lie
  CLI::App* lie = app.add_subcommand("lie", "Pre-Lie bracket of an operad");
  lie->require_subcommand(1);
  operad_opts(leaf(lie, "bracket", "[p, q] = Σ p o_i q − Σ q o_j p", 2, [&](Output& o) {
    o.lincomb(lie_bracket(*operad(), parse_lincomb(read_input(inputs[0])), parse_lincomb(read_input(inputs[1]))));
    return 0;
  }));

  // graph
  CLI::App* graph = app.add_subcommand("graph", "Graph insertion and invariants");
  graph->require_subcommand(1);
  auto* gc = leaf(graph, "compose", "eta o_k zeta", 2, [&](Output& o) {
    o.lincomb(graph_circ(parse_graph_variant(graph_variant), graph_arg(inputs[0]), vertex, graph_arg(inputs[1])));
    return 0;
  });
  gc->add_option("--variant", graph_variant, "gamma or gamma-tilde")->check(CLI::IsMember({"gamma", "gamma-tilde"}));
  gc->add_option("--vertex", vertex, "Vertex of eta receiving zeta");
  leaf(graph, "symfactor", "Symmetry factor", 1, [&](Output& o) {
    o.value(symmetry_factor(graph_arg(inputs[0])).get_str());
    return 0;
  });
  leaf(graph, "iso", "Isomorphism up to vertex renumbering", 2, [&](Output& o) {
    IsoResult r = unnumbered_iso(graph_arg(inputs[0]), graph_arg(inputs[1]));
    if (r.iso)
      o.line("isomorphic, |Aut| = " + std::to_string(r.unnumbered_aut_count),
             {{"iso", true}, {"aut", r.unnumbered_aut_count}});
    else
      o.line("not isomorphic", {{"iso", false}});
    return 0;
  });
  leaf(graph, "is1pi", "One-particle irreducibility", 1, [&](Output& o) {
    bool b = is_1pi(graph_arg(inputs[0]));
    o.line(b ? "true" : "false", b);
    return 0;
  });

  // tree
  CLI::App* tree = app.add_subcommand("tree", "Rooted-tree Hopf algebra");
  tree->require_subcommand(1);
  leaf(tree, "cuts", "Admissible cuts of a tree", 1, [&](Output& o) {
    for (const auto& c : admissible_cuts(parse_tree(read_input(inputs[0])))) {
      std::string edges;
      for (std::size_t i = 0; i < c.edges.size(); ++i) edges += (i ? "," : "") + std::to_string(c.edges[i]);
      std::string pruned = c.pruned.empty() ? std::string(kUnitKey) : forest_key(c.pruned);
      std::string root = format_tree(c.root_part);
      o.line("{" + edges + "} " + root + " | " + pruned,
             {{"edges", c.edges}, {"root", root}, {"pruned", pruned}});
    }
    return 0;
  });
  leaf(tree, "coprod", "Coproduct of a forest combination", 1, [&](Output& o) {
    o.lincomb(ck_tree_coproduct(parse_forest_combination(read_input(inputs[0]))));
    return 0;
  });
  leaf(tree, "antipode", "Antipode of a forest combination", 1, [&](Output& o) {
    o.lincomb(ck_tree_antipode(parse_forest_combination(read_input(inputs[0]))));
    return 0;
  });
  leaf(tree, "bracket", "Grafting bracket [t, s]", 2, [&](Output& o) {
    o.lincomb(tree_lie_bracket(parse_forest_combination(read_input(inputs[0])),
                               parse_forest_combination(read_input(inputs[1]))));
    return 0;
  });

  // wick
  CLI::App* wick = app.add_subcommand("wick", "Wick contractions along a graph");
  wick->require_subcommand(1);
  for (bool normalized : {false, true}) {
    auto* s = leaf(wick, normalized ? "gamma" : "tau",
                   normalized ? "tau^eta / |Aut eta|" : "tau^eta on a tuple of monomials", 0, [&, normalized](Output& o) {
                     if (inputs.empty()) throw ParseError("expected a graph followed by one monomial per vertex");
                     QuadraticSpace V = parse_quadratic_space(read_input(form_file));
                     LabelledGraph eta = graph_arg(inputs[0]);
                     std::vector<SymWord> words;
                     for (std::size_t i = 1; i < inputs.size(); ++i) words.push_back(parse_sym_word(inputs[i]));
                     if (static_cast<int>(words.size()) != eta.n)
                       throw ParseError("expected " + std::to_string(eta.n) + " monomials");
                     o.lincomb(normalized ? gamma_algebra(eta, words, V) : tau_eta(eta, words, V));
                     return 0;
                   });
    s->add_option("--form", form_file, "d×d symmetric rational matrix (file or inline)")->required();
  }

  // ca
  CLI::App* ca = app.add_subcommand("ca", "The cooperad C_A of a finite bialgebra");
  ca->require_subcommand(1);
  auto* cav = leaf(ca, "verify", "Cooperad laws of C_A and bialgebra laws of B_{C_A}", 0, [&](Output& o) {
    auto A = load_bialgebra(bialgebra_file);
    bool ok = o.report("C_A", verify_ca_cooperad(*A, max_degree + 1));
    // Equivariance needs a commutative product, so it only counts then unless requested.
    AxiomReport eq = verify_ca_equivariance(*A, max_degree + 1);
    if (A->is_commutative() || equivariant) ok &= o.report("C_A", eq);
    else o.report("C_A (informational, A noncommutative)", eq);
    ok &= o.report("B_CA", verify_bca(A, BcaVariant::Tensor, pinter, max_degree));
    if (A->is_commutative()) ok &= o.report("B_CA symmetric", verify_bca(A, BcaVariant::Symmetric, pinter, max_degree));
    return ok ? 0 : 1;
  });
  cav->add_option("--bialgebra", bialgebra_file, "Bialgebra fixture")->required();
  cav->add_option("--max-degree", max_degree, "Degree truncation of B_{C_A}");
  cav->add_flag("--pinter", pinter, "Collapse arity one through the counit");
  cav->add_flag("--equivariant", equivariant, "Require equivariance of C_A even for noncommutative A");
  auto* cac = leaf(ca, "cocompose", "gamma* of C_A for one composition", 1, [&](Output& o) {
    o.lincomb(ca_cocomposition(*load_bialgebra(bialgebra_file), parse_lincomb(read_input(inputs[0])), parts));
    return 0;
  });
  cac->add_option("--bialgebra", bialgebra_file, "Bialgebra fixture")->required();
  cac->add_option("--parts", parts, "Block sizes n_1,…,n_k")->required()->allow_extra_args(false)->delimiter(',');

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Axiom suites");
  verify->require_subcommand(1);
  leaf(verify, "all", "Every axiom suite up to a degree", 0, [&](Output& o) {
    return verify_all(o, max_degree) ? 0 : 1;
  })->add_option("--max-degree", max_degree, "Degree truncation")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Output o(format == "json");
  try {
    int code = action(o);
    o.flush(command, out);
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hopfop::cli
