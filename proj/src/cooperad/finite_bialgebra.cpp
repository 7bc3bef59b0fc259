#include "hopfop/cooperad/finite_bialgebra.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace hopfop {

FiniteBialgebra FiniteBialgebra::parse(const std::string& text) {
  FiniteBialgebra A;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("bialgebra line " + std::to_string(lineno) + ": " + what);
  };
  std::set<std::string> known;
  auto check_label = [&](const std::string& l) {
    if (!known.count(l)) fail("unknown basis label '" + l + "'");
  };
  auto check_comb = [&](const LinComb& x, bool tensor) {
    for (const auto& [k, c] : x) {
      auto parts = split_tensor(k);
      if (parts.size() != (tensor ? 2u : 1u)) fail("wrong tensor arity in '" + k + "'");
      for (const auto& p : parts) check_label(p);
    }
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string cmd;
    if (!(ls >> cmd)) continue;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    if (cmd == "basis") {
      std::istringstream bs(rest);
      std::string l;
      while (bs >> l) {
        if (l.empty() || std::isdigit(static_cast<unsigned char>(l[0])) || l.find_first_of("|*.,[] ") != std::string::npos)
          fail("bad basis label '" + l + "'");
        if (!known.insert(l).second) fail("duplicate basis label '" + l + "'");
        A.basis_.push_back(l);
      }
    } else if (cmd == "unit") {
      A.unit_ = parse_lincomb(rest);
      check_comb(A.unit_, false);
    } else if (cmd == "counit") {
      std::istringstream cs(rest);
      std::string l, v;
      if (!(cs >> l >> v)) fail("expected 'counit <label> <value>'");
      check_label(l);
      A.counit_[l] = parse_scalar(v);
    } else if (cmd == "mul" || cmd == "coprod") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) fail("expected '='");
      std::istringstream lhs(rest.substr(0, eq));
      std::vector<std::string> args;
      std::string a;
      while (lhs >> a) {
        check_label(a);
        args.push_back(a);
      }
      LinComb value = parse_lincomb(rest.substr(eq + 1));
      if (cmd == "mul") {
        if (args.size() != 2) fail("mul takes two labels");
        check_comb(value, false);
        A.mul_[{args[0], args[1]}] = value;
      } else {
        if (args.size() != 1) fail("coprod takes one label");
        check_comb(value, true);
        A.coprod_[args[0]] = value;
      }
    } else {
      fail("unknown statement '" + cmd + "'");
    }
  }
  if (A.basis_.empty()) throw ParseError("bialgebra: no basis");
  if (auto v = A.axiom_violation(); !v.empty()) throw ParseError("bialgebra axioms fail: " + v);
  return A;
}

Scalar FiniteBialgebra::counit(const std::string& label) const {
  auto it = counit_.find(label);
  return it == counit_.end() ? Scalar(0) : it->second;
}

Scalar FiniteBialgebra::counit(const LinComb& x) const {
  Scalar s = 0;
  for (const auto& [k, c] : x) s += c * counit(k);
  return s;
}

LinComb FiniteBialgebra::multiply(const std::string& a, const std::string& b) const {
  auto it = mul_.find({a, b});
  return it == mul_.end() ? LinComb() : it->second;
}

LinComb FiniteBialgebra::multiply(const LinComb& a, const LinComb& b) const {
  LinComb out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add_scaled(multiply(ka, kb), ca * cb);
  return out;
}

const LinComb& FiniteBialgebra::coproduct(const std::string& label) const {
  static const LinComb zero;
  auto it = coprod_.find(label);
  return it == coprod_.end() ? zero : it->second;
}

bool FiniteBialgebra::is_commutative() const {
  for (const auto& a : basis_)
    for (const auto& b : basis_)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::string FiniteBialgebra::axiom_violation() const {
  for (const auto& a : basis_) {
    if (multiply(unit_, LinComb(a)) != LinComb(a) || multiply(LinComb(a), unit_) != LinComb(a))
      return "unit law at " + a;
    for (const auto& b : basis_)
      for (const auto& c : basis_)
        if (multiply(multiply(LinComb(a), LinComb(b)), LinComb(c)) !=
            multiply(LinComb(a), multiply(LinComb(b), LinComb(c))))
          return "associativity at " + a + "," + b + "," + c;
    const LinComb& d = coproduct(a);
    LinComb left, right;
    for (const auto& [k, c] : d) {
      auto p = split_tensor(k);
      left.add(p[1], c * counit(p[0]));
      right.add(p[0], c * counit(p[1]));
    }
    if (left != LinComb(a) || right != LinComb(a)) return "counit law at " + a;
    LinComb l, r;
    for (const auto& [k, c] : d) {
      auto p = split_tensor(k);
      l.add_scaled(tensor(coproduct(p[0]), LinComb(p[1])), c);
      r.add_scaled(tensor(LinComb(p[0]), coproduct(p[1])), c);
    }
    if (l != r) return "coassociativity at " + a;
    for (const auto& b : basis_) {
      LinComb ab = multiply(a, b);
      LinComb lhs;
      for (const auto& [k, c] : ab) lhs.add_scaled(coproduct(k), c);
      LinComb rhs;
      for (const auto& [ka, ca] : d)
        for (const auto& [kb, cb] : coproduct(b)) {
          auto pa = split_tensor(ka), pb = split_tensor(kb);
          rhs.add_scaled(tensor(multiply(pa[0], pb[0]), multiply(pa[1], pb[1])), ca * cb);
        }
      if (lhs != rhs) return "multiplicativity of the coproduct at " + a + "," + b;
      if (counit(ab) != counit(a) * counit(b)) return "multiplicativity of the counit at " + a + "," + b;
    }
  }
  LinComb du;
  for (const auto& [k, c] : unit_) du.add_scaled(coproduct(k), c);
  if (du != tensor(unit_, unit_)) return "coproduct of the unit";
  if (counit(unit_) != 1) return "counit of the unit";
  return {};
}

}  // namespace hopfop
