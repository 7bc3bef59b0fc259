#include "hopfop/operads/classic.hpp"

#include <stdexcept>

#include "hopfop/core/scalar.hpp"

namespace hopfop {

namespace {

int parse_positive(std::string_view s, const char* what) {
  if (s.empty()) throw ParseError(std::string(what) + ": empty number");
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError(std::string(what) + ": bad number '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  if (v <= 0) throw ParseError(std::string(what) + ": expected a positive number");
  return v;
}

}  // namespace

std::vector<BasisKey> ComOperad::basis(int n) const {
  if (n < 1 || n > max_arity_) return {};
  return {key(n)};
}

int ComOperad::arity(const BasisKey& k) const {
  if (k.size() < 2 || k[0] != 'e') throw ParseError("com: bad key '" + k + "'");
  return parse_positive(std::string_view(k).substr(1), "com");
}

LinComb ComOperad::circ(const BasisKey& p, int i, const BasisKey& q) const {
  int n = arity(p), m = arity(q);
  if (i < 1 || i > n) throw std::out_of_range("com: slot out of range");
  return LinComb(key(n + m - 1));
}

LinComb ComOperad::act(const BasisKey& p, const Perm& sigma) const {
  if (static_cast<int>(sigma.size()) != arity(p)) throw std::invalid_argument("com: permutation size");
  return LinComb(p);
}

std::vector<BasisKey> AssOperad::basis(int n) const {
  if (n < 1 || n > max_arity_) return {};
  std::vector<BasisKey> out;
  for (const auto& s : all_permutations(n)) out.push_back(key(s));
  return out;
}

Perm AssOperad::perm_of(const BasisKey& k) {
  if (k.size() < 3 || k[0] != 'x' || k[1] != '[' || k.back() != ']')
    throw ParseError("ass: bad key '" + k + "'");
  Perm p;
  for (const auto& part : split_top_level(std::string_view(k).substr(2, k.size() - 3), ','))
    p.push_back(parse_positive(part, "ass"));
  if (!is_permutation(p)) throw ParseError("ass: not a permutation '" + k + "'");
  return p;
}

int AssOperad::arity(const BasisKey& k) const { return static_cast<int>(perm_of(k).size()); }

LinComb AssOperad::circ(const BasisKey& p, int i, const BasisKey& q) const {
  Perm sigma = perm_of(p), tau = perm_of(q);
  const int n = static_cast<int>(sigma.size()), m = static_cast<int>(tau.size());
  if (i < 1 || i > n) throw std::out_of_range("ass: slot out of range");
  Perm word;
  for (int letter : sigma) {
    if (letter < i) {
      word.push_back(letter);
    } else if (letter > i) {
      word.push_back(letter + m - 1);
    } else {
      for (int t : tau) word.push_back(i - 1 + t);
    }
  }
  return LinComb(key(word));
}

LinComb AssOperad::act(const BasisKey& p, const Perm& pi) const {
  Perm sigma = perm_of(p);
  if (pi.size() != sigma.size()) throw std::invalid_argument("ass: permutation size");
  return LinComb(key(compose(pi, sigma)));
}

BasisKey AssOperad::orbit_key(const BasisKey& p) const { return key(identity_perm(arity(p))); }

}  // namespace hopfop
