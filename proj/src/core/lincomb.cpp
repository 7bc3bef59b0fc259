#include "hopfop/core/lincomb.hpp"

#include <cctype>
#include <stdexcept>

namespace hopfop {

LinComb::LinComb(BasisKey key, const Scalar& coeff) {
  if (coeff != 0) terms_.emplace(std::move(key), coeff);
}

Scalar LinComb::coefficient(const BasisKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar(0) : it->second;
}

LinComb& LinComb::add(const BasisKey& key, const Scalar& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LinComb& LinComb::add(BasisKey&& key, const Scalar& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

LinComb& LinComb::add_scaled(const LinComb& other, const Scalar& s) {
  if (s == 0) return *this;
  for (const auto& [k, c] : other.terms_) add(k, c * s);
  return *this;
}

LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
LinComb operator-(LinComb a) { return a *= Scalar(-1); }
LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }

BasisKey tensor_key(std::span<const BasisKey> factors) {
  BasisKey out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out.push_back(kTensorSep);
    out += factors[i];
  }
  return out;
}

BasisKey tensor_key(const BasisKey& a, const BasisKey& b) {
  BasisKey out;
  out.reserve(a.size() + b.size() + 1);
  out += a;
  out.push_back(kTensorSep);
  out += b;
  return out;
}

std::vector<BasisKey> split_tensor(std::string_view key) {
  std::vector<BasisKey> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = key.find(kTensorSep, start);
    out.emplace_back(key.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

LinComb tensor(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add(tensor_key(ka, kb), ca * cb);
  return out;
}

BasisKey dual_key(const BasisKey& primal) {
  if (is_dual_key(primal))
    throw std::invalid_argument("key '" + primal + "' is already a dual key");
  return primal + kDualMark;
}

bool is_dual_key(std::string_view key) {
  return !key.empty() && key.back() == kDualMark;
}

BasisKey primal_key(std::string_view dual) {
  if (!is_dual_key(dual))
    throw std::invalid_argument("key '" + std::string(dual) + "' is not a dual key");
  return BasisKey(dual.substr(0, dual.size() - 1));
}

Scalar pair(const LinComb& dual, const LinComb& primal) {
  for (const auto& [k, c] : primal)
    if (is_dual_key(k))
      throw std::invalid_argument("primal side contains dual key '" + k + "'");
  Scalar total = 0;
  for (const auto& [k, c] : dual) total += c * primal.coefficient(primal_key(k));
  return total;
}

std::vector<std::pair<std::string, std::string>> to_pairs(const LinComb& x) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(x.size());
  for (const auto& [k, c] : x) out.emplace_back(k, to_fraction_string(c));
  return out;
}

LinComb from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  LinComb out;
  for (const auto& [k, c] : pairs) out.add(k, parse_scalar(c));
  return out;
}

std::string to_text(const LinComb& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == kUnitKey) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + " ";
      out += k;
    }
  }
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    else if (ch == ')' || ch == ']' || ch == '}') --depth;
    else if (ch == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  return out;
}

namespace {

bool starts_number(std::string_view s) {
  return !s.empty() && std::isdigit(static_cast<unsigned char>(s[0]));
}

void add_term(LinComb& out, std::string_view term, int sign) {
  std::string t = trim(term);
  if (t.empty()) throw ParseError("empty term in linear combination");
  Scalar coeff = sign;
  std::string key;
  if (starts_number(t)) {
    auto sp = t.find(' ');
    std::string_view num = std::string_view(t).substr(0, sp);
    if (sp == std::string::npos) {
      coeff *= parse_scalar(num);
      key = kUnitKey;
    } else {
      coeff *= parse_scalar(num);
      key = trim(std::string_view(t).substr(sp + 1));
    }
  } else {
    key = t;
  }
  if (key.empty()) throw ParseError("missing basis key in term '" + t + "'");
  out.add(key, coeff);
}

}  // namespace

LinComb parse_lincomb(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty linear combination");
  if (s == "0") return {};
  LinComb out;
  int depth = 0;
  int sign = 1;
  std::size_t start = 0;
  if (s[0] == '-') {
    sign = -1;
    start = 1;
  } else if (s[0] == '+') {
    start = 1;
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    else if (ch == ')' || ch == ']' || ch == '}') --depth;
    else if (depth == 0 && (ch == '+' || ch == '-') && i > 0 && s[i - 1] == ' ' &&
             i + 1 < s.size() && s[i + 1] == ' ') {
      add_term(out, std::string_view(s).substr(start, i - start), sign);
      sign = ch == '-' ? -1 : 1;
      start = i + 1;
    }
  }
  add_term(out, std::string_view(s).substr(start), sign);
  return out;
}

}  // namespace hopfop
