#include "hopfop/groups/series.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hopfop/operads/classic.hpp"

namespace hopfop {

OperadSeries::OperadSeries(OperadPtr operad, int order)
    : operad_(std::move(operad)), order_(order), components_(std::max(order, 1) + 1) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  if (order > operad_->max_arity())
    throw std::invalid_argument("series order " + std::to_string(order) + " exceeds the arity cap of " +
                                operad_->name());
}

LinComb OperadSeries::component(int n) const {
  if (n == 1) return operad_->identity();
  if (n < 1 || n > order_) return {};
  return components_[n];
}

void OperadSeries::set_component(int n, LinComb value) {
  if (n < 2 || n > order_) throw std::out_of_range("series component " + std::to_string(n) + " out of range");
  for (const auto& [k, c] : value)
    if (operad_->arity(k) != n)
      throw std::invalid_argument("series component " + std::to_string(n) + ": key '" + k + "' has arity " +
                                  std::to_string(operad_->arity(k)));
  components_[n] = std::move(value);
}

bool operator==(const OperadSeries& a, const OperadSeries& b) {
  return a.operad_->name() == b.operad_->name() && a.order_ == b.order_ && a.components_ == b.components_;
}

namespace {

void check_compatible(const OperadSeries& f, const OperadSeries& g) {
  if (f.operad().name() != g.operad().name()) throw std::invalid_argument("series over different operads");
  if (f.order() != g.order()) throw std::invalid_argument("series truncated at different orders");
}

// Σ_{m_1+…+m_k=n} γ(f_k; g_{m_1},…,g_{m_k}).
LinComb composite_term(const Operad& P, const LinComb& fk, int k, int n,
                       const std::function<LinComb(int)>& g) {
  LinComb out;
  if (fk.is_zero()) return out;
  for (const auto& m : compositions(n, k)) {
    std::vector<LinComb> qs;
    bool zero = false;
    for (int mi : m) {
      qs.push_back(g(mi));
      if (qs.back().is_zero()) zero = true;
    }
    if (!zero) out += gamma(P, fk, qs);
  }
  return out;
}

}  // namespace

OperadSeries compose(const OperadSeries& f, const OperadSeries& g) {
  check_compatible(f, g);
  OperadSeries r(f.operad_ptr(), f.order());
  const Operad& P = f.operad();
  for (int n = 2; n <= f.order(); ++n) {
    LinComb total;
    for (int k = 1; k <= n; ++k)
      total += composite_term(P, f.component(k), k, n, [&](int m) { return g.component(m); });
    r.set_component(n, std::move(total));
  }
  if (f.coinvariant() || g.coinvariant()) return to_coinvariants(r);
  return r;
}

OperadSeries invert(const OperadSeries& f) {
  const Operad& P = f.operad();
  OperadSeries g(f.operad_ptr(), f.order());
  for (int n = 2; n <= f.order(); ++n) {
    LinComb gn = -f.component(n);
    for (int k = 2; k <= n - 1; ++k)
      gn -= composite_term(P, f.component(k), k, n, [&](int m) { return g.component(m); });
    g.set_component(n, std::move(gn));
  }
  if (f.coinvariant()) g = to_coinvariants(g);
  OperadSeries id = OperadSeries::identity(f.operad_ptr(), f.order());
  OperadSeries check_left = compose(g, f), check_right = compose(f, g);
  if (f.coinvariant()) id = to_coinvariants(id);
  if (!(check_left == id) || !(check_right == id))
    throw std::logic_error("invert: the computed series is not a two-sided inverse");
  return g;
}

OperadSeries to_coinvariants(const OperadSeries& f) {
  OperadSeries r = f;
  for (int n = 2; n <= f.order(); ++n) r.components_[n] = to_coinvariants(f.operad(), f.components_[n]);
  r.coinvariant_ = true;
  return r;
}

GeneratorValues series_character(const OperadSeries& f) {
  return [f](const BasisKey& generator) -> Scalar {
    BasisKey p = primal_key(generator);
    int n = f.operad().arity(p);
    return f.component(n).coefficient(p);
  };
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

OperadSeries parse_com_polynomial(OperadPtr com, const std::string& text, int order) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Scalar> coeff(order + 1, Scalar(0));
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("polynomial: expected '+' or '-' at offset " + std::to_string(pos));
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    auto xpos = term.find('x');
    Scalar c = 1;
    int power = 0;
    if (xpos == std::string::npos) {
      c = parse_scalar(term);
    } else {
      std::string head = term.substr(0, xpos);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) c = parse_scalar(head);
      std::string tail = term.substr(xpos + 1);
      if (tail.empty()) power = 1;
      else if (tail[0] == '^') power = std::stoi(tail.substr(1));
      else throw ParseError("polynomial: bad term '" + term + "'");
    }
    if (power > order) throw TruncationError("polynomial: x^" + std::to_string(power) + " exceeds order");
    if (power < 1) throw ParseError("polynomial: the constant term must vanish");
    coeff[power] += sign * c;
  }
  if (coeff[1] != 1) throw ParseError("polynomial: the coefficient of x must be 1");
  OperadSeries f(std::move(com), order);
  for (int n = 2; n <= order; ++n)
    if (coeff[n] != 0) f.set_component(n, LinComb(ComOperad::key(n), coeff[n]));
  return f;
}

std::string format_com_polynomial(const OperadSeries& f) {
  std::string out = "x";
  for (int n = 2; n <= f.order(); ++n) {
    Scalar c = f.component(n).coefficient(ComOperad::key(n));
    if (c == 0) continue;
    out += c < 0 ? " - " : " + ";
    Scalar a = abs(c);
    std::string mono = "x^" + std::to_string(n);
    if (a == 1) out += mono;
    else if (a.get_den() == 1) out += to_string(a) + mono;
    else out += to_string(a) + " " + mono;
  }
  return out;
}

std::string format_series(const OperadSeries& f) {
  std::ostringstream os;
  for (int n = 2; n <= f.order(); ++n) os << n << ": " << to_text(f.component(n)) << "\n";
  return os.str();
}

OperadSeries parse_series(OperadPtr operad, const std::string& text, int order) {
  OperadSeries f(std::move(operad), order);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) throw ParseError("series: expected '<arity>: <combination>'");
    int n = std::stoi(t.substr(0, colon));
    if (n == 1) continue;
    f.set_component(n, parse_lincomb(t.substr(colon + 1)));
  }
  return f;
}

}  // namespace hopfop
