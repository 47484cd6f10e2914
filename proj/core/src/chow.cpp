#include "dp3/chow.hpp"

#include <cctype>
#include <stdexcept>

namespace dp3 {

namespace {

void add_term(std::map<std::pair<Int, Int>, Int>& terms, Int m, Int l, Int c) {
  if (c == 0) return;
  auto key = std::make_pair(m, l);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

ChowExpr ChowExpr::constant(Int c) {
  ChowExpr e;
  add_term(e.terms, 0, 0, c);
  return e;
}

ChowExpr ChowExpr::M() {
  ChowExpr e;
  e.terms[{1, 0}] = 1;
  return e;
}

ChowExpr ChowExpr::L() {
  ChowExpr e;
  e.terms[{0, 1}] = 1;
  return e;
}

ChowExpr ChowExpr::of(const DivClass& cls) {
  ChowExpr e;
  add_term(e.terms, 1, 0, cls.m);
  add_term(e.terms, 0, 1, cls.l);
  return e;
}

std::optional<Int> ChowExpr::homogeneous_degree() const {
  std::optional<Int> deg;
  for (const auto& [k, c] : terms) {
    Int d = k.first + k.second;
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

Int ChowExpr::coefficient(Int m_exp, Int l_exp) const {
  auto it = terms.find({m_exp, l_exp});
  return it == terms.end() ? 0 : it->second;
}

ChowExpr& ChowExpr::operator+=(const ChowExpr& o) {
  for (const auto& [k, c] : o.terms) add_term(terms, k.first, k.second, c);
  return *this;
}

ChowExpr& ChowExpr::operator-=(const ChowExpr& o) {
  for (const auto& [k, c] : o.terms) add_term(terms, k.first, k.second, -c);
  return *this;
}

ChowExpr operator*(const ChowExpr& a, const ChowExpr& b) {
  ChowExpr out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms)
      add_term(out.terms, ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

ChowExpr operator*(Int k, const ChowExpr& a) {
  ChowExpr out;
  for (const auto& [key, c] : a.terms) add_term(out.terms, key.first, key.second, k * c);
  return out;
}

ChowExpr ChowExpr::pow(Int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a Chow expression");
  ChowExpr out = constant(1);
  for (Int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string ChowExpr::str() const {
  if (terms.empty()) return "0";
  // Highest M-degree first reads like an intersection computation.
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Int m = it->first.first, l = it->first.second, c = it->second;
    std::string mono;
    if (m > 0) mono += m == 1 ? "M" : "M^" + std::to_string(m);
    if (l > 0) mono += l == 1 ? "L" : "L^" + std::to_string(l);
    if (out.empty()) {
      if (c == -1 && !mono.empty()) out += "-";
      else if (c != 1 || mono.empty()) out += std::to_string(c);
    } else {
      out += c > 0 ? " + " : " - ";
      Int a = c > 0 ? c : -c;
      if (a != 1 || mono.empty()) out += std::to_string(a);
    }
    out += mono;
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_factor_start() {
    skip();
    if (i >= s.size()) return false;
    char c = s[i];
    return c == 'M' || c == 'L' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what);
  }

  ChowExpr parse_expr() {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    ChowExpr acc = parse_term();
    if (neg) acc = -1 * acc;
    while (true) {
      skip();
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
      bool minus = s[i++] == '-';
      ChowExpr t = parse_term();
      acc += minus ? -1 * t : t;
    }
    return acc;
  }

  ChowExpr parse_term() {
    ChowExpr acc = parse_factor();
    while (true) {
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        acc = acc * parse_factor();
      } else if (at_factor_start()) {
        acc = acc * parse_factor();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  ChowExpr parse_factor() {
    ChowExpr base = parse_base();
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip();
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("exponent expected");
      Int k = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) k = 10 * k + (s[i++] - '0');
      return base.pow(k);
    }
    return base;
  }

  ChowExpr parse_base() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == 'M') { ++i; return ChowExpr::M(); }
    if (c == 'L') { ++i; return ChowExpr::L(); }
    if (c == '(') {
      ++i;
      ChowExpr e = parse_expr();
      skip();
      if (i >= s.size() || s[i] != ')') fail("')' expected");
      ++i;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int k = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) k = 10 * k + (s[i++] - '0');
      return ChowExpr::constant(k);
    }
    fail("factor expected");
  }
};

// Accept the unicode minus sign in pasted input.
std::string ascii_minus(const std::string& text) {
  std::string out;
  for (size_t i = 0; i < text.size();) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      out += '-';
      i += 3;
    } else {
      out += text[i++];
    }
  }
  return out;
}

}  // namespace

ChowExpr ChowExpr::parse(const std::string& text) {
  std::string t = ascii_minus(text);
  Parser p(t);
  ChowExpr e = p.parse_expr();
  p.skip();
  if (p.i != t.size()) p.fail("trailing input");
  return e;
}

ScrollRing::ScrollRing(StandardScroll scroll) : scroll_(std::move(scroll)) {
  weight_matrix(scroll_);  // validates base dimension, twists and arity
  size_t n = scroll_.twists.size();
  sym_.assign(n + 1, 0);
  sym_[0] = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j-- > 0;) sym_[j + 1] += sym_[j] * scroll_.twists[i];
}

ChowExpr ScrollRing::normal_form(ChowExpr expr) const {
  const Int fib = static_cast<Int>(scroll_.twists.size()) - 1;
  const Int base = scroll_.base_dim;
  bool changed = true;
  while (changed) {
    changed = false;
    ChowExpr next;
    for (const auto& [k, c] : expr.terms) {
      Int m = k.first, l = k.second;
      if (l > base) continue;  // L^{k+1} = 0
      if (m > fib) {
        // M^{fib+1} = sum_{i>=1} (-1)^{i+1} sym_i M^{fib+1-i} L^i
        changed = true;
        for (size_t i = 1; i < sym_.size(); ++i) {
          Int sign = (i % 2 == 1) ? 1 : -1;
          add_term(next.terms, m - static_cast<Int>(i), l + static_cast<Int>(i),
                   c * sign * sym_[i]);
        }
      } else {
        add_term(next.terms, m, l, c);
      }
    }
    expr = std::move(next);
  }
  return expr;
}

Int ScrollRing::degree_of_top(const ChowExpr& expr) const {
  auto deg = expr.homogeneous_degree();
  if (!deg || *deg != dim())
    throw std::invalid_argument("expected a homogeneous expression of top degree");
  ChowExpr nf = normal_form(expr);
  return nf.coefficient(static_cast<Int>(scroll_.twists.size()) - 1, scroll_.base_dim);
}

ScrollRing::Reduced ScrollRing::reduce(const ChowExpr& expr) const {
  for (const auto& [k, c] : expr.terms) {
    (void)c;
    if (k.first + k.second > dim())
      throw std::invalid_argument("expression degree exceeds the dimension of the scroll");
  }
  Reduced r;
  r.normal = normal_form(expr);
  auto deg = expr.homogeneous_degree();
  if (deg && *deg == dim()) r.number = degree_of_top(expr);
  return r;
}

std::string CycleClass::str() const {
  if (gamma == 0 && m2l == 0) return "0";
  std::string out;
  auto put = [&](Int c, const char* sym) {
    if (c == 0) return;
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += std::to_string(c);
    } else {
      out += c > 0 ? " + " : " - ";
      Int a = c > 0 ? c : -c;
      if (a != 1) out += std::to_string(a);
    }
    out += sym;
  };
  put(gamma, "Gamma");
  put(m2l, "M^2L");
  return out;
}

CycleClass cycle_in_gamma_basis(const ScrollRing& ring, const ChowExpr& expr) {
  const StandardScroll& sc = ring.scroll();
  if (sc.base_dim != 1 || sc.twists.size() != 4)
    throw std::invalid_argument("1-cycle basis (Gamma, M^2L) needs a four-fold scroll over P^1");
  auto deg = expr.homogeneous_degree();
  if (!deg || *deg != 3) throw std::invalid_argument("1-cycles have degree 3");
  ChowExpr nf = ring.normal_form(expr);
  for (const auto& [k, c] : nf.terms) {
    (void)c;
    if (!(k == std::make_pair<Int, Int>(3, 0) || k == std::make_pair<Int, Int>(2, 1)))
      throw std::runtime_error("unexpected monomial in a reduced 1-cycle");
  }
  Int c_m3 = nf.coefficient(3, 0);
  Int c_m2l = nf.coefficient(2, 1);
  return CycleClass{c_m3, c_m2l + c_m3 * sc.twist_sum()};
}

StandardScroll ambient_scroll(const FamilyParams& fam) {
  return StandardScroll{1, {0, fam.a, fam.b, fam.c}};
}

DivClass anticanonical(const FamilyParams& fam) { return DivClass{1, 2 - fam.d() - fam.n}; }

DivClass ambient_anticanonical(const WeightMatrix& mat) {
  DivClass sum;
  for (const auto& c : mat.cols) sum = sum + c;
  return sum;
}

Int anticanonical_dot_gamma(const FamilyParams& fam) { return 2 - fam.d() - fam.n; }

CanonicalSquare canonical_square(const FamilyParams& fam) {
  CanonicalSquare out;
  out.cycle = CycleClass{3, 12 - 3 * fam.d() - 5 * fam.n};
  out.interior = out.cycle.gamma > 0 && out.cycle.m2l > 0;
  out.iff_known = fam.n < 0;
  return out;
}

ChowExpr gamma_expr(const FamilyParams& fam) {
  ChowExpr M = ChowExpr::M(), L = ChowExpr::L();
  return (M - fam.a * L) * (M - fam.b * L) * (M - fam.c * L);
}

Int anticanonical_dot_gamma_via_ring(const FamilyParams& fam) {
  ScrollRing ring(ambient_scroll(fam));
  return ring.degree_of_top(ChowExpr::of(anticanonical(fam)) * gamma_expr(fam));
}

Int x_dot_gamma_via_ring(const FamilyParams& fam) {
  ScrollRing ring(ambient_scroll(fam));
  ChowExpr x = 3 * ChowExpr::M() + fam.n * ChowExpr::L();
  return ring.degree_of_top(x * gamma_expr(fam));
}

CycleClass canonical_square_via_ring(const FamilyParams& fam) {
  ScrollRing ring(ambient_scroll(fam));
  ChowExpr mk = ChowExpr::of(anticanonical(fam));
  ChowExpr x = 3 * ChowExpr::M() + fam.n * ChowExpr::L();
  return cycle_in_gamma_basis(ring, mk * mk * x);
}

}  // namespace dp3
