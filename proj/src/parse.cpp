#include "fflab/parse.hpp"

#include <cctype>
#include <numeric>

namespace fflab {

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParamError("parse error at position " + std::to_string(i) + ": " + what +
                     " in \"" + std::string(s) + "\"");
  }
  long long integer() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return neg ? -v : v;
  }
};

// exponent := int | '{' int ['/' int] '}' | '(' int ['/' int] ')'
Rat parse_exponent(Cursor& c) {
  char open = c.peek();
  if (open == '{' || open == '(') {
    c.eat(open);
    long long n = c.integer();
    long long d = 1;
    if (c.eat('/')) d = c.integer();
    char close = open == '{' ? '}' : ')';
    if (!c.eat(close)) c.fail("unterminated exponent bracket");
    return Rat(n, d);
  }
  return Rat(c.integer());
}

// term := coeff ['*' Tpow] | Tpow ;  Tpow := 'T' ['^' exponent]
// Returns the term value; leading '-' handled by caller via sign.
LaurentElem parse_term(const FqCtx& F, Cursor& c, bool negate) {
  uint8_t coeff = 1;
  bool have_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    long long v = c.integer();
    if (v < 0 || v >= F.q())
      c.fail("coefficient index " + std::to_string(v) + " outside [0, q)");
    coeff = static_cast<uint8_t>(v);
    have_coeff = true;
  }
  Rat e(0);
  bool have_t = false;
  if (have_coeff) {
    size_t save = c.i;
    if (c.eat('*')) {
      if (c.peek() == 'T') {
        have_t = true;
      } else {
        c.i = save;  // the '*' belongs to an enclosing product
      }
    } else if (c.peek() == 'T') {
      c.fail("missing '*' between coefficient and T");
    }
  } else if (c.peek() == 'T') {
    have_t = true;
  }
  if (have_t) {
    c.eat('T');
    e = c.eat('^') ? parse_exponent(c) : Rat(1);
  } else if (!have_coeff) {
    c.fail("expected term");
  }
  if (negate) coeff = F.neg(coeff);
  return LaurentElem::monomial(F, coeff, e.n, e.d);
}

LaurentElem parse_elem_cursor(const FqCtx& F, Cursor& c) {
  LaurentElem acc = LaurentElem::zero(F);
  bool neg = c.eat('-');
  acc = acc + parse_term(F, c, neg);
  for (;;) {
    if (c.eat('+')) {
      acc = acc + parse_term(F, c, false);
    } else if (c.eat('-')) {
      acc = acc + parse_term(F, c, true);
    } else {
      break;
    }
  }
  return acc;
}

std::string print_exponent(const Rat& e) {
  if (e.is_integer()) {
    if (e.n == 1) return "";
    return "^" + std::to_string(e.n);
  }
  return "^{" + e.str() + "}";
}

std::string print_term(long long num, long long ell, uint8_t coeff) {
  Rat e(num, ell);
  if (e == Rat(0)) return std::to_string(static_cast<int>(coeff));
  std::string t = "T" + print_exponent(e);
  if (coeff == 1) return t;
  return std::to_string(static_cast<int>(coeff)) + "*" + t;
}

}  // namespace

LaurentElem parse_elem(const FqCtx& F, std::string_view s) {
  Cursor c{s};
  LaurentElem r = parse_elem_cursor(F, c);
  if (!c.done()) c.fail("trailing characters after element");
  return r;
}

std::string print_elem(const LaurentElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto& ts = a.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {  // descending exponents
    if (!out.empty()) out += "+";
    out += print_term(it->first, a.ell(), it->second);
  }
  return out;
}

std::vector<LaurentElem> parse_elem_list(const FqCtx& F, std::string_view s) {
  std::vector<LaurentElem> out;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && (s[i] == '{' || s[i] == '(')) ++depth;
    if (i < s.size() && (s[i] == '}' || s[i] == ')')) --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(parse_elem(F, s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string print_elem_list(const std::vector<LaurentElem>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += print_elem(v[i]);
  }
  return out;
}

namespace {

// factor := '(' element ')' | var ['^' int] | element-term
// var    := 'x' digits  (1-based)
struct MTerm {
  LaurentElem coeff;
  MPoly::Key key;
};

MTerm parse_mterm(const FqCtx& F, int nvars, Cursor& c, bool negate) {
  MTerm t{LaurentElem::one(F), MPoly::Key(nvars, 0)};
  bool first = true;
  for (;;) {
    c.skip_ws();
    if (c.peek() == '(') {
      c.eat('(');
      size_t depth = 1, start = c.i;
      while (c.i < c.s.size() && depth) {
        if (c.s[c.i] == '(') ++depth;
        if (c.s[c.i] == ')') --depth;
        ++c.i;
      }
      if (depth) c.fail("unterminated parenthesis");
      LaurentElem inner = parse_elem(F, c.s.substr(start, c.i - 1 - start));
      t.coeff = t.coeff * inner;
    } else if (c.peek() == 'x') {
      c.eat('x');
      long long v = c.integer();
      if (v < 1 || v > nvars) c.fail("variable index out of range");
      long long e = 1;
      if (c.eat('^')) {
        e = c.integer();
        if (e < 0) c.fail("negative variable exponent");
      }
      t.key[v - 1] += static_cast<int>(e);
    } else if (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == 'T') {
      t.coeff = t.coeff * parse_term(F, c, false);
    } else if (first) {
      c.fail("expected factor");
    } else {
      break;
    }
    first = false;
    size_t save = c.i;
    if (!c.eat('*')) break;
    // A '*' must be followed by another factor; if not, back out.
    c.skip_ws();
    if (c.done()) {
      c.i = save;
      break;
    }
  }
  if (negate) t.coeff = -t.coeff;
  return t;
}

}  // namespace

MPoly parse_mpoly(const FqCtx& F, int nvars, std::string_view s) {
  Cursor c{s};
  MPoly p(F, nvars);
  bool neg = c.eat('-');
  MTerm t = parse_mterm(F, nvars, c, neg);
  p.add_term(t.key, t.coeff);
  for (;;) {
    if (c.eat('+')) {
      t = parse_mterm(F, nvars, c, false);
    } else if (c.eat('-')) {
      t = parse_mterm(F, nvars, c, true);
    } else {
      break;
    }
    p.add_term(t.key, t.coeff);
  }
  if (!c.done()) c.fail("trailing characters after polynomial");
  return p;
}

std::string print_mpoly(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // terms in reverse map order: higher exponent vectors first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    if (!out.empty()) out += " + ";
    bool has_var = false;
    for (int e : k) has_var |= e > 0;
    std::string mono;
    for (size_t i = 0; i < k.size(); ++i) {
      if (!k[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (k[i] > 1) mono += "^" + std::to_string(k[i]);
    }
    std::string cs = print_elem(c);
    if (!has_var) {
      out += cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      out += mono;
    } else if (cs.find('+') != std::string::npos || cs.find('*') != std::string::npos) {
      out += "(" + cs + ")*" + mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

}  // namespace fflab
