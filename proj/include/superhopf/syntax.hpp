#pragma once

// Text syntax for generator sets, polynomials and tensor expressions.
//
//   generators:  even x, y; odd t1, t2;
//   polynomial:  3/2 * x^2 * t1*t2 - (x + 1)*t2
//   tensor:      1 | t1 + t1 | 1        ('|' or '⊗' separates the legs)

#include "superhopf/super_poly.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace superhopf {

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

namespace syntax {

enum class tok { ident, number, plus, minus, star, caret, lparen, rparen, comma, semicolon, equals, bar, end };

struct token {
  tok kind;
  std::string text;
  int line, column;
};

inline std::vector<token> tokenize(std::string_view src) {
  std::vector<token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({tok::ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      out.push_back({tok::number, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (src.substr(i, 3) == "\xE2\x8A\x97") { // ⊗
      out.push_back({tok::bar, "|", l, cl});
      advance(3);
      continue;
    }
    tok k;
    switch (c) {
    case '+': k = tok::plus; break;
    case '-': k = tok::minus; break;
    case '*': k = tok::star; break;
    case '^': k = tok::caret; break;
    case '(': k = tok::lparen; break;
    case ')': k = tok::rparen; break;
    case ',': k = tok::comma; break;
    case ';': k = tok::semicolon; break;
    case '=': k = tok::equals; break;
    case '|': k = tok::bar; break;
    default: throw parse_error(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({k, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({tok::end, "", line, col});
  return out;
}

/// Recursive-descent parser over a token stream. Expressions are evaluated
/// directly into super_poly values of a given generator set.
class parser {
public:
  explicit parser(std::vector<token> toks) : toks_(std::move(toks)) {}
  explicit parser(std::string_view src) : toks_(tokenize(src)) {}

  const token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(tok k) const { return peek().kind == k; }
  const token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  const token& expect(tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw parse_error(msg + (t.kind == tok::end ? " at end of input" : " near '" + t.text + "'"), t.line, t.column);
  }

  /// expr := ['+'|'-'] term (('+'|'-') term)*
  super_poly expression(const gen_set_ptr& gens) {
    super_poly acc(gens);
    bool negate = false;
    if (accept(tok::minus)) negate = true;
    else accept(tok::plus);
    super_poly t = term(gens);
    acc = negate ? -t : t;
    while (at(tok::plus) || at(tok::minus)) {
      bool minus = next().kind == tok::minus;
      super_poly u = term(gens);
      if (minus) acc -= u;
      else acc += u;
    }
    return acc;
  }

  /// term := factor ('*' factor)*
  super_poly term(const gen_set_ptr& gens) {
    super_poly acc = factor(gens);
    while (accept(tok::star)) acc = acc * factor(gens);
    return acc;
  }

  /// factor := primary ['^' integer]
  super_poly factor(const gen_set_ptr& gens) {
    super_poly base = primary(gens);
    if (accept(tok::caret)) {
      const token& e = expect(tok::number, "integer exponent");
      if (e.text.find('/') != std::string::npos) throw parse_error("exponent must be an integer", e.line, e.column);
      unsigned long n = std::stoul(e.text);
      if (n > 10000) throw parse_error("exponent too large", e.line, e.column);
      super_poly r(gens, scalar(1));
      for (unsigned long k = 0; k < n; ++k) r = r * base;
      return r;
    }
    return base;
  }

  super_poly primary(const gen_set_ptr& gens) {
    if (at(tok::number)) return super_poly(gens, rational::parse(next().text));
    if (at(tok::ident)) {
      const token& t = next();
      auto s = gens->find(t.text);
      if (!s) throw parse_error("unknown symbol '" + t.text + "'", t.line, t.column);
      return super_poly::generator(gens, *s);
    }
    if (accept(tok::lparen)) {
      super_poly e = expression(gens);
      expect(tok::rparen, "')'");
      return e;
    }
    if (at(tok::minus)) {
      next();
      return -factor(gens);
    }
    fail("expected a number, generator or '('");
  }

  /// texpr := ['+'|'-'] tterm (('+'|'-') tterm)*;  tterm := term '|' term
  /// Result lives in `product`, a tensor_set of (left, right).
  super_poly tensor_expression(const gen_set_ptr& left, const gen_set_ptr& right, const gen_set_ptr& product) {
    std::vector<gen_set_ptr> factors{left, right};
    super_poly acc(product);
    bool negate = false;
    if (accept(tok::minus)) negate = true;
    else accept(tok::plus);
    auto tterm = [&]() {
      super_poly a = term(left);
      expect(tok::bar, "'|' between tensor legs");
      super_poly b = term(right);
      return embed_factor(a, product, factors, 0) * embed_factor(b, product, factors, 1);
    };
    super_poly first = tterm();
    acc = negate ? -first : first;
    while (at(tok::plus) || at(tok::minus)) {
      bool minus = next().kind == tok::minus;
      super_poly u = tterm();
      if (minus) acc -= u;
      else acc += u;
    }
    return acc;
  }

  /// Parses "even a, b; odd c;" blocks (either order, each optional, repeatable).
  gen_set_ptr generator_declarations() {
    std::vector<std::string> ev, od;
    while (at(tok::ident) && (peek().text == "even" || peek().text == "odd")) {
      bool odd = next().text == "odd";
      if (!at(tok::semicolon)) {
        do {
          const token& n = expect(tok::ident, "generator name");
          (odd ? od : ev).push_back(n.text);
        } while (accept(tok::comma));
      }
      expect(tok::semicolon, "';'");
    }
    try {
      return generator_set::make(std::move(ev), std::move(od));
    } catch (const algebra_error& e) {
      throw parse_error(e.what(), peek().line, peek().column);
    }
  }

private:
  std::vector<token> toks_;
  std::size_t pos_ = 0;
};

} // namespace syntax

inline gen_set_ptr parse_generators(std::string_view src) {
  syntax::parser p(src);
  auto g = p.generator_declarations();
  p.expect(syntax::tok::end, "end of declarations");
  return g;
}

inline super_poly parse_poly(std::string_view src, const gen_set_ptr& gens) {
  syntax::parser p(src);
  auto r = p.expression(gens);
  p.expect(syntax::tok::end, "end of expression");
  return r;
}

inline super_poly parse_tensor(std::string_view src, const gen_set_ptr& left, const gen_set_ptr& right,
                               const gen_set_ptr& product) {
  syntax::parser p(src);
  auto r = p.tensor_expression(left, right, product);
  p.expect(syntax::tok::end, "end of expression");
  return r;
}

inline std::string format_monomial(const generator_set& gens, const super_monomial& m) {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " * ";
    out += s;
  };
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (!m.exps[i]) continue;
    add(m.exps[i] == 1 ? gens.evens()[i] : gens.evens()[i] + "^" + std::to_string(m.exps[i]));
  }
  for (auto j : m.odd_support()) add(gens.odds()[j]);
  return out.empty() ? "1" : out;
}

namespace detail {
inline void append_term(std::string& out, const scalar& c, const std::string& body, bool body_is_one) {
  bool neg = c.sign() < 0;
  scalar a = neg ? -c : c;
  if (out.empty()) out += neg ? "-" : "";
  else out += neg ? " - " : " + ";
  if (body_is_one) out += a.str();
  else if (a.is_one()) out += body;
  else out += a.str() + " * " + body;
}
} // namespace detail

/// Prints p in the parseable syntax; parse_poly(format_poly(p)) == p.
inline std::string format_poly(const super_poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms())
    detail::append_term(out, c, m.is_one() ? "" : format_monomial(*p.gens(), m), m.is_one());
  return out;
}

inline std::string format_tensor(const super_tensor& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& tm : t.terms()) {
    std::string body = format_monomial(*t.left(), tm.left) + " | " + format_monomial(*t.right(), tm.right);
    detail::append_term(out, tm.coeff, body, false);
  }
  return out;
}

inline std::string format_generators(const generator_set& g) {
  std::ostringstream os;
  auto list = [&](const char* kw, const std::vector<std::string>& names) {
    if (names.empty()) return;
    os << kw << ' ';
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
    os << ';';
  };
  list("even", g.evens());
  if (!g.evens().empty() && !g.odds().empty()) os << ' ';
  list("odd", g.odds());
  return os.str();
}

} // namespace superhopf
