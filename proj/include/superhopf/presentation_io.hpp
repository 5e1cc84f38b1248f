#pragma once

// Text format for Hopf presentations (.shp):
//
//   # comment
//   even x, y;
//   odd p, q;
//   degree x = 2;                    optional, default 1
//   delta x = x | 1 + 1 | x + x | x;  one per generator
//   counit x = 0;                    optional, default 0
//   antipode x = -x;                 either one per generator,
//   antipode pointwise;              or this marker (also the default)
//
// Declarations and degrees come first. Expressions use the polynomial syntax;
// '|' (or '⊗') separates tensor legs.

#include "superhopf/hopf.hpp"
#include "superhopf/syntax.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace superhopf {

namespace detail {

inline scalar parse_scalar(syntax::parser& p) {
  const auto& t = p.peek();
  auto none = generator_set::make({}, {});
  super_poly v = p.expression(none);
  if (v.max_degree() > 0) throw parse_error("expected a scalar", t.line, t.column);
  return v.constant_term();
}

} // namespace detail

inline hopf_presentation parse_presentation(std::string_view src, std::string name = "presentation") {
  using syntax::tok;
  syntax::parser p(src);
  std::vector<std::string> ev, od;
  std::map<std::string, std::pair<int, syntax::token>> degrees;

  while (p.at(tok::ident) && (p.peek().text == "even" || p.peek().text == "odd")) {
    bool odd = p.next().text == "odd";
    if (!p.at(tok::semicolon)) {
      do (odd ? od : ev).push_back(p.expect(tok::ident, "generator name").text);
      while (p.accept(tok::comma));
    }
    p.expect(tok::semicolon, "';'");
  }
  while (p.at(tok::ident) && p.peek().text == "degree") {
    p.next();
    auto g = p.expect(tok::ident, "generator name");
    p.expect(tok::equals, "'='");
    auto n = p.expect(tok::number, "positive integer degree");
    if (n.text.find('/') != std::string::npos || std::stoi(n.text) <= 0)
      throw parse_error("degree must be a positive integer", n.line, n.column);
    if (!degrees.emplace(g.text, std::make_pair(std::stoi(n.text), g)).second)
      throw parse_error("degree of '" + g.text + "' given twice", g.line, g.column);
    p.expect(tok::semicolon, "';'");
  }
  std::vector<int> evd(ev.size(), 1), odd_deg(od.size(), 1);
  for (const auto& [g, dt] : degrees) {
    auto ie = std::find(ev.begin(), ev.end(), g), io = std::find(od.begin(), od.end(), g);
    if (ie != ev.end()) evd[static_cast<std::size_t>(ie - ev.begin())] = dt.first;
    else if (io != od.end()) odd_deg[static_cast<std::size_t>(io - od.begin())] = dt.first;
    else throw parse_error("unknown symbol '" + g + "'", dt.second.line, dt.second.column);
  }
  gen_set_ptr gens;
  try {
    gens = generator_set::make(ev, od, evd, odd_deg);
  } catch (const algebra_error& e) {
    throw parse_error(e.what(), p.peek().line, p.peek().column);
  }
  auto gens2 = tensor_power(gens, 2);
  const std::size_t n = gens->size();
  std::vector<std::optional<super_poly>> delta(n), anti(n);
  std::vector<scalar> counit(n);
  std::vector<bool> counit_seen(n, false);
  bool pointwise = false;

  auto generator_slot = [&](const syntax::token& t) {
    auto s = gens->find(t.text);
    if (!s) throw parse_error("unknown symbol '" + t.text + "'", t.line, t.column);
    return std::make_pair(gens->slot_of(*s), *s);
  };
  auto want = [](symbol s) { return is_odd(s.par) ? parity_class::odd : parity_class::even; };

  while (!p.at(tok::end)) {
    const auto kw = p.expect(tok::ident, "'delta', 'counit' or 'antipode'");
    if (kw.text == "antipode" && p.at(tok::ident) && p.peek().text == "pointwise") {
      p.next();
      pointwise = true;
      p.expect(tok::semicolon, "';'");
      continue;
    }
    if (kw.text != "delta" && kw.text != "counit" && kw.text != "antipode") {
      if (kw.text == "even" || kw.text == "odd" || kw.text == "degree")
        throw parse_error("'" + kw.text + "' must come before structure maps", kw.line, kw.column);
      throw parse_error("unknown statement '" + kw.text + "'", kw.line, kw.column);
    }
    auto g = p.expect(tok::ident, "generator name");
    auto [slot, sym] = generator_slot(g);
    p.expect(tok::equals, "'='");
    auto here = [&](const std::string& msg) { return parse_error("generator '" + g.text + "': " + msg, g.line, g.column); };
    if (kw.text == "delta") {
      if (delta[slot]) throw here("coproduct given twice");
      super_poly d = p.tensor_expression(gens, gens, gens2);
      if (!d.is_zero() && d.parity_of() != want(sym))
        throw here(std::string("coproduct image is ") + to_string(d.parity_of()) + ", generator is " + to_string(sym.par));
      delta[slot] = std::move(d);
    } else if (kw.text == "counit") {
      if (counit_seen[slot]) throw here("counit given twice");
      counit[slot] = detail::parse_scalar(p);
      counit_seen[slot] = true;
      if (is_odd(sym.par) && !counit[slot].is_zero()) throw here("counit of an odd generator must be 0");
    } else {
      if (anti[slot]) throw here("antipode given twice");
      super_poly a = p.expression(gens);
      if (!a.is_zero() && a.parity_of() != want(sym)) throw here("antipode image has the wrong parity");
      anti[slot] = std::move(a);
    }
    p.expect(tok::semicolon, "';'");
  }

  const auto& end = p.peek();
  std::vector<super_poly> dv;
  std::size_t given_antipodes = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const auto& nm = gens->name(gens->slot_symbol(s));
    if (!delta[s]) throw parse_error("generator '" + nm + "': missing coproduct", end.line, end.column);
    dv.push_back(*delta[s]);
    if (anti[s]) ++given_antipodes;
  }
  std::optional<std::vector<super_poly>> av;
  if (given_antipodes > 0) {
    if (pointwise) throw parse_error("antipode images given together with 'antipode pointwise'", end.line, end.column);
    if (given_antipodes != n) {
      for (std::size_t s = 0; s < n; ++s)
        if (!anti[s])
          throw parse_error("generator '" + gens->name(gens->slot_symbol(s)) + "': missing antipode", end.line,
                            end.column);
    }
    av.emplace();
    for (auto& a : anti) av->push_back(std::move(*a));
  }
  try {
    return make_presentation(std::move(name), gens, std::move(dv), std::move(counit), std::move(av));
  } catch (const presentation_error& e) {
    throw parse_error(e.what(), end.line, end.column);
  }
}

inline hopf_presentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str(), path.stem().string());
}

/// Prints h so that parse_presentation(print_presentation(h)) == h.
inline std::string print_presentation(const hopf_presentation& h) {
  const auto& g = *h.gens;
  std::ostringstream os;
  os << "# " << h.name << '\n';
  if (!g.evens().empty()) {
    os << "even ";
    for (std::size_t i = 0; i < g.num_even(); ++i) os << (i ? ", " : "") << g.evens()[i];
    os << ";\n";
  }
  if (!g.odds().empty()) {
    os << "odd ";
    for (std::size_t i = 0; i < g.num_odd(); ++i) os << (i ? ", " : "") << g.odds()[i];
    os << ";\n";
  }
  for (std::size_t s = 0; s < g.size(); ++s) {
    int d = g.degree(g.slot_symbol(s));
    if (d != 1) os << "degree " << g.name(g.slot_symbol(s)) << " = " << d << ";\n";
  }
  for (std::size_t s = 0; s < g.size(); ++s) {
    const auto& nm = g.name(g.slot_symbol(s));
    std::string body = h.delta[s].is_zero() ? "0 | 0" : format_tensor(super_tensor::from_value(h.gens, h.gens, h.delta[s]));
    os << "delta " << nm << " = " << body << ";\n";
  }
  for (std::size_t s = 0; s < g.size(); ++s)
    if (!h.counit[s].is_zero()) os << "counit " << g.name(g.slot_symbol(s)) << " = " << h.counit[s].str() << ";\n";
  if (h.antipode) {
    for (std::size_t s = 0; s < g.size(); ++s)
      os << "antipode " << g.name(g.slot_symbol(s)) << " = " << format_poly((*h.antipode)[s]) << ";\n";
  } else {
    os << "antipode pointwise;\n";
  }
  return os.str();
}

} // namespace superhopf
