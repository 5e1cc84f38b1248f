#pragma once

// Truncated duals (A/(A⁺)ⁿ)* of a presentation whose generators vanish at the
// counit, their primitives, and the comparison Lie(G)₀ = Lie(G_ev).
//
// Basis: D_m dual to the normal monomials m of total degree < n. Since every
// generator's coproduct has legs of degree ≤ 1, the span of these monomials
// is a subcoalgebra of A whose dual is (A/(A⁺)ⁿ)*. Pairings on tensors carry
// no sign: ⟨u⊗v, a⊗b⟩ = ⟨u,a⟩⟨v,b⟩.

#include "superhopf/finite_hopf.hpp"
#include "superhopf/hopf.hpp"
#include "superhopf/lie.hpp"

#include <map>
#include <string>
#include <vector>

namespace superhopf {

struct truncated_dual {
  std::string name;
  int order = 1;
  gen_set_ptr gens;
  std::vector<super_monomial> monos;
  std::vector<std::string> labels;
  std::vector<parity> par;
  std::vector<int> degree;
  std::vector<std::vector<sparse_vector>> product; // D_a ∗ D_b
  std::vector<tensor_vector> coproduct;            // dual of the product of A
  std::size_t unit = 0;                            // index of ε = D_1

  std::size_t dim() const { return labels.size(); }
  std::size_t index_of(const super_monomial& m) const {
    auto it = std::find(monos.begin(), monos.end(), m);
    if (it == monos.end()) throw algebra_error("truncated_dual: monomial outside the truncation");
    return static_cast<std::size_t>(it - monos.begin());
  }
  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw algebra_error("truncated_dual: no basis element " + label);
    return static_cast<std::size_t>(it - labels.begin());
  }
};

inline std::string dual_label(const generator_set& g, const super_monomial& m) {
  return m.is_one() ? "ε" : "D[" + format_monomial(g, m) + "]";
}

inline truncated_dual make_truncated_dual(const hopf_presentation& h, int n, unsigned workers = worker_count()) {
  if (n <= 0) throw algebra_error("truncated_dual: order must be positive");
  for (std::size_t s = 0; s < h.counit.size(); ++s)
    if (!h.counit[s].is_zero())
      throw presentation_error(h.gens->name(h.gens->slot_symbol(s)),
                               "truncated_dual needs generators vanishing at the counit");
  truncated_dual t;
  t.name = h.name;
  t.order = n;
  t.gens = h.gens;
  t.monos = enumerate_monomials(*h.gens, n - 1);
  std::map<super_monomial, std::size_t> index;
  for (std::size_t i = 0; i < t.monos.size(); ++i) {
    index[t.monos[i]] = i;
    t.labels.push_back(dual_label(*h.gens, t.monos[i]));
    t.par.push_back(t.monos[i].par());
    t.degree.push_back(t.monos[i].total_degree());
  }
  const std::size_t d = t.dim();
  t.unit = index.at(super_monomial{});

  // (D_a ∗ D_b)(m) = coefficient of a ⊗ b in Δ(m)
  struct entry {
    std::size_t a, b;
    rational c;
  };
  auto rows = parallel_map(
      d,
      [&](std::size_t k) {
        algebra_hom delta = delta_hom(h);
        std::vector<entry> out;
        auto value = delta.apply(super_poly::monomial(h.gens, t.monos[k]));
        for (const auto& tm : super_tensor::from_value(h.gens, h.gens, value).terms()) {
          auto ia = index.find(tm.left), ib = index.find(tm.right);
          if (ia == index.end() || ib == index.end()) continue;
          out.push_back({ia->second, ib->second, tm.coeff});
        }
        return out;
      },
      workers);
  t.product.assign(d, std::vector<sparse_vector>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& e : rows[k]) t.product[e.a][e.b][k] += e.c;

  t.coproduct.resize(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto [s, m] = multiply_monomials(t.monos[a], t.monos[b]);
      if (s == 0) continue;
      auto it = index.find(m);
      if (it != index.end()) detail::add_entry(t.coproduct[it->second], a, b, rational(s));
    }
  return t;
}

inline sparse_vector dual_multiply(const truncated_dual& t, const sparse_vector& u, const sparse_vector& v) {
  sparse_vector r;
  for (const auto& [i, x] : u)
    for (const auto& [j, y] : v) detail::axpy(r, x * y, t.product[i][j]);
  return r;
}

namespace detail {
inline nlohmann::json dual_witness(const truncated_dual& t, std::initializer_list<std::size_t> idx) {
  nlohmann::json j = nlohmann::json::array();
  for (auto i : idx) j.push_back(t.labels[i]);
  return j;
}
} // namespace detail

/// Full table checks: associativity, unit ε, counital and coassociative coproduct.
inline std::vector<check_result> check_truncated_dual(const truncated_dual& t) {
  const std::size_t d = t.dim();
  std::vector<check_result> out;
  auto e = [](std::size_t i) { return sparse_vector{{i, rational(1)}}; };
  out.push_back([&] {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          if (dual_multiply(t, t.product[a][b], e(c)) != dual_multiply(t, e(a), t.product[b][c]))
            return check_result::fail("associativity", detail::dual_witness(t, {a, b, c}));
    return check_result::pass("associativity", std::to_string(d) + "-dimensional table");
  }());
  out.push_back([&] {
    for (std::size_t a = 0; a < d; ++a)
      if (t.product[t.unit][a] != e(a) || t.product[a][t.unit] != e(a))
        return check_result::fail("ε is the unit", detail::dual_witness(t, {a}));
    return check_result::pass("ε is the unit");
  }());
  out.push_back([&] {
    // the counit of the dual is evaluation at 1, i.e. the ε-coordinate
    for (std::size_t m = 0; m < d; ++m) {
      sparse_vector l, r;
      for (const auto& [ab, x] : t.coproduct[m]) {
        if (ab.first == t.unit) detail::axpy(l, x, e(ab.second));
        if (ab.second == t.unit) detail::axpy(r, x, e(ab.first));
      }
      if (l != e(m) || r != e(m)) return check_result::fail("coproduct is counital", detail::dual_witness(t, {m}));
    }
    return check_result::pass("coproduct is counital");
  }());
  out.push_back([&] {
    using triple = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, rational>;
    for (std::size_t m = 0; m < d; ++m) {
      triple l, r;
      for (const auto& [ab, x] : t.coproduct[m]) {
        for (const auto& [cd, y] : t.coproduct[ab.first]) l[{cd.first, cd.second, ab.second}] += x * y;
        for (const auto& [cd, y] : t.coproduct[ab.second]) r[{ab.first, cd.first, cd.second}] += x * y;
      }
      std::erase_if(l, [](auto& kv) { return kv.second.is_zero(); });
      std::erase_if(r, [](auto& kv) { return kv.second.is_zero(); });
      if (l != r) return check_result::fail("coproduct is coassociative", detail::dual_witness(t, {m}));
    }
    return check_result::pass("coproduct is coassociative");
  }());
  return out;
}

/// ε is the only group-like element. Writing a group-like u = Σ u_m D_m, the
/// coefficient of D_a ⊗ D_a in Δ(u) = u ⊗ u gives u_a² = Σ_m u_m c^m_{aa}. If
/// every m with c^m_{aa} ≠ 0 has degree above deg a, descending induction on
/// the degree forces u_a = 0 for a ≠ 1, and then u_1 = 1. The check certifies
/// that degree condition on the table and that ε itself is group-like.
inline check_result check_unique_grouplike(const truncated_dual& t) {
  const char* name = "ε is the unique group-like element";
  const std::size_t d = t.dim();
  if (t.coproduct[t.unit] != tensor_vector{{{t.unit, t.unit}, rational(1)}})
    return check_result::fail(name, "ε", "Δ(ε) ≠ ε ⊗ ε");
  for (std::size_t a = 0; a < d; ++a) {
    if (a == t.unit) continue;
    for (std::size_t m = 0; m < d; ++m) {
      auto it = t.coproduct[m].find({a, a});
      if (it != t.coproduct[m].end() && t.degree[m] <= t.degree[a])
        return check_result::fail(name, detail::dual_witness(t, {a, m}), "induction on degree does not apply");
    }
  }
  return check_result::pass(name, "certified by descending induction on degree");
}

/// Compatibility of consecutive orders: restricting order n+1 functionals to
/// order n is an algebra map (it splits the inclusion), and the product of
/// functionals of orders i and j has order ≤ i + j - 1.
inline std::vector<check_result> check_order_embedding(const truncated_dual& small, const truncated_dual& big) {
  std::vector<check_result> out;
  if (big.order != small.order + 1 || small.gens != big.gens) throw algebra_error("check_order_embedding: orders must be n and n+1");
  std::vector<std::size_t> into(small.dim());
  for (std::size_t i = 0; i < small.dim(); ++i) into[i] = big.index_of(small.monos[i]);
  auto restrict = [&](const sparse_vector& v) {
    sparse_vector r;
    for (std::size_t i = 0; i < small.dim(); ++i) {
      auto it = v.find(into[i]);
      if (it != v.end()) r[i] = it->second;
    }
    return r;
  };
  out.push_back([&] {
    const char* name = "restriction from order n+1 to n is an algebra map";
    for (std::size_t a = 0; a < big.dim(); ++a)
      for (std::size_t b = 0; b < big.dim(); ++b) {
        auto lhs = restrict(big.product[a][b]);
        auto ra = restrict({{a, rational(1)}}), rb = restrict({{b, rational(1)}});
        if (lhs != dual_multiply(small, ra, rb)) return check_result::fail(name, detail::dual_witness(big, {a, b}));
      }
    if (restrict({{big.unit, rational(1)}}) != sparse_vector{{small.unit, rational(1)}})
      return check_result::fail(name, "ε");
    return check_result::pass(name, "orders " + std::to_string(small.order) + " → " + std::to_string(big.order));
  }());
  out.push_back([&] {
    const char* name = "inclusion of order n into n+1 respects the coproduct";
    for (std::size_t i = 0; i < small.dim(); ++i) {
      tensor_vector mapped;
      for (const auto& [ab, x] : small.coproduct[i]) mapped[{into[ab.first], into[ab.second]}] = x;
      if (mapped != big.coproduct[into[i]]) return check_result::fail(name, detail::dual_witness(small, {i}));
    }
    return check_result::pass(name);
  }());
  out.push_back([&] {
    const char* name = "products respect the order filtration";
    for (std::size_t a = 0; a < big.dim(); ++a)
      for (std::size_t b = 0; b < big.dim(); ++b)
        for (const auto& [k, x] : big.product[a][b])
          if (big.degree[k] > big.degree[a] + big.degree[b])
            return check_result::fail(name, detail::dual_witness(big, {a, b}));
    return check_result::pass(name);
  }());
  return out;
}

// ---- primitives ---------------------------------------------------------------------

struct primitive_lie {
  super_lie_algebra lie;
  std::vector<sparse_vector> vectors; // basis elements as combinations of the D_m
};

/// Solves Δ(u) = ε⊗u + u⊗ε in each parity and brackets the solutions with
/// [u,v] = u∗v - (-1)^{|u||v|} v∗u. A bracket leaving the primitive space throws.
inline primitive_lie primitives(const truncated_dual& t) {
  if (t.order < 3) throw algebra_error("primitives: order must be at least 3 to represent brackets");
  const std::size_t d = t.dim();
  primitive_lie out;
  out.lie.name = "Lie(" + t.name + ")";
  for (parity p : {parity::even, parity::odd}) {
    std::vector<std::size_t> vars;
    for (std::size_t m = 0; m < d; ++m)
      if (t.par[m] == p) vars.push_back(m);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, rational>>> eqs;
    auto row = [&](std::pair<std::size_t, std::size_t> key) {
      auto [it, fresh] = row_of.try_emplace(key, eqs.size());
      if (fresh) eqs.emplace_back();
      return it->second;
    };
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const std::size_t m = vars[v];
      for (const auto& [ab, x] : t.coproduct[m]) eqs[row(ab)].push_back({v, x});
      eqs[row({t.unit, m})].push_back({v, rational(-1)});
      eqs[row({m, t.unit})].push_back({v, rational(-1)});
    }
    qmatrix sys(eqs.size(), vars.size());
    for (std::size_t r = 0; r < eqs.size(); ++r)
      for (const auto& [v, x] : eqs[r]) sys(r, v) += x;
    for (const auto& sol : nullspace(sys)) {
      sparse_vector u;
      for (std::size_t v = 0; v < vars.size(); ++v)
        if (!sol[v].is_zero()) u[vars[v]] = sol[v];
      bool single = u.size() == 1 && u.begin()->second == rational(1);
      out.lie.labels.push_back(single ? t.labels[u.begin()->first] : "u" + std::to_string(out.vectors.size() + 1));
      out.lie.par.push_back(p);
      out.vectors.push_back(std::move(u));
    }
  }
  const std::size_t n = out.vectors.size();
  qmatrix basis(d, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [m, x] : out.vectors[k]) basis(m, k) = x;
  out.lie.bracket.assign(n, std::vector<sparse_vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      sparse_vector br = dual_multiply(t, out.vectors[i], out.vectors[j]);
      detail::axpy(br, rational(-koszul_sign(out.lie.par[i], out.lie.par[j])),
                   dual_multiply(t, out.vectors[j], out.vectors[i]));
      std::vector<rational> dense(d);
      for (const auto& [m, x] : br) dense[m] = x;
      auto coords = solve_in_span(basis, dense);
      if (!coords)
        throw algebra_error("primitives: [" + out.lie.labels[i] + ", " + out.lie.labels[j] +
                            "] is not primitive");
      for (std::size_t k = 0; k < n; ++k)
        if (!(*coords)[k].is_zero()) out.lie.bracket[i][j][k] = (*coords)[k];
    }
  return out;
}

/// Lie(G) for a GL(m|n) presentation against gl(m|n) on elementary matrices,
/// matching D[z_ab] with E_ab.
inline check_result check_gl_lie_oracle(const hopf_presentation& h, const super_lie_algebra& lie) {
  if (!h.gl_shape) throw algebra_error("check_gl_lie_oracle: not a GL(m|n) presentation");
  auto [m, n] = *h.gl_shape;
  auto oracle = gl_lie_algebra(m, n);
  std::vector<std::size_t> map(lie.dim());
  for (std::size_t a = 0; a < m + n; ++a)
    for (std::size_t b = 0; b < m + n; ++b) {
      std::string gen = "D[" + gl_generator_name(m, a, b) + "]";
      auto it = std::find(lie.labels.begin(), lie.labels.end(), gen);
      if (it == lie.labels.end()) return check_result::fail("primitives match gl(m|n) matrix brackets", gen);
      map[static_cast<std::size_t>(it - lie.labels.begin())] = a * (m + n) + b;
    }
  return check_same_structure("primitives match gl(m|n) matrix brackets", lie, oracle, map);
}

/// The abelian oracle: every bracket vanishes.
inline check_result check_abelian(const super_lie_algebra& lie) {
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = 0; j < lie.dim(); ++j)
      if (!lie.bracket[i][j].empty()) return check_result::fail("Lie algebra is abelian", basis_witness(lie, {i, j}));
  return check_result::pass("Lie algebra is abelian");
}

/// Lie(G)₀ computed from H against Lie(G_ev) computed from the even quotient,
/// matched by generator name.
inline check_result check_lie_even(const hopf_presentation& h, int order = 3, unsigned workers = worker_count()) {
  const char* name = "Lie(G)_0 = Lie(G_ev)";
  auto full = primitives(make_truncated_dual(h, order, workers)).lie;
  auto ev = primitives(make_truncated_dual(even_quotient(h), order, workers)).lie;
  super_lie_algebra even_part;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < full.dim(); ++i)
    if (!is_odd(full.par[i])) keep.push_back(i);
  even_part.labels.reserve(keep.size());
  for (auto i : keep) {
    even_part.labels.push_back(full.labels[i]);
    even_part.par.push_back(parity::even);
  }
  even_part.bracket.assign(keep.size(), std::vector<sparse_vector>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      for (const auto& [k, x] : full.bracket[keep[a]][keep[b]]) {
        auto pos = std::find(keep.begin(), keep.end(), k);
        if (pos == keep.end()) return check_result::fail(name, basis_witness(full, {keep[a], keep[b]}), "odd component");
        even_part.bracket[a][b][static_cast<std::size_t>(pos - keep.begin())] = x;
      }
  if (even_part.dim() != ev.dim())
    return check_result::fail(name, {{"Lie(G)_0", even_part.dim()}, {"Lie(G_ev)", ev.dim()}}, "dimensions differ");
  std::vector<std::size_t> map(ev.dim());
  for (std::size_t i = 0; i < even_part.dim(); ++i) {
    auto it = std::find(ev.labels.begin(), ev.labels.end(), even_part.labels[i]);
    if (it == ev.labels.end()) return check_result::fail(name, even_part.labels[i], "no matching basis element");
    map[i] = static_cast<std::size_t>(it - ev.labels.begin());
  }
  auto r = check_same_structure(name, even_part, ev, map);
  r.detail = "dim " + std::to_string(ev.dim());
  return r;
}

/// Monomials of degree < n in e commuting and o anticommuting variables.
inline std::size_t super_pbw_count(std::size_t e, std::size_t o, int n) {
  auto binom = [](std::size_t a, std::size_t b) -> std::size_t {
    if (b > a) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  auto multichoose = [&](std::size_t a, std::size_t b) -> std::size_t {
    if (a == 0) return b == 0 ? 1 : 0;
    return binom(a + b - 1, b);
  };
  std::size_t total = 0;
  for (int j = 0; j < n; ++j)
    for (std::size_t k = 0; k <= std::min<std::size_t>(o, static_cast<std::size_t>(j)); ++k)
      total += binom(o, k) * multichoose(e, static_cast<std::size_t>(j) - k);
  return total;
}

/// dim (A/(A⁺)ⁿ)* against the super-PBW count from the Lie dimensions of order-3 primitives.
inline check_result pbw_dim_check(const hopf_presentation& h, int n, unsigned workers = worker_count()) {
  auto lie = primitives(make_truncated_dual(h, 3, workers)).lie;
  auto t = make_truncated_dual(h, n, workers);
  std::size_t want = super_pbw_count(lie.even_dim(), lie.odd_dim(), n);
  return check_result::of("dim of order-" + std::to_string(n) + " dual equals the super-PBW count", t.dim() == want,
                          {{"dimension", t.dim()}, {"pbw", want}},
                          "dim " + std::to_string(t.dim()) + ", Lie dimension (" + std::to_string(lie.even_dim()) +
                              "|" + std::to_string(lie.odd_dim()) + ")");
}

inline nlohmann::json to_json(const truncated_dual& t) {
  nlohmann::json prod = nlohmann::json::array();
  for (std::size_t a = 0; a < t.dim(); ++a)
    for (std::size_t b = 0; b < t.dim(); ++b) {
      if (t.product[a][b].empty()) continue;
      nlohmann::json terms = nlohmann::json::object();
      for (const auto& [k, x] : t.product[a][b]) terms[t.labels[k]] = x.str();
      prod.push_back({{"u", t.labels[a]}, {"v", t.labels[b]}, {"product", terms}});
    }
  nlohmann::json cop = nlohmann::json::array();
  for (std::size_t m = 0; m < t.dim(); ++m) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [ab, x] : t.coproduct[m]) terms.push_back({t.labels[ab.first], t.labels[ab.second], x.str()});
    cop.push_back({{"u", t.labels[m]}, {"coproduct", terms}});
  }
  nlohmann::json parities = nlohmann::json::array();
  for (auto p : t.par) parities.push_back(to_string(p));
  return {{"name", t.name}, {"order", t.order}, {"basis", t.labels}, {"parity", parities},
          {"product", prod},  {"coproduct", cop}};
}

} // namespace superhopf
