#pragma once

// Finite-dimensional (super) Hopf algebras as structure-constant tables:
// exterior Hopf algebras and their duality pairing, bosonization, integrals.

#include "superhopf/hopf.hpp"
#include "superhopf/linalg.hpp"
#include "superhopf/report.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superhopf {

using tensor_vector = std::map<std::pair<std::size_t, std::size_t>, rational>;

struct finite_hopf {
  std::string name;
  bool super = true; // false: ordinary Hopf algebra, no Koszul signs
  std::vector<std::string> labels;
  std::vector<parity> par;
  std::vector<std::vector<sparse_vector>> mult; // mult[i][j] = e_i e_j
  sparse_vector unit;
  std::vector<tensor_vector> coproduct;
  std::vector<rational> counit;
  std::vector<sparse_vector> antipode;

  std::size_t dim() const { return labels.size(); }
};

namespace detail {

inline void axpy(sparse_vector& acc, const rational& c, const sparse_vector& v) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) {
    auto& slot = acc[i];
    slot += c * x;
    if (slot.is_zero()) acc.erase(i);
  }
}

inline void axpy(tensor_vector& acc, const rational& c, const tensor_vector& v) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : v) {
    auto& slot = acc[k];
    slot += c * x;
    if (slot.is_zero()) acc.erase(k);
  }
}

inline void add_entry(tensor_vector& acc, std::size_t i, std::size_t j, const rational& c) {
  if (c.is_zero()) return;
  auto& slot = acc[{i, j}];
  slot += c;
  if (slot.is_zero()) acc.erase({i, j});
}

inline nlohmann::json label_witness(const finite_hopf& h, std::initializer_list<std::size_t> idx) {
  nlohmann::json j = nlohmann::json::array();
  for (auto i : idx) j.push_back(h.labels[i]);
  return j;
}

} // namespace detail

inline sparse_vector multiply(const finite_hopf& h, const sparse_vector& a, const sparse_vector& b) {
  sparse_vector r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) detail::axpy(r, x * y, h.mult[i][j]);
  return r;
}

inline sparse_vector basis_vector(std::size_t i) { return {{i, rational(1)}}; }

inline tensor_vector coproduct_of(const finite_hopf& h, const sparse_vector& a) {
  tensor_vector r;
  for (const auto& [i, x] : a) detail::axpy(r, x, h.coproduct[i]);
  return r;
}

/// Product in H ⊗ H: (a⊗b)(c⊗d) = ± ac ⊗ bd, the sign (-1)^{|b||c|} only in the super case.
inline tensor_vector tensor_product(const finite_hopf& h, const tensor_vector& x, const tensor_vector& y) {
  tensor_vector r;
  for (const auto& [ab, s] : x)
    for (const auto& [cd, t] : y) {
      rational coef = s * t;
      if (h.super && is_odd(h.par[ab.second] * h.par[cd.first])) coef = -coef;
      const auto& ac = h.mult[ab.first][cd.first];
      const auto& bd = h.mult[ab.second][cd.second];
      for (const auto& [i, u] : ac)
        for (const auto& [j, v] : bd) detail::add_entry(r, i, j, coef * u * v);
    }
  return r;
}

/// Full table check of the (super) Hopf algebra axioms.
inline std::vector<check_result> check_finite_hopf(const finite_hopf& h) {
  const std::size_t n = h.dim();
  std::vector<check_result> out;
  auto pair_list = [&](const char* name, auto&& pred, auto&& witness) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!pred(i, j)) return check_result::fail(name, witness(i, j));
    return check_result::pass(name);
  };
  auto single = [&](const char* name, auto&& pred) {
    for (std::size_t i = 0; i < n; ++i)
      if (!pred(i)) return check_result::fail(name, detail::label_witness(h, {i}));
    return check_result::pass(name);
  };

  out.push_back([&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (multiply(h, h.mult[i][j], basis_vector(k)) != multiply(h, basis_vector(i), h.mult[j][k]))
            return check_result::fail("associativity", detail::label_witness(h, {i, j, k}));
    return check_result::pass("associativity");
  }());
  out.push_back(single("unit", [&](std::size_t i) {
    return multiply(h, h.unit, basis_vector(i)) == basis_vector(i) &&
           multiply(h, basis_vector(i), h.unit) == basis_vector(i);
  }));

  // (Δ⊗id)Δ and (id⊗Δ)Δ as maps to triples
  using triple_vector = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, rational>;
  auto add3 = [](triple_vector& t, std::size_t a, std::size_t b, std::size_t c, const rational& x) {
    if (x.is_zero()) return;
    auto& slot = t[{a, b, c}];
    slot += x;
    if (slot.is_zero()) t.erase({a, b, c});
  };
  out.push_back(single("coassociativity", [&](std::size_t i) {
    triple_vector l, r;
    for (const auto& [ab, x] : h.coproduct[i]) {
      for (const auto& [cd, y] : h.coproduct[ab.first]) add3(l, cd.first, cd.second, ab.second, x * y);
      for (const auto& [cd, y] : h.coproduct[ab.second]) add3(r, ab.first, cd.first, cd.second, x * y);
    }
    return l == r;
  }));
  out.push_back(single("counit", [&](std::size_t i) {
    sparse_vector l, r;
    for (const auto& [ab, x] : h.coproduct[i]) {
      detail::axpy(l, x * h.counit[ab.first], basis_vector(ab.second));
      detail::axpy(r, x * h.counit[ab.second], basis_vector(ab.first));
    }
    return l == basis_vector(i) && r == basis_vector(i);
  }));
  out.push_back(pair_list(
      "coproduct is multiplicative",
      [&](std::size_t i, std::size_t j) {
        return coproduct_of(h, h.mult[i][j]) == tensor_product(h, h.coproduct[i], h.coproduct[j]);
      },
      [&](std::size_t i, std::size_t j) { return detail::label_witness(h, {i, j}); }));
  out.push_back([&] {
    tensor_vector unit2;
    for (const auto& [i, x] : h.unit)
      for (const auto& [j, y] : h.unit) detail::add_entry(unit2, i, j, x * y);
    if (coproduct_of(h, h.unit) != unit2) return check_result::fail("coproduct and counit are unital", "Δ(1)");
    rational e;
    for (const auto& [i, x] : h.unit) e += x * h.counit[i];
    if (e != rational(1)) return check_result::fail("coproduct and counit are unital", "ε(1)");
    return check_result::pass("coproduct and counit are unital");
  }());
  out.push_back(pair_list(
      "counit is multiplicative",
      [&](std::size_t i, std::size_t j) {
        rational e;
        for (const auto& [k, x] : h.mult[i][j]) e += x * h.counit[k];
        return e == h.counit[i] * h.counit[j];
      },
      [&](std::size_t i, std::size_t j) { return detail::label_witness(h, {i, j}); }));
  auto antipode_side = [&](bool left) {
    return [&, left](std::size_t i) {
      sparse_vector acc;
      for (const auto& [ab, x] : h.coproduct[i]) {
        auto prod = left ? multiply(h, h.antipode[ab.first], basis_vector(ab.second))
                         : multiply(h, basis_vector(ab.first), h.antipode[ab.second]);
        detail::axpy(acc, x, prod);
      }
      sparse_vector want;
      detail::axpy(want, h.counit[i], h.unit);
      return acc == want;
    };
  };
  out.push_back(single("antipode m(S⊗id)Δ = ηε", antipode_side(true)));
  out.push_back(single("antipode m(id⊗S)Δ = ηε", antipode_side(false)));
  if (h.super) {
    out.push_back([&] {
      auto homogeneous = [&](const sparse_vector& v, parity p) {
        for (const auto& [k, x] : v)
          if (h.par[k] != p) return false;
        return true;
      };
      for (std::size_t i = 0; i < n; ++i) {
        if (!homogeneous(h.antipode[i], h.par[i]) || (!h.counit[i].is_zero() && is_odd(h.par[i])))
          return check_result::fail("structure maps preserve parity", detail::label_witness(h, {i}));
        for (const auto& [ab, x] : h.coproduct[i])
          if (h.par[ab.first] + h.par[ab.second] != h.par[i])
            return check_result::fail("structure maps preserve parity", detail::label_witness(h, {i}));
        for (std::size_t j = 0; j < n; ++j)
          if (!homogeneous(h.mult[i][j], h.par[i] + h.par[j]))
            return check_result::fail("structure maps preserve parity", detail::label_witness(h, {i, j}));
      }
      return check_result::pass("structure maps preserve parity");
    }());
  }
  return out;
}

/// Tables of a presentation with only odd generators (hence finite-dimensional),
/// on the monomial basis.
inline finite_hopf finite_from_presentation(const hopf_presentation& p) {
  const auto& g = *p.gens;
  if (g.num_even() > 0) throw algebra_error("finite_from_presentation: even generators make the algebra infinite");
  if (!p.antipode) throw algebra_error("finite_from_presentation: antipode images required");
  finite_hopf h;
  h.name = p.name;
  auto monos = enumerate_monomials(g, static_cast<int>(g.num_odd()));
  std::map<super_monomial, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    index[monos[i]] = i;
    h.labels.push_back(format_monomial(g, monos[i]));
    h.par.push_back(monos[i].par());
  }
  auto to_vec = [&](const super_poly& q) {
    sparse_vector v;
    for (const auto& [m, c] : q.terms()) v[index.at(m)] = c;
    return v;
  };
  const std::size_t n = monos.size();
  h.mult.assign(n, std::vector<sparse_vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto [s, m] = multiply_monomials(monos[i], monos[j]);
      if (s != 0) h.mult[i][j][index.at(m)] = rational(s);
    }
  h.unit = basis_vector(index.at(super_monomial{}));
  algebra_hom delta = delta_hom(p);
  algebra_hom anti = *antipode_hom(p);
  for (std::size_t i = 0; i < n; ++i) {
    auto mono = super_poly::monomial(p.gens, monos[i]);
    tensor_vector t;
    for (const auto& tm : super_tensor::from_value(p.gens, p.gens, delta.apply(mono)).terms())
      detail::add_entry(t, index.at(tm.left), index.at(tm.right), tm.coeff);
    h.coproduct.push_back(std::move(t));
    h.counit.push_back(apply_counit(p, mono));
    h.antipode.push_back(to_vec(anti.apply(mono)));
  }
  return h;
}

// ---- exterior duality ---------------------------------------------------------

/// ⟨f_1∧…∧f_k, v_1∧…∧v_l⟩ = δ_kl Σ_σ sgn(σ) f_1(v_σ(1))…f_k(v_σ(k)) for the dual
/// bases f_i(v_j) = δ_ij, extended bilinearly. Both arguments are exterior
/// algebras on the same number of generators, matched by index.
inline scalar exterior_pairing(const super_poly& f, const super_poly& w) {
  if (f.gens() && w.gens() && (f.gens()->num_odd() != w.gens()->num_odd() || f.gens()->num_even() || w.gens()->num_even()))
    throw algebra_error("exterior_pairing: arguments must be exterior algebras of the same dimension");
  scalar total;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mw, cw] : w.terms()) {
      auto fi = mf.odd_support(), wi = mw.odd_support();
      if (fi.size() != wi.size()) continue;
      const std::size_t k = fi.size();
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      scalar det;
      do {
        bool nonzero = true;
        for (std::size_t a = 0; a < k && nonzero; ++a) nonzero = fi[a] == wi[perm[a]];
        if (!nonzero) continue;
        int inv = 0;
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = a + 1; b < k; ++b)
            if (perm[a] > perm[b]) ++inv;
        det += scalar(inv % 2 ? -1 : 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
      total += cf * cw * det;
    }
  return total;
}

/// Pairing-induced map Λ(V*) → Λ(V)*: bijective, an algebra map to the
/// convolution algebra, a coalgebra map to the dual of the product, and
/// compatible with units, counits and antipodes. The pairing on tensors is
/// ⟨f⊗g, a⊗b⟩ = ⟨f,a⟩⟨g,b⟩.
inline std::vector<check_result> dual_iso_check(std::size_t n) {
  auto hv = exterior_hopf(n, "v"), hf = exterior_hopf(n, "f");
  auto V = finite_from_presentation(hv), F = finite_from_presentation(hf);
  const std::size_t d = V.dim();
  auto mono = [&](const hopf_presentation& p, std::size_t mask) {
    super_monomial m;
    m.odd = mask;
    return super_poly::monomial(p.gens, m);
  };
  // basis order of finite_from_presentation, recovered by label
  auto basis_masks = [&](const finite_hopf& h, const hopf_presentation& p) {
    std::vector<std::size_t> masks(h.dim());
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      auto lbl = format_monomial(*p.gens, super_monomial{{}, mask});
      auto it = std::find(h.labels.begin(), h.labels.end(), lbl);
      masks[static_cast<std::size_t>(it - h.labels.begin())] = mask;
    }
    return masks;
  };
  auto mv = basis_masks(V, hv), mf = basis_masks(F, hf);
  qmatrix phi(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) phi(a, b) = exterior_pairing(mono(hf, mf[a]), mono(hv, mv[b]));

  auto pair_vec = [&](const sparse_vector& f, const sparse_vector& w) {
    rational s;
    for (const auto& [a, x] : f)
      for (const auto& [b, y] : w) s += x * y * phi(a, b);
    return s;
  };
  auto pair_tensor = [&](const tensor_vector& ft, std::size_t b, std::size_t c) {
    rational s;
    for (const auto& [ij, x] : ft) s += x * phi(ij.first, b) * phi(ij.second, c);
    return s;
  };

  std::vector<check_result> out;
  const std::string info = "dim V = " + std::to_string(n) + ", " + std::to_string(d) + "x" + std::to_string(d) + " pairing";
  out.push_back(check_result::of("pairing is nondegenerate", rank(phi) == d, {{"rank", rank(phi)}}, info));

  auto triple_check = [&](const char* name, auto&& lhs, auto&& rhs) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          if (lhs(a, b, c) != rhs(a, b, c))
            return check_result::fail(name, {{"f", F.labels[a]}, {"g_or_v", b}, {"w", c}}, info);
    return check_result::pass(name, info);
  };
  // ⟨fg, w⟩ = Σ ⟨f, w1⟩⟨g, w2⟩
  out.push_back(triple_check(
      "product of Λ(V*) matches the convolution product on Λ(V)*",
      [&](std::size_t a, std::size_t b, std::size_t c) { return pair_vec(F.mult[a][b], basis_vector(c)); },
      [&](std::size_t a, std::size_t b, std::size_t c) {
        rational s;
        for (const auto& [ij, x] : V.coproduct[c]) s += x * phi(a, ij.first) * phi(b, ij.second);
        return s;
      }));
  // ⟨Δf, v⊗w⟩ = ⟨f, vw⟩
  out.push_back(triple_check(
      "coproduct of Λ(V*) is dual to the product of Λ(V)",
      [&](std::size_t a, std::size_t b, std::size_t c) { return pair_tensor(F.coproduct[a], b, c); },
      [&](std::size_t a, std::size_t b, std::size_t c) { return pair_vec(basis_vector(a), V.mult[b][c]); }));
  bool units = true, antipodes = true;
  for (std::size_t a = 0; a < d; ++a) {
    if (pair_vec(F.unit, basis_vector(a)) != V.counit[a] || pair_vec(basis_vector(a), V.unit) != F.counit[a])
      units = false;
    for (std::size_t b = 0; b < d; ++b)
      if (pair_vec(F.antipode[a], basis_vector(b)) != pair_vec(basis_vector(a), V.antipode[b])) antipodes = false;
  }
  out.push_back(check_result::of("unit and counit are dual", units, "unit/counit mismatch", info));
  out.push_back(check_result::of("antipodes are adjoint", antipodes, "antipode mismatch", info));
  return out;
}

// ---- bosonization ---------------------------------------------------------------

/// kZ₂ ⋉ A for a finite super Hopf algebra A: basis g^e ⊗ a, product
/// (g^e⊗a)(g^f⊗b) = (-1)^{f|a|} g^{e+f} ⊗ ab, coproduct
/// Δ(g^e⊗c) = Σ (g^e⊗c₁) ⊗ (g^{e+|c₁|}⊗c₂), ε(g^e⊗c) = ε(c),
/// S(g^e⊗c) = (-1)^{|c|(1+e)} g^{e+|c|} ⊗ S(c). The result is an ordinary Hopf algebra.
inline finite_hopf bosonize(const finite_hopf& a) {
  if (!a.super) throw algebra_error("bosonize: input must be a super Hopf algebra");
  const std::size_t n = a.dim();
  finite_hopf h;
  h.name = "Z2 x| " + a.name;
  h.super = false;
  auto idx = [n](std::size_t e, std::size_t i) { return e * n + i; };
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t i = 0; i < n; ++i) {
      h.labels.push_back(std::string(e ? "g" : "1") + "⊗" + a.labels[i]);
      h.par.push_back(a.par[i]);
    }
  h.mult.assign(2 * n, std::vector<sparse_vector>(2 * n));
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t f = 0; f < 2; ++f)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          bool neg = f && is_odd(a.par[i]);
          for (const auto& [k, x] : a.mult[i][j]) h.mult[idx(e, i)][idx(f, j)][idx(e ^ f, k)] = neg ? -x : x;
        }
  for (const auto& [k, x] : a.unit) h.unit[idx(0, k)] = x;
  h.coproduct.resize(2 * n);
  h.antipode.resize(2 * n);
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t i = 0; i < n; ++i) {
      auto& t = h.coproduct[idx(e, i)];
      for (const auto& [lr, x] : a.coproduct[i]) {
        std::size_t shift = e ^ (is_odd(a.par[lr.first]) ? 1u : 0u);
        detail::add_entry(t, idx(e, lr.first), idx(shift, lr.second), x);
      }
      h.counit.push_back(a.counit[i]);
      bool odd = is_odd(a.par[i]);
      bool neg = odd && (e == 0); // (-1)^{|c|(1+e)}
      for (const auto& [k, x] : a.antipode[i]) h.antipode[idx(e, i)][idx(e ^ (odd ? 1u : 0u), k)] = neg ? -x : x;
    }
  return h;
}

/// Index of g^e ⊗ a_i in a bosonization built from an n-dimensional algebra.
inline std::size_t bosonized_index(std::size_t n, std::size_t e, std::size_t i) { return e * n + i; }

/// For every odd primitive v of a, the coproduct of g^e⊗v in b = bosonize(a) is
/// exactly (g^e⊗v)⊗(g^{e+1}⊗1) + (g^e⊗1)⊗(g^e⊗v), term by term. Returns the
/// number of primitives compared through `count`.
inline check_result check_smash_primitives(const finite_hopf& a, const finite_hopf& b, std::size_t* count = nullptr) {
  const std::size_t n = a.dim();
  if (a.unit.size() != 1 || !a.unit.begin()->second.is_one() || b.dim() != 2 * n)
    return check_result::fail("smash coproduct on primitives", {{"reason", "unit is not a basis vector"}});
  const std::size_t u = a.unit.begin()->first;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_odd(a.par[i])) continue;
    tensor_vector prim{{{i, u}, rational(1)}, {{u, i}, rational(1)}};
    if (a.coproduct[i] != prim) continue;
    ++seen;
    for (std::size_t e = 0; e < 2; ++e) {
      tensor_vector want{{{bosonized_index(n, e, i), bosonized_index(n, e ^ 1, u)}, rational(1)},
                         {{bosonized_index(n, e, u), bosonized_index(n, e, i)}, rational(1)}};
      if (b.coproduct[bosonized_index(n, e, i)] != want)
        return check_result::fail("smash coproduct on primitives", {{"element", b.labels[bosonized_index(n, e, i)]}});
    }
  }
  if (count) *count = seen;
  return check_result::pass("smash coproduct on primitives", std::to_string(seen) + " odd primitives, both cosets");
}

// ---- integrals --------------------------------------------------------------------

struct integral_space {
  std::vector<std::vector<rational>> left; // basis of left integrals (functional values on the basis)
  std::vector<parity_class> parity;        // parity of each basis functional
  std::size_t right_dimension = 0;         // dim of right integrals, solved independently
  std::vector<std::vector<rational>> left_composed_with_S; // ∫∘S for each left basis functional
  bool composed_are_right = false;                         // every ∫∘S solves the right-integral system
  bool nonzero_on_unit = false;                            // some left integral has ∫1 ≠ 0 (linear reductivity)
};

namespace detail {

/// Matrix of the system (id⊗∫)Δ(a) = ∫(a)1 (left) or (∫⊗id)Δ(a) = ∫(a)1 (right).
inline qmatrix integral_system(const finite_hopf& h, bool left) {
  const std::size_t n = h.dim();
  qmatrix m(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& [ij, x] : h.coproduct[a]) {
      std::size_t out = left ? ij.first : ij.second, var = left ? ij.second : ij.first;
      m(a * n + out, var) += x;
    }
    for (const auto& [i, u] : h.unit) m(a * n + i, a) -= u;
  }
  return m;
}

inline parity_class functional_parity(const finite_hopf& h, const std::vector<rational>& f) {
  bool ev = false, od = false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero()) (is_odd(h.par[i]) ? od : ev) = true;
  if (ev && od) return parity_class::mixed;
  return od ? parity_class::odd : parity_class::even;
}

} // namespace detail

inline integral_space compute_integrals(const finite_hopf& h) {
  integral_space s;
  s.left = nullspace(detail::integral_system(h, true));
  for (const auto& f : s.left) {
    s.parity.push_back(detail::functional_parity(h, f));
    rational at_one;
    for (const auto& [i, u] : h.unit) at_one += u * f[i];
    if (!at_one.is_zero()) s.nonzero_on_unit = true;
  }
  qmatrix right = detail::integral_system(h, false);
  s.right_dimension = nullspace(right).size();
  s.composed_are_right = true;
  for (const auto& f : s.left) {
    std::vector<rational> fs(h.dim());
    for (std::size_t a = 0; a < h.dim(); ++a)
      for (const auto& [b, x] : h.antipode[a]) fs[a] += x * f[b];
    for (std::size_t r = 0; r < right.rows(); ++r) {
      rational acc;
      for (std::size_t c = 0; c < right.cols(); ++c)
        if (!right(r, c).is_zero()) acc += right(r, c) * fs[c];
      if (!acc.is_zero()) s.composed_are_right = false;
    }
    s.left_composed_with_S.push_back(std::move(fs));
  }
  return s;
}

inline std::vector<check_result> check_integrals(const finite_hopf& h, std::optional<parity> expected = std::nullopt) {
  auto s = compute_integrals(h);
  std::vector<check_result> out;
  out.push_back(check_result::of("dim of left integrals ≤ 1", s.left.size() <= 1, {{"dimension", s.left.size()}},
                                 "dim = " + std::to_string(s.left.size())));
  bool homogeneous = std::none_of(s.parity.begin(), s.parity.end(), [](auto p) { return p == parity_class::mixed; });
  out.push_back(check_result::of("left integrals are homogeneous", homogeneous));
  out.push_back(check_result::of("∫∘S is a right integral", s.composed_are_right));
  out.push_back(check_result::of("dim of right integrals equals dim of left integrals",
                                 s.right_dimension == s.left.size(), {{"right", s.right_dimension}, {"left", s.left.size()}}));
  if (expected) {
    bool ok = s.left.size() == 1 && s.parity[0] == (is_odd(*expected) ? parity_class::odd : parity_class::even);
    out.push_back(check_result::of(std::string("nonzero integral of parity ") + to_string(*expected), ok,
                                   {{"dimension", s.left.size()}}));
  }
  return out;
}

} // namespace superhopf
