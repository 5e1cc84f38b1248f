#pragma once

// Super Hopf algebra presentations: free super-commutative algebras whose
// structure maps are given on generators and extended as algebra morphisms.

#include "superhopf/grassmann.hpp"
#include "superhopf/linalg.hpp"
#include "superhopf/report.hpp"
#include "superhopf/super_poly.hpp"
#include "superhopf/syntax.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superhopf {

class presentation_error : public algebra_error {
public:
  presentation_error(const std::string& generator, const std::string& msg)
      : algebra_error("generator '" + generator + "': " + msg), generator_(generator) {}
  const std::string& generator() const { return generator_; }

private:
  std::string generator_;
};

struct hopf_presentation {
  std::string name;
  gen_set_ptr gens;
  gen_set_ptr gens2;             // A ⊗ A
  std::vector<super_poly> delta; // per generator slot, in gens2
  std::vector<scalar> counit;    // per generator slot
  /// Per-slot antipode images; empty when S is only available pointwise.
  std::optional<std::vector<super_poly>> antipode;
  /// Set for GL(m|n) presentations, whose generators follow the x/p/q/y naming.
  std::optional<std::pair<std::size_t, std::size_t>> gl_shape;

  bool symbolic_antipode() const { return antipode.has_value(); }
  const super_poly& delta_of(const std::string& g) const { return delta[gens->slot_of(gens->lookup(g))]; }
};

inline bool operator==(const hopf_presentation& a, const hopf_presentation& b) {
  return *a.gens == *b.gens && a.delta == b.delta && a.counit == b.counit && a.antipode == b.antipode;
}

/// Checks the invariants every presentation must satisfy and throws
/// presentation_error naming the offending generator.
inline void validate(const hopf_presentation& h) {
  const auto& g = *h.gens;
  if (h.delta.size() != g.size() || h.counit.size() != g.size())
    throw algebra_error("presentation: structure-map images do not cover the generators");
  if (h.antipode && h.antipode->size() != g.size()) throw algebra_error("presentation: antipode images incomplete");
  for (std::size_t slot = 0; slot < g.size(); ++slot) {
    symbol s = g.slot_symbol(slot);
    const std::string& nm = g.name(s);
    const auto want = is_odd(s.par) ? parity_class::odd : parity_class::even;
    if (!same_set(h.delta[slot].gens(), h.gens2) && !h.delta[slot].is_zero())
      throw presentation_error(nm, "coproduct image lives outside A ⊗ A");
    if (!h.delta[slot].is_zero() && h.delta[slot].parity_of() != want)
      throw presentation_error(nm, std::string("coproduct image is ") + to_string(h.delta[slot].parity_of()) +
                                       ", generator is " + to_string(s.par));
    if (is_odd(s.par) && !h.counit[slot].is_zero()) throw presentation_error(nm, "counit of an odd generator must be 0");
    if (h.antipode) {
      const auto& a = (*h.antipode)[slot];
      if (a.gens() && !same_set(a.gens(), h.gens)) throw presentation_error(nm, "antipode image lives outside A");
      if (!a.is_zero() && a.parity_of() != want) throw presentation_error(nm, "antipode image has the wrong parity");
    }
  }
}

inline hopf_presentation make_presentation(std::string name, gen_set_ptr gens, std::vector<super_poly> delta,
                                           std::vector<scalar> counit,
                                           std::optional<std::vector<super_poly>> antipode) {
  hopf_presentation h;
  h.name = std::move(name);
  h.gens = std::move(gens);
  h.gens2 = tensor_power(h.gens, 2);
  for (auto& d : delta)
    if (!d.gens()) d.rebind(h.gens2);
  if (antipode)
    for (auto& a : *antipode)
      if (!a.gens()) a.rebind(h.gens);
  h.delta = std::move(delta);
  h.counit = std::move(counit);
  h.antipode = std::move(antipode);
  validate(h);
  return h;
}

namespace detail {

inline std::vector<gen_set_ptr> copies(const gen_set_ptr& g, std::size_t r) { return std::vector<gen_set_ptr>(r, g); }

/// Image of p ∈ A^{⊗r} in A^{⊗s}, sending tensor factor f to factor dst[f].
inline super_poly reembed(const super_poly& p, const std::vector<gen_set_ptr>& src_factors, const gen_set_ptr& dst,
                          const std::vector<gen_set_ptr>& dst_factors, const std::vector<std::size_t>& dst_copy) {
  super_poly r(dst);
  for (const auto& [m, c] : p.terms()) {
    auto legs = split_monomial(m, src_factors);
    super_poly t(dst, c);
    for (std::size_t f = 0; f < legs.size(); ++f)
      t = t * embed_factor(super_poly::monomial(src_factors[f], legs[f]), dst, dst_factors, dst_copy[f]);
    r += t;
  }
  return r;
}

inline super_poly embed_generator(const generator_set& g, std::size_t slot, const gen_set_ptr& dst,
                                  const std::vector<gen_set_ptr>& dst_factors, std::size_t copy,
                                  const gen_set_ptr& src) {
  return embed_factor(super_poly::generator(src, g.slot_symbol(slot)), dst, dst_factors, copy);
}

/// Generator images for the slots of A^{⊗r}: slot order is all evens (factor
/// by factor) followed by all odds (factor by factor).
inline std::vector<super_poly> product_images(const gen_set_ptr& g, std::size_t r,
                                              const std::function<super_poly(std::size_t factor, std::size_t slot)>& img) {
  std::vector<super_poly> out;
  for (std::size_t f = 0; f < r; ++f)
    for (std::size_t i = 0; i < g->num_even(); ++i) out.push_back(img(f, i));
  for (std::size_t f = 0; f < r; ++f)
    for (std::size_t i = 0; i < g->num_odd(); ++i) out.push_back(img(f, g->num_even() + i));
  return out;
}

} // namespace detail

inline algebra_hom delta_hom(const hopf_presentation& h) { return algebra_hom(h.gens, h.gens2, h.delta, false); }

inline std::optional<algebra_hom> antipode_hom(const hopf_presentation& h) {
  if (!h.antipode) return std::nullopt;
  return algebra_hom(h.gens, h.gens, *h.antipode, false);
}

inline super_poly apply_delta(const hopf_presentation& h, const super_poly& p) { return delta_hom(h).apply(p); }

inline scalar apply_counit(const hopf_presentation& h, const super_poly& p) {
  auto scalars = generator_set::make({}, {});
  std::vector<super_poly> imgs;
  for (const auto& c : h.counit) imgs.emplace_back(scalars, c);
  return algebra_hom(h.gens, scalars, imgs, false).apply(p).constant_term();
}

// ---- built-in presentations ------------------------------------------------

/// Λ(V), dim V = n: odd primitive generators v1..vn with S(v) = -v.
inline hopf_presentation exterior_hopf(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> odds;
  for (std::size_t i = 1; i <= n; ++i) odds.push_back(prefix + std::to_string(i));
  auto gens = generator_set::make({}, odds);
  auto gens2 = tensor_power(gens, 2);
  auto fac = detail::copies(gens, 2);
  std::vector<super_poly> delta, anti;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = super_poly::generator(gens, symbol{parity::odd, i});
    delta.push_back(embed_factor(v, gens2, fac, 0) + embed_factor(v, gens2, fac, 1));
    anti.push_back(-v);
  }
  return make_presentation("exterior(" + std::to_string(n) + ")", gens, std::move(delta),
                           std::vector<scalar>(n), std::move(anti));
}

/// O(G_a^{1|1}) = k[t] ⊗ Λ(τ), both generators primitive.
inline hopf_presentation ga11_presentation() {
  auto gens = generator_set::make({"t"}, {"tau"});
  auto gens2 = tensor_power(gens, 2);
  auto fac = detail::copies(gens, 2);
  std::vector<super_poly> delta, anti;
  for (std::size_t slot = 0; slot < 2; ++slot) {
    auto g = super_poly::generator(gens, gens->slot_symbol(slot));
    delta.push_back(embed_factor(g, gens2, fac, 0) + embed_factor(g, gens2, fac, 1));
    anti.push_back(-g);
  }
  return make_presentation("Ga(1|1)", gens, std::move(delta), {scalar(), scalar()}, std::move(anti));
}

/// Name of the shifted coordinate z̃_ab of GL(m|n), 0-based block-matrix indices.
inline std::string gl_generator_name(std::size_t m, std::size_t a, std::size_t b) {
  auto idx = [](std::size_t i) { return std::to_string(i + 1); };
  if (a < m && b < m) return "x_" + idx(a) + "_" + idx(b);
  if (a < m) return "p_" + idx(a) + "_" + idx(b - m);
  if (b < m) return "q_" + idx(a - m) + "_" + idx(b);
  return "y_" + idx(a - m) + "_" + idx(b - m);
}

/// O(GL(m|n)) in the coordinates z̃ = z - δ, which vanish at the identity:
///   Δ(z̃_ab) = z̃_ab ⊗ 1 + 1 ⊗ z̃_ab + Σ_c z̃_ac ⊗ z̃_cb,   ε(z̃_ab) = 0.
/// The antipode needs det(X)^{-1}, det(Y)^{-1} and is left pointwise-only.
inline hopf_presentation glmn_presentation(std::size_t m, std::size_t n) {
  const std::size_t N = m + n;
  std::vector<std::string> ev, od;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) ev.push_back(gl_generator_name(m, a, b));
  for (std::size_t a = m; a < N; ++a)
    for (std::size_t b = m; b < N; ++b) ev.push_back(gl_generator_name(m, a, b));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = m; b < N; ++b) od.push_back(gl_generator_name(m, a, b));
  for (std::size_t a = m; a < N; ++a)
    for (std::size_t b = 0; b < m; ++b) od.push_back(gl_generator_name(m, a, b));
  auto gens = generator_set::make(ev, od);
  auto gens2 = tensor_power(gens, 2);
  auto fac = detail::copies(gens, 2);
  auto z = [&](std::size_t a, std::size_t b) { return super_poly::generator(gens, gl_generator_name(m, a, b)); };
  std::vector<super_poly> delta(gens->size());
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      super_poly d = embed_factor(z(a, b), gens2, fac, 0) + embed_factor(z(a, b), gens2, fac, 1);
      for (std::size_t c = 0; c < N; ++c) d += embed_factor(z(a, c), gens2, fac, 0) * embed_factor(z(c, b), gens2, fac, 1);
      delta[gens->slot_of(gens->lookup(gl_generator_name(m, a, b)))] = std::move(d);
    }
  auto h = make_presentation("GL(" + std::to_string(m) + "|" + std::to_string(n) + ")", gens, std::move(delta),
                             std::vector<scalar>(gens->size()), std::nullopt);
  h.gl_shape = std::make_pair(m, n);
  return h;
}

// ---- axiom checks ---------------------------------------------------------

/// All normal monomials with at most max_factors generator factors, in
/// monomial order. `weighted` measures size by generator degrees instead.
inline std::vector<super_monomial> enumerate_monomials(const generator_set& g, int max_degree, bool weighted = false) {
  std::vector<super_monomial> out;
  const std::size_t ne = g.num_even(), no = g.num_odd();
  auto weight = [&](std::size_t slot) { return weighted ? g.degree(g.slot_symbol(slot)) : 1; };
  super_monomial cur;
  cur.exps.assign(ne, 0);
  std::function<void(std::size_t, int)> odd_rec = [&](std::size_t j, int budget) {
    if (j == no) {
      super_monomial m = cur;
      m.trim();
      out.push_back(std::move(m));
      return;
    }
    odd_rec(j + 1, budget);
    int w = weight(ne + j);
    if (w <= budget) {
      cur.odd |= std::uint64_t{1} << j;
      odd_rec(j + 1, budget - w);
      cur.odd &= ~(std::uint64_t{1} << j);
    }
  };
  std::function<void(std::size_t, int)> even_rec = [&](std::size_t i, int budget) {
    if (i == ne) {
      odd_rec(0, budget);
      return;
    }
    int w = std::max(1, weight(i));
    for (int e = 0; e * w <= budget; ++e) {
      cur.exps[i] = static_cast<std::uint16_t>(e);
      even_rec(i + 1, budget - e * w);
    }
    cur.exps[i] = 0;
  };
  if (max_degree >= 0) even_rec(0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline nlohmann::json poly_witness(const std::string& at, const super_poly& lhs, const super_poly& rhs) {
  return {{"element", at}, {"lhs", format_poly(lhs)}, {"rhs", format_poly(rhs)}};
}

/// Runs `check` on each element, stopping at the first failure.
inline check_result first_failure(const std::string& name, const std::vector<super_poly>& elems,
                                  const std::function<std::optional<nlohmann::json>(const super_poly&)>& check,
                                  const std::string& info) {
  for (const auto& e : elems)
    if (auto w = check(e)) return check_result::fail(name, *w, info);
  return check_result::pass(name, info);
}

} // namespace detail

/// Symbolic axiom check on every monomial with at most `degree` factors.
/// Because Δ, ε and (for super-commutative A) m(S⊗id)Δ are multiplicative,
/// degree 1 (the generators) already decides the axioms on all of A.
inline std::vector<check_result> check_hopf_axioms_symbolic(const hopf_presentation& h, int degree = 1) {
  const auto& g = h.gens;
  auto g2 = h.gens2;
  auto f2 = detail::copies(g, 2), f3 = detail::copies(g, 3);
  auto g3 = tensor_power(g, 3);
  const std::size_t ns = g->size();

  std::vector<super_poly> elems;
  for (const auto& m : enumerate_monomials(*g, degree)) elems.push_back(super_poly::monomial(g, m));
  const std::string info = std::to_string(elems.size()) + " monomials up to degree " + std::to_string(degree);

  algebra_hom delta = delta_hom(h);
  algebra_hom d12(g2, g3, detail::product_images(g, 2, [&](std::size_t f, std::size_t slot) {
                    return f == 0 ? detail::reembed(h.delta[slot], f2, g3, f3, {0, 1})
                                  : detail::embed_generator(*g, slot, g3, f3, 2, g);
                  }), false);
  algebra_hom d23(g2, g3, detail::product_images(g, 2, [&](std::size_t f, std::size_t slot) {
                    return f == 0 ? detail::embed_generator(*g, slot, g3, f3, 0, g)
                                  : detail::reembed(h.delta[slot], f2, g3, f3, {1, 2});
                  }), false);
  auto counit_or_id = [&](std::size_t keep) {
    return algebra_hom(g2, g, detail::product_images(g, 2, [&](std::size_t f, std::size_t slot) {
                         return f == keep ? super_poly::generator(g, g->slot_symbol(slot))
                                          : super_poly(g, h.counit[slot]);
                       }), false);
  };
  algebra_hom e_left = counit_or_id(1), e_right = counit_or_id(0);

  std::vector<check_result> out;
  out.push_back(detail::first_failure("coassociativity", elems, [&](const super_poly& a) -> std::optional<nlohmann::json> {
    auto da = delta.apply(a);
    auto l = d12.apply(da), r = d23.apply(da);
    if (l == r) return std::nullopt;
    return detail::poly_witness(format_poly(a), l, r);
  }, info));
  out.push_back(detail::first_failure("counit (ε⊗id)Δ = id", elems, [&](const super_poly& a) -> std::optional<nlohmann::json> {
    auto l = e_left.apply(delta.apply(a));
    if (l == a) return std::nullopt;
    return detail::poly_witness(format_poly(a), l, a);
  }, info));
  out.push_back(detail::first_failure("counit (id⊗ε)Δ = id", elems, [&](const super_poly& a) -> std::optional<nlohmann::json> {
    auto r = e_right.apply(delta.apply(a));
    if (r == a) return std::nullopt;
    return detail::poly_witness(format_poly(a), r, a);
  }, info));

  if (h.antipode) {
    auto mixed = [&](std::size_t s_factor) {
      return algebra_hom(g2, g, detail::product_images(g, 2, [&](std::size_t f, std::size_t slot) {
                           return f == s_factor ? (*h.antipode)[slot] : super_poly::generator(g, g->slot_symbol(slot));
                         }), false);
    };
    algebra_hom s_left = mixed(0), s_right = mixed(1);
    auto counit_elem = [&](const super_poly& a) { return super_poly(g, apply_counit(h, a)); };
    out.push_back(detail::first_failure("antipode m(S⊗id)Δ = ηε", elems, [&](const super_poly& a) -> std::optional<nlohmann::json> {
      auto l = s_left.apply(delta.apply(a));
      auto r = counit_elem(a);
      if (l == r) return std::nullopt;
      return detail::poly_witness(format_poly(a), l, r);
    }, info));
    out.push_back(detail::first_failure("antipode m(id⊗S)Δ = ηε", elems, [&](const super_poly& a) -> std::optional<nlohmann::json> {
      auto l = s_right.apply(delta.apply(a));
      auto r = counit_elem(a);
      if (l == r) return std::nullopt;
      return detail::poly_witness(format_poly(a), l, r);
    }, info));
  }
  (void)ns;
  return out;
}

// ---- GL(m|n) points as algebra maps -------------------------------------------

/// The algebra map γ_A : O(GL(m|n)) → Λ(θ) of a point A, as generator images
/// in the shifted coordinates: z̃_ab ↦ A_ab - δ_ab.
inline std::vector<super_poly> gl_point_images(const hopf_presentation& h, const super_matrix& a,
                                               const gen_set_ptr& lam) {
  if (!h.gl_shape) throw algebra_error("point evaluation needs a GL(m|n) presentation");
  auto [m, n] = *h.gl_shape;
  if (a.m() != m || a.n() != n) throw algebra_error("point shape does not match the presentation");
  std::vector<super_poly> imgs(h.gens->size());
  for (std::size_t i = 0; i < m + n; ++i)
    for (std::size_t j = 0; j < m + n; ++j) {
      grassmann_element e = a(i, j);
      if (i == j) e[0] -= scalar(1);
      imgs[h.gens->slot_of(h.gens->lookup(gl_generator_name(m, i, j)))] = e.to_poly(lam);
    }
  return imgs;
}

/// γ_1 ⊗ ... ⊗ γ_r as an algebra map A^{⊗r} → Λ(θ).
inline algebra_hom tensor_point_map(const hopf_presentation& h, const gen_set_ptr& product,
                                    const std::vector<std::vector<super_poly>>& points, const gen_set_ptr& lam) {
  return algebra_hom(product, lam, detail::product_images(h.gens, points.size(), [&](std::size_t f, std::size_t slot) {
                       return points[f][slot];
                     }), false);
}

/// Pointwise Hopf axioms for a GL(m|n) presentation: structure maps are
/// evaluated at sampled points A, B, C of GL(m|n)(Λ(θ_1..θ_k)), and the
/// antipode at A is the point antipode_blocks(A).
inline std::vector<check_result> check_hopf_axioms_pointwise(const hopf_presentation& h, int k, std::size_t points,
                                                             std::uint64_t seed, unsigned workers = worker_count()) {
  if (!h.gl_shape) throw algebra_error("pointwise mode needs a GL(m|n) presentation");
  auto [m, n] = *h.gl_shape;
  auto g = h.gens;
  auto g3 = tensor_power(g, 3);
  auto f2 = detail::copies(g, 2), f3 = detail::copies(g, 3);

  // Symbolic (Δ⊗id)Δ and (id⊗Δ)Δ on generators, shared read-only by all cases.
  std::vector<super_poly> left3, right3;
  {
    algebra_hom d12(h.gens2, g3, detail::product_images(g, 2, [&](std::size_t f, std::size_t slot) {
                      return f == 0 ? detail::reembed(h.delta[slot], f2, g3, f3, {0, 1})
                                    : detail::embed_generator(*g, slot, g3, f3, 2, g);
                    }), false);
    algebra_hom d23(h.gens2, g3, detail::product_images(g, 2, [&](std::size_t f, std::size_t slot) {
                      return f == 0 ? detail::embed_generator(*g, slot, g3, f3, 0, g)
                                    : detail::reembed(h.delta[slot], f2, g3, f3, {1, 2});
                    }), false);
    for (const auto& d : h.delta) {
      left3.push_back(d12.apply(d));
      right3.push_back(d23.apply(d));
    }
  }

  struct case_result {
    std::optional<nlohmann::json> product, coassoc, counit, antipode;
  };
  auto results = parallel_map(points, [&](std::size_t i) {
    auto lam = grassmann_generators(k);
    point_sampler sampler(m, n, k, derive_seed(seed, i));
    super_matrix a = sampler.sample(), b = sampler.sample(), c = sampler.sample();
    auto ia = gl_point_images(h, a, lam), ib = gl_point_images(h, b, lam), ic = gl_point_images(h, c, lam);
    auto iab = gl_point_images(h, matrix_mul(a, b), lam);
    auto is = gl_point_images(h, antipode_blocks(a), lam);
    std::vector<super_poly> counit_imgs;
    for (const auto& e : h.counit) counit_imgs.emplace_back(lam, e);

    auto ab = tensor_point_map(h, h.gens2, {ia, ib}, lam);
    auto abc = tensor_point_map(h, g3, {ia, ib, ic}, lam);
    auto ae = tensor_point_map(h, h.gens2, {ia, counit_imgs}, lam);
    auto ea = tensor_point_map(h, h.gens2, {counit_imgs, ia}, lam);
    auto as = tensor_point_map(h, h.gens2, {ia, is}, lam);
    auto sa = tensor_point_map(h, h.gens2, {is, ia}, lam);
    case_result r;
    auto wit = [&](std::size_t slot, const super_poly& l, const super_poly& rr) {
      return nlohmann::json{{"case", i},
                            {"generator", g->name(g->slot_symbol(slot))},
                            {"lhs", format_poly(l)},
                            {"rhs", format_poly(rr)},
                            {"point", to_json(a)}};
    };
    for (std::size_t slot = 0; slot < g->size(); ++slot) {
      const auto& d = h.delta[slot];
      if (!r.product) {
        auto l = ab.apply(d);
        if (!(l == iab[slot])) r.product = wit(slot, l, iab[slot]);
      }
      if (!r.coassoc) {
        auto l = abc.apply(left3[slot]), rr = abc.apply(right3[slot]);
        if (!(l == rr)) r.coassoc = wit(slot, l, rr);
      }
      if (!r.counit) {
        auto l = ae.apply(d), rr = ea.apply(d);
        if (!(l == ia[slot])) r.counit = wit(slot, l, ia[slot]);
        else if (!(rr == ia[slot])) r.counit = wit(slot, rr, ia[slot]);
      }
      if (!r.antipode) {
        super_poly eps(lam, h.counit[slot]);
        auto l = as.apply(d), rr = sa.apply(d);
        if (!(l == eps)) r.antipode = wit(slot, l, eps);
        else if (!(rr == eps)) r.antipode = wit(slot, rr, eps);
      }
    }
    return r;
  }, workers);

  const std::string info = std::to_string(points) + " points over Λ(θ1..θ" + std::to_string(k) + ")";
  auto collect = [&](const std::string& name, std::optional<nlohmann::json> case_result::*field) {
    for (const auto& r : results)
      if (r.*field) return check_result::fail(name, *(r.*field), info);
    return check_result::pass(name, info);
  };
  return {collect("coproduct dualizes the matrix product (pointwise)", &case_result::product),
          collect("coassociativity (pointwise)", &case_result::coassoc),
          collect("counit (pointwise)", &case_result::counit),
          collect("antipode convolution identity via antipode_blocks (pointwise)", &case_result::antipode)};
}

// ---- even quotient -----------------------------------------------------------

/// Ā = A/(A_1): every odd generator is sent to 0.
inline hopf_presentation even_quotient(const hopf_presentation& h) {
  const auto& g = *h.gens;
  std::vector<int> ev_deg = g.even_degrees();
  auto bar = generator_set::make(g.evens(), {}, ev_deg, {});
  auto bar2 = tensor_power(bar, 2);
  auto proj2 = algebra_hom(h.gens2, bar2, detail::product_images(h.gens, 2, [&](std::size_t f, std::size_t slot) {
                             if (slot >= g.num_even()) return super_poly(bar2);
                             return embed_factor(super_poly::generator(bar, g.slot_symbol(slot)), bar2,
                                                 detail::copies(bar, 2), f);
                           }), false);
  std::vector<super_poly> proj_imgs;
  for (std::size_t slot = 0; slot < g.size(); ++slot)
    proj_imgs.push_back(slot < g.num_even() ? super_poly::generator(bar, g.slot_symbol(slot)) : super_poly(bar));
  algebra_hom proj(h.gens, bar, proj_imgs, false);

  std::vector<super_poly> delta;
  std::vector<scalar> counit;
  std::optional<std::vector<super_poly>> anti;
  if (h.antipode) anti.emplace();
  for (std::size_t slot = 0; slot < g.num_even(); ++slot) {
    delta.push_back(proj2.apply(h.delta[slot]));
    counit.push_back(h.counit[slot]);
    if (anti) anti->push_back(proj.apply((*h.antipode)[slot]));
  }
  auto out = make_presentation(h.name + "/(A_1)", bar, std::move(delta), std::move(counit), std::move(anti));
  return out;
}

/// The quotient map π : A → Ā is a Hopf morphism (checked on generators).
inline check_result check_quotient_morphism(const hopf_presentation& h, const hopf_presentation& bar) {
  const auto& g = *h.gens;
  std::vector<super_poly> pi_imgs;
  for (std::size_t slot = 0; slot < g.size(); ++slot) {
    symbol s = g.slot_symbol(slot);
    pi_imgs.push_back(is_odd(s.par) ? super_poly(bar.gens) : super_poly::generator(bar.gens, g.name(s)));
  }
  algebra_hom pi(h.gens, bar.gens, pi_imgs, false);
  algebra_hom pi2(h.gens2, bar.gens2, detail::product_images(h.gens, 2, [&](std::size_t f, std::size_t slot) {
                    return embed_factor(pi_imgs[slot], bar.gens2, detail::copies(bar.gens, 2), f);
                  }), false);
  algebra_hom dbar = delta_hom(bar);
  for (std::size_t slot = 0; slot < g.size(); ++slot) {
    const std::string& nm = g.name(g.slot_symbol(slot));
    auto l = pi2.apply(h.delta[slot]);
    auto r = dbar.apply(pi_imgs[slot]);
    if (!(l == r)) return check_result::fail("quotient map is a Hopf morphism", detail::poly_witness(nm, l, r), "Δ");
    if (apply_counit(bar, pi_imgs[slot]) != h.counit[slot])
      return check_result::fail("quotient map is a Hopf morphism", {{"element", nm}}, "ε");
    if (h.antipode && bar.antipode) {
      auto sl = pi.apply((*h.antipode)[slot]);
      auto sr = antipode_hom(bar)->apply(pi_imgs[slot]);
      if (!(sl == sr)) return check_result::fail("quotient map is a Hopf morphism", detail::poly_witness(nm, sl, sr), "S");
    }
  }
  return check_result::pass("quotient map is a Hopf morphism");
}

// ---- W^A = A_1 / A_0^+ A_1 ---------------------------------------------------

struct odd_cotangent {
  std::vector<std::string> basis; // odd generator cosets
  int degree = 0;
  std::size_t odd_dimension = 0;  // dim of A_1 up to the degree bound
  std::size_t relation_rank = 0;  // rank of A_0^+ A_1 up to the degree bound
  bool independent = false;
  bool spanning = false;
  bool certified() const { return independent && spanning; }
};

inline int default_w_degree(const generator_set& g) {
  int d = 0;
  for (auto x : g.even_degrees()) d = std::max(d, x);
  for (auto x : g.odd_degrees()) d = std::max(d, x);
  return d + 2;
}

/// Certifies that the odd generators form a basis of A_1/A_0^+A_1 in (weighted)
/// degree ≤ d. Generators with ε ≠ 0 are first recentered to g - ε(g), so A^+
/// is generated by the recentered coordinates; A_0^+A_1 is then spanned by the
/// recentered images of odd monomials with at least two factors.
inline odd_cotangent compute_W(const hopf_presentation& h, std::optional<int> degree = std::nullopt) {
  const auto& g = *h.gens;
  odd_cotangent w;
  w.degree = degree.value_or(default_w_degree(g));
  std::vector<super_monomial> odd_monos;
  for (auto& m : enumerate_monomials(g, w.degree, true))
    if (is_odd(m.par())) odd_monos.push_back(m);
  std::map<super_monomial, std::size_t> column;
  for (std::size_t i = 0; i < odd_monos.size(); ++i) column[odd_monos[i]] = i;
  w.odd_dimension = odd_monos.size();

  std::vector<super_poly> rec;
  for (std::size_t slot = 0; slot < g.size(); ++slot)
    rec.push_back(super_poly::generator(h.gens, g.slot_symbol(slot)) - super_poly(h.gens, h.counit[slot]));
  algebra_hom recenter(h.gens, h.gens, rec, false);
  auto as_row = [&](const super_poly& p) {
    sparse_vector v;
    for (const auto& [m, c] : p.terms()) {
      auto it = column.find(m);
      if (it == column.end()) throw algebra_error("compute_W: element left the truncated odd part");
      v[it->second] = c;
    }
    return v;
  };
  sparse_echelon ech;
  for (const auto& m : odd_monos)
    if (m.total_degree() >= 2) ech.insert(as_row(recenter.apply(m)));
  w.relation_rank = ech.rank();
  w.independent = true;
  for (std::size_t j = 0; j < g.num_odd(); ++j) {
    auto gen = super_poly::generator(h.gens, symbol{parity::odd, j});
    if (g.odd_degrees()[j] > w.degree || !ech.insert(as_row(gen))) w.independent = false;
    w.basis.push_back(g.odds()[j]);
  }
  w.spanning = ech.rank() == odd_monos.size();
  return w;
}

// ---- tensor decomposition A ≅ Ā ⊗ Λ(W) for GL(m|n) -----------------------------

namespace detail {

inline std::vector<grassmann_element> random_odd_substitution(point_sampler& s, int k) {
  std::vector<grassmann_element> imgs;
  for (int i = 0; i < k; ++i) imgs.push_back(s.random_soul(parity::odd));
  return imgs;
}

inline bool all_odd(const gmatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && m(i, j).parity_of() != parity_class::odd) return false;
  return true;
}

} // namespace detail

/// Pointwise verification of the counit-preserving decomposition into
/// (X, Y, p' = X^{-1}P, q' = Y^{-1}Q) on sampled points of GL(m|n)(Λ(θ)).
inline std::vector<check_result> decomposition_check(std::size_t m, std::size_t n, int k, std::size_t points,
                                                     std::uint64_t seed, unsigned workers = worker_count()) {
  std::vector<check_result> out;
  const auto h = glmn_presentation(m, n);
  const auto bar = even_quotient(h);

  {
    auto id = super_matrix::identity(m, n, k);
    auto d = decomposition_coords(id);
    bool ok = d.x == gmatrix::identity(m, k) && d.y == gmatrix::identity(n, k) && d.p_prime.is_zero() &&
              d.q_prime.is_zero();
    out.push_back(check_result::of("identity maps to (identity, p'=0, q'=0)", ok));
  }

  struct case_result {
    std::optional<nlohmann::json> roundtrip, parity, natural, equivariant, even_points, quotient;
    bool naive_invariant = true;
  };
  auto lam = grassmann_generators(k);
  auto results = parallel_map(points, [&](std::size_t i) {
    auto lam_local = grassmann_generators(k);
    point_sampler s(m, n, k, derive_seed(seed, i));
    case_result r;
    super_matrix a = s.sample();
    super_matrix g = s.sample_even();
    auto wit = [&](const char* what) { return nlohmann::json{{"case", i}, {"check", what}, {"point", to_json(a)}}; };

    auto d = decomposition_coords(a);
    if (!(reconstruct_point(d) == a)) r.roundtrip = wit("round trip");
    if (!detail::all_odd(d.p_prime) || !detail::all_odd(d.q_prime)) r.parity = wit("odd coordinates");

    // naturality in R: coordinates commute with a Grassmann algebra morphism
    auto phi = detail::random_odd_substitution(s, k);
    super_matrix fa(m, n, substitute(a.full(), phi));
    if (is_gl_point(fa)) {
      auto dfa = decomposition_coords(fa);
      if (!(dfa.x == substitute(d.x, phi) && dfa.y == substitute(d.y, phi) &&
            dfa.p_prime == substitute(d.p_prime, phi) && dfa.q_prime == substitute(d.q_prime, phi)))
        r.natural = wit("naturality");
    }

    // left multiplication by an even point g = diag(X_g, Y_g)
    auto ga = matrix_mul(g, a);
    auto dga = decomposition_coords(ga);
    if (!(dga.x == g.X() * d.x && dga.y == g.Y() * d.y && dga.p_prime == d.p_prime && dga.q_prime == d.q_prime))
      r.equivariant = wit("left even equivariance");
    if (!(ga.P() == a.P() && ga.Q() == a.Q())) r.naive_invariant = false;

    // even points have coordinates (X, Y, 0, 0)
    auto dg = decomposition_coords(g);
    if (!(dg.x == g.X() && dg.y == g.Y() && dg.p_prime.is_zero() && dg.q_prime.is_zero()))
      r.even_points = wit("even point coordinates");

    // the Ā-coordinates of g·A are the Ā-product of those of g and A
    {
      auto even_part = super_matrix::from_blocks(d.x, gmatrix(m, n, k), gmatrix(n, m, k), d.y);
      auto full_images = [&](const super_matrix& p) {
        auto imgs = gl_point_images(h, p, lam_local);
        imgs.resize(bar.gens->size());
        return imgs;
      };
      auto prod = tensor_point_map(bar, bar.gens2, {full_images(g), full_images(even_part)}, lam_local);
      auto want = full_images(super_matrix::from_blocks(dga.x, gmatrix(m, n, k), gmatrix(n, m, k), dga.y));
      for (std::size_t slot = 0; slot < bar.gens->size(); ++slot)
        if (!(prod.apply(bar.delta[slot]) == want[slot])) {
          r.quotient = wit("even quotient coproduct");
          break;
        }
    }
    return r;
  }, workers);
  (void)lam;

  const std::string info = std::to_string(points) + " points of GL(" + std::to_string(m) + "|" +
                             std::to_string(n) + ") over Λ(θ1..θ" + std::to_string(k) + ")";
  auto collect = [&](const std::string& name, std::optional<nlohmann::json> case_result::*field) {
    for (const auto& r : results)
      if (r.*field) return check_result::fail(name, *(r.*field), info);
    return check_result::pass(name, info);
  };
  out.push_back(collect("round trip (X, Y, p', q') -> point is exact", &case_result::roundtrip));
  out.push_back(collect("p', q' have odd entries", &case_result::parity));
  out.push_back(collect("coordinates are natural in R", &case_result::natural));
  out.push_back(collect("left even-point equivariance: (X,Y) translate, (p', q') invariant", &case_result::equivariant));
  out.push_back(collect("even points map to (X, Y, 0, 0)", &case_result::even_points));
  out.push_back(collect("Ā-coordinates intertwine with the even quotient coproduct", &case_result::quotient));

  auto w = compute_W(h);
  out.push_back(check_result::of("dim W = 2mn", w.certified() && w.basis.size() == 2 * m * n,
                                 {{"basis_size", w.basis.size()}, {"certified", w.certified()}},
                                 "W basis of size " + std::to_string(w.basis.size())));

  if (m > 0 && n > 0) {
    bool naive = std::all_of(results.begin(), results.end(), [](const case_result& r) { return r.naive_invariant; });
    auto c = check_result::of("naive (P, Q) coordinates are invariant under even points", naive,
                              nlohmann::json{{"reason", "P and Q change under left multiplication by diag(X_g, Y_g)"}},
                              "negative control");
    out.push_back(std::move(c.negative_control()));
  }
  return out;
}

} // namespace superhopf
