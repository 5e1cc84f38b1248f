#pragma once

// Verification suites: each takes a config, runs a fixed list of checks and
// returns a report whose content (timings aside) depends only on the config.

#include "superhopf/finite_hopf.hpp"
#include "superhopf/grassmann.hpp"
#include "superhopf/harish_chandra.hpp"
#include "superhopf/hopf.hpp"
#include "superhopf/hyperalgebra.hpp"
#include "superhopf/presentation_io.hpp"
#include "superhopf/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superhopf {

/// Bad suite configuration (unknown suite, out-of-range bound, missing seed).
class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct suite_config {
  std::string suite; // "verify gl", "verify exterior", ..., "hy", "hcpair", "envelope", "decompose"
  std::size_t m = 1, n = 1;
  std::size_t r = 1;
  int thetas = 4;
  std::size_t dim = 2;
  int order = 5;
  int degree = 2;
  std::size_t points = 100;
  std::optional<std::uint64_t> seed;
  std::string group = "ga11"; // hy: ga11 | gl | exterior
  std::string file;           // presentation file for "verify presentation" and "hy"
  bool no_half = false;
};

inline nlohmann::json to_json(const suite_config& c) {
  nlohmann::json j{{"suite", c.suite}};
  auto put_seed = [&] { j["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(); };
  if (c.suite == "verify gl" || c.suite == "decompose") {
    j.update({{"m", c.m}, {"n", c.n}, {"thetas", c.thetas}, {"points", c.points}});
    put_seed();
  } else if (c.suite == "verify exterior" || c.suite == "verify bosonize" || c.suite == "verify integrals") {
    j["dim"] = c.dim;
  } else if (c.suite == "verify presentation") {
    j["file"] = c.file;
  } else if (c.suite == "hy") {
    j["order"] = c.order;
    if (!c.file.empty()) j["file"] = c.file;
    else if (c.group == "gl") j.update({{"group", c.group}, {"m", c.m}, {"n", c.n}});
    else if (c.group == "exterior") j.update({{"group", c.group}, {"dim", c.dim}});
    else j["group"] = c.group;
  } else if (c.suite == "hcpair") {
    j.update({{"r", c.r}, {"half", !c.no_half}, {"points", c.points}});
    put_seed();
  } else if (c.suite == "envelope") {
    j.update({{"r", c.r}, {"degree", c.degree}});
  }
  return j;
}

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw config_error(msg);
}

inline std::uint64_t require_seed(const suite_config& c) {
  require(c.seed.has_value(), c.suite + ": --seed is required for a randomized suite");
  return *c.seed;
}

inline void require_gl_shape(const suite_config& c) {
  require(c.m + c.n >= 1, "m + n must be positive");
  require(c.m <= 4 && c.n <= 4, "m and n must be at most 4");
  require(c.thetas >= 1 && c.thetas <= 12, "--thetas must be in 1..12");
  require(c.points >= 1, "--points must be positive");
}

/// Abstract (non-GL) presentations carry no point model, so only the symbolic
/// axioms apply.
inline hopf_presentation load_for_suite(const suite_config& c) {
  require(!c.file.empty(), c.suite + ": --file is required");
  return load_presentation(c.file);
}

} // namespace detail

/// antipode_blocks(A) = matrix_inv(A) on `points` seeded points of GL(m|n)(Λ(θ_1..θ_k)).
inline check_result antipode_oracle_check(std::size_t m, std::size_t n, int k, std::size_t points, std::uint64_t seed,
                                          unsigned workers = worker_count()) {
  auto bad = parallel_map(points, [&](std::size_t i) -> std::optional<nlohmann::json> {
    point_sampler s(m, n, k, derive_seed(seed, i));
    super_matrix a = s.sample();
    if (antipode_blocks(a) == matrix_inv(a)) return std::nullopt;
    return nlohmann::json{{"case", i}, {"point", to_json(a)}};
  }, workers);
  const std::string info = std::to_string(points) + " points over Λ(θ1..θ" + std::to_string(k) + ")";
  for (auto& w : bad)
    if (w) return check_result::fail("antipode block formulas equal the matrix inverse", *w, info);
  return check_result::pass("antipode block formulas equal the matrix inverse", info);
}

inline report run_suite(const suite_config& c, unsigned workers = worker_count()) {
  report rep(c.suite, to_json(c));
  stopwatch total;
  auto timed = [&](const std::string& phase, auto&& fn) {
    stopwatch sw;
    fn();
    rep.set_timing(phase, sw.seconds());
  };

  if (c.suite == "verify gl") {
    detail::require_gl_shape(c);
    auto seed = detail::require_seed(c);
    auto h = glmn_presentation(c.m, c.n);
    timed("symbolic", [&] { rep.add(check_hopf_axioms_symbolic(h)); });
    timed("antipode_oracle", [&] { rep.add(antipode_oracle_check(c.m, c.n, c.thetas, c.points, seed, workers)); });
    timed("pointwise", [&] { rep.add(check_hopf_axioms_pointwise(h, c.thetas, c.points, seed, workers)); });
    rep.set_data("generators", format_generators(*h.gens));
  } else if (c.suite == "verify exterior") {
    detail::require(c.dim <= 8, "--dim must be at most 8");
    auto h = exterior_hopf(c.dim);
    timed("symbolic", [&] { rep.add(check_hopf_axioms_symbolic(h, static_cast<int>(std::max<std::size_t>(c.dim, 1)))); });
    timed("duality", [&] { rep.add(dual_iso_check(c.dim)); });
    rep.set_data("dimension", std::size_t{1} << c.dim);
  } else if (c.suite == "verify bosonize") {
    detail::require(c.dim <= 5, "--dim must be at most 5");
    auto a = finite_from_presentation(exterior_hopf(c.dim));
    auto b = bosonize(a);
    timed("axioms", [&] { rep.add(check_finite_hopf(b)); });
    if (c.dim > 0) timed("smash", [&] { rep.add(check_smash_primitives(a, b)); });
    rep.set_data("dimension", b.dim());
  } else if (c.suite == "verify integrals") {
    detail::require(c.dim <= 7, "--dim must be at most 7");
    auto a = finite_from_presentation(exterior_hopf(c.dim));
    timed("integrals", [&] { rep.add(check_integrals(a, c.dim % 2 ? parity::odd : parity::even)); });
    auto s = compute_integrals(a);
    nlohmann::json ints = nlohmann::json::array();
    for (const auto& f : s.left) {
      nlohmann::json v = nlohmann::json::object();
      for (std::size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_zero()) v[a.labels[i]] = f[i].str();
      ints.push_back(v);
    }
    rep.set_data("left_integrals", ints);
  } else if (c.suite == "verify presentation") {
    auto h = detail::load_for_suite(c);
    timed("symbolic", [&] { rep.add(check_hopf_axioms_symbolic(h)); });
    rep.set_data("antipode", h.antipode ? "symbolic" : "pointwise-only (not checked)");
    rep.set_data("presentation", print_presentation(h));
  } else if (c.suite == "hy") {
    detail::require(c.order >= 1 && c.order <= 7, "--order must be in 1..7");
    hopf_presentation h;
    enum { abelian, gl, none } oracle = none;
    if (!c.file.empty()) {
      h = load_presentation(c.file);
    } else if (c.group == "ga11") {
      h = ga11_presentation();
      oracle = abelian;
    } else if (c.group == "gl") {
      detail::require(c.m + c.n >= 1 && c.m <= 3 && c.n <= 3, "gl: need 1 <= m + n and m, n <= 3");
      h = glmn_presentation(c.m, c.n);
      oracle = gl;
    } else if (c.group == "exterior") {
      detail::require(c.dim <= 6, "--dim must be at most 6");
      h = exterior_hopf(c.dim);
      oracle = abelian;
    } else {
      throw config_error("unknown group '" + c.group + "' (expected ga11, gl or exterior)");
    }
    for (const auto& e : h.counit)
      detail::require(e.is_zero(), "hy: generators must vanish at the identity (zero counit)");

    std::vector<truncated_dual> duals;
    timed("tables", [&] {
      for (int k = 1; k <= c.order; ++k) duals.push_back(make_truncated_dual(h, k, workers));
    });
    timed("algebra", [&] {
      const auto& top = duals.back();
      rep.add(check_truncated_dual(top));
      rep.add(check_unique_grouplike(top));
      for (std::size_t k = 0; k + 1 < duals.size(); ++k)
        for (auto& r : check_order_embedding(duals[k], duals[k + 1])) {
          r.name = "order " + std::to_string(k + 1) + " -> " + std::to_string(k + 2) + ": " + r.name;
          rep.add(std::move(r));
        }
    });
    if (c.order >= 3) {
      timed("lie", [&] {
        auto p = primitives(duals[2]);
        rep.add(check_super_lie(p.lie, workers));
        if (oracle == abelian) rep.add(check_abelian(p.lie));
        if (oracle == gl) rep.add(check_gl_lie_oracle(h, p.lie));
        rep.add(check_lie_even(h, 3, workers));
        bool counts = true;
        nlohmann::json dims = nlohmann::json::array();
        for (const auto& t : duals) {
          std::size_t want = super_pbw_count(p.lie.even_dim(), p.lie.odd_dim(), t.order);
          counts = counts && t.dim() == want;
          dims.push_back({{"order", t.order}, {"dimension", t.dim()}, {"pbw", want}});
        }
        rep.add(check_result::of("truncated dual dimensions equal super-PBW counts", counts, dims,
                                 "orders 1.." + std::to_string(c.order)));
        rep.set_data("lie", to_json(p.lie));
      });
    }
    rep.set_data("dimensions", [&] {
      nlohmann::json d = nlohmann::json::array();
      for (const auto& t : duals) d.push_back(t.dim());
      return d;
    }());
  } else if (c.suite == "hcpair") {
    detail::require(c.r >= 1 && c.r <= 4, "--r must be in 1..4");
    auto p = spo_pair(c.r, c.no_half ? rational(1) : rational(1, 2));
    timed("pair", [&] { rep.add(check_hc_pair(p)); });
    if (c.seed) timed("group", [&] { rep.add(check_group_equivariance(p, c.points, *c.seed)); });
    timed("jacobi", [&] { rep.add(check_super_lie(build_super_lie(p), workers)); });
    rep.set_data("bracket_scale", p.scale.str());
    rep.set_data("dimension", {p.g0.dim(), p.dim_v});
    if (!c.seed) rep.set_data("group_check", "skipped: no --seed");
  } else if (c.suite == "envelope") {
    detail::require(c.r >= 1 && c.r <= 3, "--r must be in 1..3");
    detail::require(c.degree >= 0 && c.degree <= 6, "--degree must be in 0..6");
    auto g = build_super_lie(spo_pair(c.r));
    timed("lie", [&] {
      rep.add(check_super_lie(g, workers));
      rep.add(check_confluence(g));
    });
    timed("envelope", [&] {
      auto env = make_truncated_envelope(g, c.degree);
      rep.add(check_envelope(env, g));
      rep.set_data("dims_by_degree", env.dims_by_degree);
      rep.set_data("dimension", env.dim());
    });
  } else if (c.suite == "decompose") {
    detail::require_gl_shape(c);
    auto seed = detail::require_seed(c);
    timed("decomposition", [&] { rep.add(decomposition_check(c.m, c.n, c.thetas, c.points, seed, workers)); });
  } else {
    throw config_error("unknown suite '" + c.suite + "'");
  }
  rep.set_timing("total", total.seconds());
  return rep;
}

} // namespace superhopf
