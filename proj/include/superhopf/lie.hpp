#pragma once

// Super Lie algebras by structure constants on a homogeneous basis.

#include "superhopf/linalg.hpp"
#include "superhopf/report.hpp"
#include "superhopf/super_poly.hpp"

#include <string>
#include <vector>

namespace superhopf {

struct super_lie_algebra {
  std::string name;
  std::vector<std::string> labels;
  std::vector<parity> par;
  std::vector<std::vector<sparse_vector>> bracket; // bracket[i][j] = [e_i, e_j]

  std::size_t dim() const { return labels.size(); }
  std::size_t even_dim() const {
    return static_cast<std::size_t>(std::count(par.begin(), par.end(), parity::even));
  }
  std::size_t odd_dim() const { return dim() - even_dim(); }
  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw algebra_error("super Lie algebra has no basis element " + label);
    return static_cast<std::size_t>(it - labels.begin());
  }
};

namespace detail {
inline void add_scaled(sparse_vector& acc, const rational& c, const sparse_vector& v) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) {
    auto& slot = acc[i];
    slot += c * x;
    if (slot.is_zero()) acc.erase(i);
  }
}
} // namespace detail

inline sparse_vector lie_bracket(const super_lie_algebra& g, const sparse_vector& x, const sparse_vector& y) {
  sparse_vector r;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) detail::add_scaled(r, a * b, g.bracket[i][j]);
  return r;
}

inline nlohmann::json basis_witness(const super_lie_algebra& g, std::initializer_list<std::size_t> idx) {
  nlohmann::json j = nlohmann::json::array();
  for (auto i : idx) j.push_back(g.labels[i]);
  return j;
}

/// [x, y] is homogeneous of parity |x| + |y|; in particular g₀ is closed.
inline check_result check_bracket_parity(const super_lie_algebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (const auto& [k, x] : g.bracket[i][j])
        if (g.par[k] != g.par[i] + g.par[j])
          return check_result::fail("bracket preserves parity (g0 closed)", basis_witness(g, {i, j}));
  return check_result::pass("bracket preserves parity (g0 closed)");
}

/// [x, y] = -(-1)^{|x||y|} [y, x]
inline check_result check_super_antisymmetry(const super_lie_algebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      sparse_vector rhs;
      detail::add_scaled(rhs, rational(-koszul_sign(g.par[i], g.par[j])), g.bracket[j][i]);
      if (g.bracket[i][j] != rhs) return check_result::fail("super antisymmetry", basis_witness(g, {i, j}));
    }
  return check_result::pass("super antisymmetry");
}

/// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0 over all basis triples.
inline sparse_vector jacobiator(const super_lie_algebra& g, std::size_t x, std::size_t y, std::size_t z) {
  auto e = [](std::size_t i) { return sparse_vector{{i, rational(1)}}; };
  sparse_vector r;
  detail::add_scaled(r, rational(koszul_sign(g.par[x], g.par[z])), lie_bracket(g, e(x), g.bracket[y][z]));
  detail::add_scaled(r, rational(koszul_sign(g.par[y], g.par[x])), lie_bracket(g, e(y), g.bracket[z][x]));
  detail::add_scaled(r, rational(koszul_sign(g.par[z], g.par[y])), lie_bracket(g, e(z), g.bracket[x][y]));
  return r;
}

inline check_result check_super_jacobi(const super_lie_algebra& g, unsigned workers = worker_count()) {
  const std::size_t n = g.dim();
  // one task per first index; the first failing triple in lexicographic order wins
  auto rows = parallel_map(
      n,
      [&](std::size_t x) -> nlohmann::json {
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            if (!jacobiator(g, x, y, z).empty()) return basis_witness(g, {x, y, z});
        return nullptr;
      },
      workers);
  const std::string info = std::to_string(n * n * n) + " triples";
  for (auto& w : rows)
    if (!w.is_null()) return check_result::fail("super Jacobi identity", w, info);
  return check_result::pass("super Jacobi identity", info);
}

inline std::vector<check_result> check_super_lie(const super_lie_algebra& g, unsigned workers = worker_count()) {
  return {check_bracket_parity(g), check_super_antisymmetry(g), check_super_jacobi(g, workers)};
}

/// Structure constants of a homogeneous family of matrices closed under the
/// super commutator [a, b] = ab - (-1)^{|a||b|} ba.
inline super_lie_algebra lie_from_matrices(std::string name, std::vector<std::string> labels, std::vector<parity> par,
                                           const std::vector<qmatrix>& mats) {
  super_lie_algebra g{std::move(name), std::move(labels), std::move(par), {}};
  const std::size_t n = mats.size();
  if (n == 0) return g;
  const std::size_t rows = mats[0].rows(), cols = mats[0].cols();
  qmatrix basis(rows * cols, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) basis(r * cols + c, k) = mats[k](r, c);
  g.bracket.assign(n, std::vector<sparse_vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      qmatrix comm = mats[i] * mats[j] - rational(koszul_sign(g.par[i], g.par[j])) * (mats[j] * mats[i]);
      std::vector<rational> flat(rows * cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) flat[r * cols + c] = comm(r, c);
      auto coords = solve_in_span(basis, flat);
      if (!coords) throw algebra_error("lie_from_matrices: [" + g.labels[i] + ", " + g.labels[j] + "] leaves the span");
      for (std::size_t k = 0; k < n; ++k)
        if (!(*coords)[k].is_zero()) g.bracket[i][j][k] = (*coords)[k];
    }
  return g;
}

/// gl(m|n) on the elementary matrices E_ab, parity of the (a, b) block.
inline super_lie_algebra gl_lie_algebra(std::size_t m, std::size_t n) {
  const std::size_t N = m + n;
  std::vector<std::string> labels;
  std::vector<parity> par;
  std::vector<qmatrix> mats;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      labels.push_back("E_" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
      par.push_back((a < m) == (b < m) ? parity::even : parity::odd);
      qmatrix e(N, N);
      e(a, b) = rational(1);
      mats.push_back(std::move(e));
    }
  return lie_from_matrices("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", std::move(labels),
                           std::move(par), mats);
}

/// True when e_i ↦ f_{map[i]} identifies parities and structure constants.
inline check_result check_same_structure(std::string name, const super_lie_algebra& a, const super_lie_algebra& b,
                                         const std::vector<std::size_t>& map) {
  if (a.dim() != b.dim() || map.size() != a.dim())
    return check_result::fail(std::move(name), {{"dims", {a.dim(), b.dim()}}});
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.par[i] != b.par[map[i]]) return check_result::fail(std::move(name), basis_witness(a, {i}), "parity differs");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      sparse_vector image;
      for (const auto& [k, x] : a.bracket[i][j]) image[map[k]] = x;
      if (image != b.bracket[map[i]][map[j]])
        return check_result::fail(std::move(name), basis_witness(a, {i, j}), "bracket differs");
    }
  return check_result::pass(std::move(name));
}

inline nlohmann::json to_json(const super_lie_algebra& g) {
  nlohmann::json br = nlohmann::json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (g.bracket[i][j].empty()) continue;
      nlohmann::json terms = nlohmann::json::object();
      for (const auto& [k, x] : g.bracket[i][j]) terms[g.labels[k]] = x.str();
      br.push_back({{"x", g.labels[i]}, {"y", g.labels[j]}, {"bracket", terms}});
    }
  nlohmann::json parities = nlohmann::json::array();
  for (auto p : g.par) parities.push_back(to_string(p));
  return {{"name", g.name},
          {"dimension", {g.even_dim(), g.odd_dim()}},
          {"basis", g.labels},
          {"parity", parities},
          {"brackets", br}};
}

} // namespace superhopf
