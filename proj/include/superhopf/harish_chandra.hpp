#pragma once

// Harish-Chandra pairs (g₀, V, [ , ]) at the Lie level, the symplectic pair
// behind Spo(1|2r), the super Lie algebra g₀ ⊕ V they assemble into, and its
// enveloping algebra truncated by degree via PBW rewriting.

#include "superhopf/lie.hpp"
#include "superhopf/linalg.hpp"
#include "superhopf/report.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace superhopf {

struct symplectic_data {
  std::size_t r = 0;
  qmatrix J;                   // (0 I; -I 0)
  std::vector<qmatrix> basis;  // all X with XJ symmetric
  super_lie_algebra g0;        // structure constants of the commutator
};

inline qmatrix standard_symplectic_form(std::size_t r) {
  qmatrix J(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    J(i, r + i) = rational(1);
    J(r + i, i) = rational(-1);
  }
  return J;
}

inline bool is_symmetric(const qmatrix& m) { return m == m.transpose(); }

inline symplectic_data sp_basis(std::size_t r) {
  if (r == 0) throw algebra_error("sp_basis: r must be positive");
  const std::size_t N = 2 * r;
  symplectic_data s;
  s.r = r;
  s.J = standard_symplectic_form(r);
  // unknowns X(a, b) at a*N + b; (XJ)(i,j) = Σ_c X(i,c) J(c,j)
  qmatrix sys(N * (N - 1) / 2, N * N);
  std::size_t row = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j, ++row)
      for (std::size_t c = 0; c < N; ++c) {
        sys(row, i * N + c) += s.J(c, j);
        sys(row, j * N + c) -= s.J(c, i);
      }
  std::vector<std::string> labels;
  for (const auto& v : nullspace(sys)) {
    qmatrix X(N, N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) X(a, b) = v[a * N + b];
    s.basis.push_back(std::move(X));
    labels.push_back("X" + std::to_string(s.basis.size()));
  }
  s.g0 = lie_from_matrices("sp(" + std::to_string(N) + ")", std::move(labels),
                           std::vector<parity>(s.basis.size(), parity::even), s.basis);
  return s;
}

/// [X,Y]J symmetric for all basis pairs: sp is a Lie subalgebra.
inline check_result check_sp_closure(const symplectic_data& s) {
  for (std::size_t a = 0; a < s.basis.size(); ++a)
    for (std::size_t b = 0; b < s.basis.size(); ++b) {
      qmatrix c = s.basis[a] * s.basis[b] - s.basis[b] * s.basis[a];
      if (!is_symmetric(c * s.J)) return check_result::fail("[X,Y]J is symmetric", {s.g0.labels[a], s.g0.labels[b]});
    }
  return check_result::pass("[X,Y]J is symmetric");
}

/// A Lie-level Harish-Chandra pair: g₀ by structure constants, V with the
/// right action v ◁ X_k = v · action[k] on row vectors, and a symmetric
/// bracket V ⊗ V → g₀ given on basis vectors in g₀-coordinates.
struct hc_pair {
  std::string name;
  super_lie_algebra g0;
  std::size_t dim_v = 0;
  std::vector<qmatrix> action;
  std::vector<std::vector<sparse_vector>> bracket; // [e_i, e_j]
  std::optional<symplectic_data> sp;               // set for symplectic pairs
  rational scale;                                  // factor in front of J(ᵗv w + ᵗw v)
};

namespace detail {
inline std::vector<rational> flatten(const qmatrix& m) {
  std::vector<rational> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

inline qmatrix basis_columns(const std::vector<qmatrix>& mats) {
  qmatrix b(mats.empty() ? 0 : mats[0].rows() * mats[0].cols(), mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k) {
    auto f = flatten(mats[k]);
    for (std::size_t i = 0; i < f.size(); ++i) b(i, k) = f[i];
  }
  return b;
}

inline qmatrix row_vector(const std::vector<rational>& v) {
  qmatrix m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}
} // namespace detail

/// The matrix in g₀ with the given coordinates (symplectic pairs only).
inline qmatrix sp_matrix(const symplectic_data& s, const sparse_vector& coords) {
  qmatrix m(2 * s.r, 2 * s.r);
  for (const auto& [k, x] : coords) m = m + x * s.basis[k];
  return m;
}

/// spo(1|2r): V = row vectors of length 2r, v ◁ X = vX, and
/// [v, w] = scale · J(ᵗv w + ᵗw v); the Lie-theoretic pair uses scale = ½.
inline hc_pair spo_pair(std::size_t r, rational scale = rational(1, 2)) {
  hc_pair p;
  p.sp = sp_basis(r);
  const auto& s = *p.sp;
  p.name = "spo(1|" + std::to_string(2 * r) + ")";
  p.g0 = s.g0;
  p.dim_v = 2 * r;
  p.action = s.basis;
  p.scale = scale;
  qmatrix cols = detail::basis_columns(s.basis);
  p.bracket.assign(p.dim_v, std::vector<sparse_vector>(p.dim_v));
  for (std::size_t i = 0; i < p.dim_v; ++i)
    for (std::size_t j = 0; j < p.dim_v; ++j) {
      qmatrix sym(p.dim_v, p.dim_v);
      sym(i, j) += rational(1);
      sym(j, i) += rational(1);
      qmatrix val = scale * (s.J * sym);
      auto coords = solve_in_span(cols, detail::flatten(val));
      if (!coords) throw algebra_error("spo_pair: bracket leaves sp");
      for (std::size_t k = 0; k < coords->size(); ++k)
        if (!(*coords)[k].is_zero()) p.bracket[i][j][k] = (*coords)[k];
    }
  return p;
}

/// The semi-direct sum g₀ ⋉ V: the symplectic action with zero V-bracket.
inline hc_pair zero_bracket_pair(std::size_t r) {
  hc_pair p = spo_pair(r, rational(0));
  p.name = "sp(" + std::to_string(2 * r) + ") x| V";
  return p;
}

/// Abelian g₀ of dimension e acting trivially on V of dimension o, zero bracket.
inline hc_pair abelian_pair(std::size_t e, std::size_t o) {
  hc_pair p;
  p.name = "abelian(" + std::to_string(e) + "|" + std::to_string(o) + ")";
  for (std::size_t k = 0; k < e; ++k) {
    p.g0.labels.push_back("X" + std::to_string(k + 1));
    p.g0.par.push_back(parity::even);
  }
  p.g0.name = "k^" + std::to_string(e);
  p.g0.bracket.assign(e, std::vector<sparse_vector>(e));
  p.dim_v = o;
  p.action.assign(e, qmatrix(o, o));
  p.bracket.assign(o, std::vector<sparse_vector>(o));
  return p;
}

inline std::string v_label(std::size_t i) { return "v" + std::to_string(i + 1); }

/// v ◁ X_k = v · action[k].
inline std::vector<rational> act(const hc_pair& p, const std::vector<rational>& v, std::size_t k) {
  std::vector<rational> out(p.dim_v);
  for (std::size_t i = 0; i < p.dim_v; ++i)
    if (!v[i].is_zero())
      for (std::size_t j = 0; j < p.dim_v; ++j) out[j] += v[i] * p.action[k](i, j);
  return out;
}

inline sparse_vector pair_bracket(const hc_pair& p, const std::vector<rational>& u, const std::vector<rational>& v) {
  sparse_vector r;
  for (std::size_t i = 0; i < p.dim_v; ++i)
    for (std::size_t j = 0; j < p.dim_v; ++j)
      if (!u[i].is_zero() && !v[j].is_zero()) detail::add_scaled(r, u[i] * v[j], p.bracket[i][j]);
  return r;
}

/// v ◁ Y for Y ∈ g₀ given in coordinates.
inline std::vector<rational> act(const hc_pair& p, const std::vector<rational>& v, const sparse_vector& y) {
  std::vector<rational> out(p.dim_v);
  for (const auto& [k, x] : y) {
    auto part = act(p, v, k);
    for (std::size_t j = 0; j < p.dim_v; ++j) out[j] += x * part[j];
  }
  return out;
}

inline std::vector<rational> unit_vector(std::size_t n, std::size_t i) {
  std::vector<rational> v(n);
  v[i] = rational(1);
  return v;
}

/// Axiom (i): [u, v] = [v, u].
inline check_result check_pair_symmetry(const hc_pair& p) {
  for (std::size_t i = 0; i < p.dim_v; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (p.bracket[i][j] != p.bracket[j][i])
        return check_result::fail("(i) [u,v] = [v,u]", {v_label(i), v_label(j)});
  return check_result::pass("(i) [u,v] = [v,u]");
}

/// Axiom (ii): v ◁ [v, v] = 0 for all v. The cubic map vanishes identically
/// iff its polarization e_a◁[e_b,e_c] + e_b◁[e_c,e_a] + e_c◁[e_a,e_b] does for all a ≤ b ≤ c.
inline check_result check_pair_cubic(const hc_pair& p) {
  const char* name = "(ii) v ◁ [v,v] = 0";
  const std::size_t n = p.dim_v;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        std::vector<rational> sum(n);
        auto add = [&](std::size_t x, std::size_t y, std::size_t z) {
          auto t = act(p, unit_vector(n, x), p.bracket[y][z]);
          for (std::size_t j = 0; j < n; ++j) sum[j] += t[j];
        };
        add(a, b, c);
        add(b, c, a);
        add(c, a, b);
        if (std::any_of(sum.begin(), sum.end(), [](const rational& x) { return !x.is_zero(); }))
          return check_result::fail(name, {v_label(a), v_label(b), v_label(c)}, "polarized cubic form is nonzero");
      }
  return check_result::pass(name, "checked by polarization");
}

/// [u ◁ X, v] + [u, v ◁ X] = [[u, v], X] for basis u, v, X.
inline check_result check_pair_equivariance(const hc_pair& p) {
  const char* name = "bracket is g0-equivariant";
  const std::size_t n = p.dim_v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < p.g0.dim(); ++k) {
        auto u = unit_vector(n, i), v = unit_vector(n, j);
        sparse_vector lhs = pair_bracket(p, act(p, u, k), v);
        detail::add_scaled(lhs, rational(1), pair_bracket(p, u, act(p, v, k)));
        sparse_vector rhs = lie_bracket(p.g0, p.bracket[i][j], {{k, rational(1)}});
        if (lhs != rhs) return check_result::fail(name, {v_label(i), v_label(j), p.g0.labels[k]});
      }
  return check_result::pass(name);
}

/// The right action is a representation: v ◁ [X, Y] = (v ◁ X) ◁ Y - (v ◁ Y) ◁ X.
inline check_result check_pair_action(const hc_pair& p) {
  const char* name = "V is a right g0-module";
  for (std::size_t a = 0; a < p.g0.dim(); ++a)
    for (std::size_t b = 0; b < p.g0.dim(); ++b)
      for (std::size_t i = 0; i < p.dim_v; ++i) {
        auto v = unit_vector(p.dim_v, i);
        auto lhs = act(p, v, p.g0.bracket[a][b]);
        auto x = act(p, act(p, v, a), b), y = act(p, act(p, v, b), a);
        for (std::size_t j = 0; j < p.dim_v; ++j) x[j] -= y[j];
        if (lhs != x) return check_result::fail(name, {p.g0.labels[a], p.g0.labels[b], v_label(i)});
      }
  return check_result::pass(name);
}

/// Group level, symplectic pairs only: sampled g = (I B; 0 I) or (I 0; C I)
/// with B, C symmetric satisfy gJᵗg = J, and [ug, vg] = g⁻¹[u, v]g on basis vectors.
inline std::vector<check_result> check_group_equivariance(const hc_pair& p, std::size_t samples, std::uint64_t seed) {
  if (!p.sp) throw algebra_error("check_group_equivariance: symplectic pairs only");
  const auto& s = *p.sp;
  const std::size_t r = s.r, N = 2 * r;
  std::vector<check_result> out;
  bool member = true, equivariant = true;
  nlohmann::json witness;
  for (std::size_t t = 0; t < samples && member && equivariant; ++t) {
    std::mt19937_64 rng(derive_seed(seed, t));
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    qmatrix g(N, N);
    for (std::size_t i = 0; i < N; ++i) g(i, i) = rational(1);
    bool upper = t % 2 == 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        rational x(num(rng), den(rng));
        if (upper) g(i, r + j) = g(j, r + i) = x;
        else g(r + i, j) = g(r + j, i) = x;
      }
    if (g * s.J * g.transpose() != s.J) {
      member = false;
      witness = {{"sample", t}};
      break;
    }
    qmatrix ginv = *inverse(g);
    for (std::size_t i = 0; i < N && equivariant; ++i)
      for (std::size_t j = 0; j < N && equivariant; ++j) {
        auto ui = detail::row_vector(unit_vector(N, i)) * g, vj = detail::row_vector(unit_vector(N, j)) * g;
        std::vector<rational> u(N), v(N);
        for (std::size_t c = 0; c < N; ++c) {
          u[c] = ui(0, c);
          v[c] = vj(0, c);
        }
        qmatrix lhs = sp_matrix(s, pair_bracket(p, u, v));
        qmatrix rhs = ginv * sp_matrix(s, p.bracket[i][j]) * g;
        if (lhs != rhs) {
          equivariant = false;
          witness = {{"sample", t}, {"u", v_label(i)}, {"v", v_label(j)}};
        }
      }
  }
  const std::string info = std::to_string(samples) + " unipotent group elements";
  out.push_back(check_result::of("sampled g satisfy gJg^T = J", member, witness, info));
  out.push_back(check_result::of("[ug, vg] = g^-1 [u,v] g", equivariant, witness, info));
  return out;
}

inline std::vector<check_result> check_hc_pair(const hc_pair& p) {
  return {check_pair_symmetry(p), check_pair_cubic(p), check_pair_equivariance(p), check_pair_action(p)};
}

/// g = g₀ ⊕ V with [X,Y] from g₀, [v,X] = v ◁ X = -[X,v], and [u,v] from the pair.
inline super_lie_algebra build_super_lie(const hc_pair& p) {
  super_lie_algebra g;
  g.name = p.name;
  const std::size_t e = p.g0.dim(), n = e + p.dim_v;
  g.labels = p.g0.labels;
  g.par.assign(e, parity::even);
  for (std::size_t i = 0; i < p.dim_v; ++i) {
    g.labels.push_back(v_label(i));
    g.par.push_back(parity::odd);
  }
  g.bracket.assign(n, std::vector<sparse_vector>(n));
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = 0; b < e; ++b) g.bracket[a][b] = p.g0.bracket[a][b];
  for (std::size_t i = 0; i < p.dim_v; ++i)
    for (std::size_t k = 0; k < e; ++k)
      for (std::size_t j = 0; j < p.dim_v; ++j) {
        const rational& x = p.action[k](i, j);
        if (x.is_zero()) continue;
        g.bracket[e + i][k][e + j] = x;
        g.bracket[k][e + i][e + j] = -x;
      }
  for (std::size_t i = 0; i < p.dim_v; ++i)
    for (std::size_t j = 0; j < p.dim_v; ++j) g.bracket[e + i][e + j] = p.bracket[i][j];
  return g;
}

inline nlohmann::json to_json(const hc_pair& p) {
  nlohmann::json br = nlohmann::json::array();
  for (std::size_t i = 0; i < p.dim_v; ++i)
    for (std::size_t j = i; j < p.dim_v; ++j) {
      nlohmann::json terms = nlohmann::json::object();
      for (const auto& [k, x] : p.bracket[i][j]) terms[p.g0.labels[k]] = x.str();
      br.push_back({{"u", v_label(i)}, {"v", v_label(j)}, {"bracket", terms}});
    }
  nlohmann::json j{{"name", p.name}, {"g0", to_json(p.g0)}, {"dim_v", p.dim_v}, {"v_bracket", br},
                   {"scale", p.scale.str()}};
  if (p.sp) {
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& X : p.sp->basis) {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t a = 0; a < X.rows(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t b = 0; b < X.cols(); ++b) row.push_back(X(a, b).str());
        rows.push_back(row);
      }
      mats.push_back(rows);
    }
    j["g0_matrices"] = mats;
  }
  return j;
}

// ---- truncated enveloping algebra ------------------------------------------------

using word = std::vector<std::size_t>;
using word_vector = std::map<word, rational>;

class rewriting_error : public algebra_error {
public:
  rewriting_error(const std::string& msg, word w) : algebra_error(msg), witness(std::move(w)) {}
  word witness;
};

/// Normal forms in U(g) for the ordered basis of g: ab → (-1)^{|a||b|} ba + [a,b]
/// when a > b, and aa → ½[a,a] for odd a. Memoized; leftmost rewriting.
class pbw_rewriter {
public:
  explicit pbw_rewriter(const super_lie_algebra& g) : g_(g) {}

  bool is_normal(const word& w) const { return first_redex(w) == w.size(); }

  /// Rewrites the redex at position i once (no further reduction).
  word_vector rewrite_at(const word& w, std::size_t i) const {
    word_vector out;
    const std::size_t a = w[i], b = w[i + 1];
    auto splice = [&](std::size_t k) {
      word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      v.push_back(k);
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
      return v;
    };
    if (a == b) {
      for (const auto& [k, x] : g_.bracket[a][a]) add(out, splice(k), x * rational(1, 2));
      return out;
    }
    word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    add(out, swapped, rational(koszul_sign(g_.par[a], g_.par[b])));
    for (const auto& [k, x] : g_.bracket[a][b]) add(out, splice(k), x);
    return out;
  }

  const word_vector& reduce(const word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    std::size_t i = first_redex(w);
    word_vector out;
    if (i == w.size()) out[w] = rational(1);
    else
      for (const auto& [v, x] : rewrite_at(w, i)) add_all(out, reduce(v), x);
    return memo_.emplace(w, std::move(out)).first->second;
  }

  word_vector reduce(const word_vector& v) {
    word_vector out;
    for (const auto& [w, x] : v) add_all(out, reduce(w), x);
    return out;
  }

  /// Redexes at positions i and i+1 overlap in every word abc with a ≥ b ≥ c
  /// (equalities only for odd letters). Resolving both the ways gives the same
  /// normal form iff the rewriting system is confluent (diamond lemma).
  std::optional<word> find_unresolvable_overlap() {
    const std::size_t n = g_.dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          word w{a, b, c};
          if (!redex(a, b) || !redex(b, c)) continue;
          if (reduce(rewrite_at(w, 0)) != reduce(rewrite_at(w, 1))) return w;
        }
    return std::nullopt;
  }

  const super_lie_algebra& algebra() const { return g_; }

private:
  bool redex(std::size_t a, std::size_t b) const { return a > b || (a == b && is_odd(g_.par[a])); }
  std::size_t first_redex(const word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (redex(w[i], w[i + 1])) return i;
    return w.size();
  }
  static void add(word_vector& v, const word& w, const rational& x) {
    if (x.is_zero()) return;
    auto& slot = v[w];
    slot += x;
    if (slot.is_zero()) v.erase(w);
  }
  static void add_all(word_vector& v, const word_vector& u, const rational& x) {
    for (const auto& [w, y] : u) add(v, w, x * y);
  }

  const super_lie_algebra& g_;
  std::map<word, word_vector> memo_;
};

inline std::string word_label(const super_lie_algebra& g, const word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + g.labels[w[i]];
  return s;
}

inline check_result check_confluence(const super_lie_algebra& g) {
  pbw_rewriter rw(g);
  auto bad = rw.find_unresolvable_overlap();
  if (bad) return check_result::fail("PBW rewriting is confluent", word_label(g, *bad));
  return check_result::pass("PBW rewriting is confluent");
}

struct truncated_envelope {
  std::string name;
  int degree = 0;
  std::vector<word> basis;                // normal words of length ≤ degree
  std::vector<std::size_t> dims_by_degree;
  std::map<std::pair<std::size_t, std::size_t>, sparse_vector> product; // pairs with total length ≤ degree
  std::size_t spanned_rank = 0;           // rank of the normal forms of all words of length ≤ degree
  std::vector<std::string> labels;

  std::size_t dim() const { return basis.size(); }
};

/// Monomials of degree ≤ d, polynomial in e even and square-free in o odd variables.
inline std::vector<std::size_t> super_pbw_counts_by_degree(std::size_t e, std::size_t o, int d) {
  auto binom = [](std::size_t a, std::size_t b) -> std::size_t {
    if (b > a) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::vector<std::size_t> out;
  for (int j = 0; j <= d; ++j) {
    std::size_t total = 0;
    for (std::size_t k = 0; k <= std::min<std::size_t>(o, static_cast<std::size_t>(j)); ++k) {
      std::size_t rest = static_cast<std::size_t>(j) - k;
      std::size_t multiset = e == 0 ? (rest == 0 ? 1 : 0) : binom(e + rest - 1, rest);
      total += binom(o, k) * multiset;
    }
    out.push_back(total);
  }
  return out;
}

/// U(g) filtered to degree ≤ d: g₀-letters before V-letters, each by index.
/// Throws rewriting_error with the overlap word when the rewriting is not confluent.
inline truncated_envelope make_truncated_envelope(const super_lie_algebra& g, int d) {
  if (d < 0) throw algebra_error("truncated_envelope: degree must be non-negative");
  pbw_rewriter rw(g);
  if (auto bad = rw.find_unresolvable_overlap())
    throw rewriting_error("PBW rewriting is not confluent at " + word_label(g, *bad), *bad);
  truncated_envelope env;
  env.name = "U(" + g.name + ")";
  env.degree = d;
  const std::size_t n = g.dim();
  std::vector<word> layer{{}};
  std::vector<word> every{{}};
  for (int len = 1; len <= d; ++len) {
    std::vector<word> next;
    for (const auto& w : layer)
      for (std::size_t a = 0; a < n; ++a) {
        word v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    every.insert(every.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  env.dims_by_degree.assign(static_cast<std::size_t>(d) + 1, 0);
  std::map<word, std::size_t> index;
  for (const auto& w : every)
    if (rw.is_normal(w)) {
      index.emplace(w, env.basis.size());
      env.basis.push_back(w);
      env.labels.push_back(word_label(g, w));
      ++env.dims_by_degree[w.size()];
    }
  sparse_echelon span;
  for (const auto& w : every) {
    sparse_vector v;
    for (const auto& [u, x] : rw.reduce(w)) v[index.at(u)] = x;
    span.insert(std::move(v));
  }
  env.spanned_rank = span.rank();
  for (std::size_t i = 0; i < env.basis.size(); ++i)
    for (std::size_t j = 0; j < env.basis.size(); ++j) {
      if (env.basis[i].size() + env.basis[j].size() > static_cast<std::size_t>(d)) continue;
      word w = env.basis[i];
      w.insert(w.end(), env.basis[j].begin(), env.basis[j].end());
      sparse_vector v;
      for (const auto& [u, x] : rw.reduce(w)) v[index.at(u)] = x;
      env.product[{i, j}] = std::move(v);
    }
  return env;
}

inline std::vector<check_result> check_envelope(const truncated_envelope& env, const super_lie_algebra& g) {
  std::vector<check_result> out;
  auto want = super_pbw_counts_by_degree(g.even_dim(), g.odd_dim(), env.degree);
  std::size_t total = 0;
  for (auto c : want) total += c;
  const std::string info = "dim " + std::to_string(env.dim()) + ", PBW count " + std::to_string(total);
  out.push_back(check_result::of("dimension equals the super-PBW count", env.dims_by_degree == want && env.dim() == total,
                                 {{"by_degree", env.dims_by_degree}, {"pbw", want}}, info));
  out.push_back(check_result::of("normal words span the truncation", env.spanned_rank == env.dim(),
                                 {{"rank", env.spanned_rank}}));
  // associativity wherever all products stay within the truncation
  out.push_back([&] {
    const char* name = "product is associative within the truncation";
    auto mul = [&](const sparse_vector& x, std::size_t j) {
      sparse_vector r;
      for (const auto& [i, a] : x) detail::add_scaled(r, a, env.product.at({i, j}));
      return r;
    };
    auto lmul = [&](std::size_t i, const sparse_vector& y) {
      sparse_vector r;
      for (const auto& [j, a] : y) detail::add_scaled(r, a, env.product.at({i, j}));
      return r;
    };
    for (std::size_t a = 0; a < env.dim(); ++a)
      for (std::size_t b = 0; b < env.dim(); ++b)
        for (std::size_t c = 0; c < env.dim(); ++c) {
          if (env.basis[a].size() + env.basis[b].size() + env.basis[c].size() > static_cast<std::size_t>(env.degree))
            continue;
          if (mul(env.product.at({a, b}), c) != lmul(a, env.product.at({b, c})))
            return check_result::fail(name, {env.labels[a], env.labels[b], env.labels[c]});
        }
    return check_result::pass(name);
  }());
  return out;
}

inline nlohmann::json to_json(const truncated_envelope& env) {
  nlohmann::json prod = nlohmann::json::array();
  for (const auto& [ij, v] : env.product) {
    if (env.basis[ij.first].empty() || env.basis[ij.second].empty()) continue;
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [k, x] : v) terms[env.labels[k]] = x.str();
    prod.push_back({{"a", env.labels[ij.first]}, {"b", env.labels[ij.second]}, {"product", terms}});
  }
  return {{"name", env.name},       {"degree", env.degree}, {"dimension", env.dim()},
          {"dims_by_degree", env.dims_by_degree}, {"basis", env.labels}, {"product", prod}};
}

} // namespace superhopf
