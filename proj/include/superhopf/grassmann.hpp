#pragma once

// Finite Grassmann algebras Λ(θ_1..θ_k) over Q, super matrices over them, and
// the points of GL(m|n) as parity-patterned invertible block matrices.

#include "superhopf/linalg.hpp"
#include "superhopf/super_poly.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace superhopf {

class not_invertible : public algebra_error {
public:
  using algebra_error::algebra_error;
};

class not_a_point : public algebra_error {
public:
  using algebra_error::algebra_error;
};

inline gen_set_ptr grassmann_generators(int k) {
  std::vector<std::string> odds;
  for (int i = 1; i <= k; ++i) odds.push_back("th" + std::to_string(i));
  return generator_set::make({}, std::move(odds));
}

/// Element of Λ_Q(θ_1..θ_k), stored densely: coefficient of the monomial whose
/// odd support is the bitmask `i` lives at index i. Semantically identical to
/// a super_poly over grassmann_generators(k); the dense layout keeps the
/// 3^k-pair product loop allocation free.
class grassmann_element {
public:
  grassmann_element() = default;
  explicit grassmann_element(int k) : k_(k), c_(std::size_t{1} << k) { check_k(k); }
  grassmann_element(int k, const scalar& body) : grassmann_element(k) { c_[0] = body; }

  static grassmann_element theta(int k, int i) {
    grassmann_element e(k);
    e.c_.at(std::size_t{1} << i) = scalar(1);
    return e;
  }

  static grassmann_element from_poly(int k, const super_poly& p) {
    grassmann_element e(k);
    for (const auto& [m, c] : p.terms()) {
      if (!m.exps.empty()) throw algebra_error("grassmann_element: polynomial has even generators");
      if (m.odd >> k) throw algebra_error("grassmann_element: generator index beyond k");
      e.c_[m.odd] = c;
    }
    return e;
  }

  super_poly to_poly(const gen_set_ptr& gens) const {
    super_poly p(gens);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      super_monomial m;
      m.odd = i;
      p.add_term(m, c_[i]);
    }
    return p;
  }

  int k() const { return k_; }
  std::size_t dim() const { return c_.size(); }
  const scalar& operator[](std::size_t mask) const { return c_[mask]; }
  scalar& operator[](std::size_t mask) { return c_[mask]; }
  const scalar& body() const { return c_[0]; }

  grassmann_element soul() const {
    grassmann_element s = *this;
    s.c_[0] = scalar();
    return s;
  }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  parity_class parity_of() const {
    bool ev = false, od = false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) (std::popcount(i) & 1 ? od : ev) = true;
    if (ev && od) return parity_class::mixed;
    return od ? parity_class::odd : parity_class::even;
  }

  grassmann_element& operator+=(const grassmann_element& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
  }
  grassmann_element& operator-=(const grassmann_element& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
  }
  grassmann_element& operator*=(const scalar& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  grassmann_element operator-() const {
    grassmann_element r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend grassmann_element operator+(grassmann_element a, const grassmann_element& b) { return a += b; }
  friend grassmann_element operator-(grassmann_element a, const grassmann_element& b) { return a -= b; }
  friend grassmann_element operator*(grassmann_element a, const scalar& s) { return a *= s; }

  friend grassmann_element operator*(const grassmann_element& a, const grassmann_element& b) {
    a.check_same(b);
    grassmann_element r(a.k_);
    std::vector<std::uint32_t> nb;
    nb.reserve(b.c_.size());
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) nb.push_back(static_cast<std::uint32_t>(j));
    if (nb.empty()) return r;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::uint32_t j : nb) {
        if (i & j) continue;
        int s = odd_merge_sign(i, j);
        scalar t = a.c_[i] * b.c_[j];
        if (s < 0) r.c_[i | j] -= t;
        else r.c_[i | j] += t;
      }
    }
    return r;
  }

  friend bool operator==(const grassmann_element& a, const grassmann_element& b) {
    return a.k_ == b.k_ && a.c_ == b.c_;
  }

private:
  static void check_k(int k) {
    if (k < 0 || k > 20) throw algebra_error("grassmann_element: k must lie in [0, 20]");
  }
  void check_same(const grassmann_element& o) const {
    if (k_ != o.k_) throw algebra_error("grassmann_element: operands from different Grassmann algebras");
  }

  int k_ = 0;
  std::vector<scalar> c_{scalar()};
};

/// r^{-1} = body^{-1} Σ_{i=0}^{k} (-soul/body)^i; the series stops because soul^{k+1} = 0.
inline grassmann_element invert_element(const grassmann_element& r) {
  if (r.body().is_zero()) throw not_invertible("element has zero body");
  const scalar binv = r.body().inverse();
  grassmann_element step = r.soul() * (-binv);
  grassmann_element term(r.k(), scalar(1));
  grassmann_element sum(r.k(), scalar(1));
  for (int i = 1; i <= r.k(); ++i) {
    term = term * step;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * binv;
}

/// Image of e under the Grassmann algebra morphism θ_i ↦ images[i] (each odd).
inline grassmann_element substitute(const grassmann_element& e, const std::vector<grassmann_element>& images) {
  if (images.size() != static_cast<std::size_t>(e.k())) throw algebra_error("substitute: need one image per theta");
  const int k_out = images.empty() ? e.k() : images.front().k();
  grassmann_element r(k_out);
  for (std::size_t mask = 0; mask < e.dim(); ++mask) {
    if (e[mask].is_zero()) continue;
    grassmann_element t(k_out, e[mask]);
    for (std::size_t b = mask; b && !t.is_zero(); b &= b - 1) t = t * images[static_cast<std::size_t>(std::countr_zero(b))];
    r += t;
  }
  return r;
}

/// Dense matrix with entries in a Grassmann algebra.
class gmatrix {
public:
  gmatrix() = default;
  gmatrix(std::size_t rows, std::size_t cols, int k)
      : rows_(rows), cols_(cols), k_(k), e_(rows * cols, grassmann_element(k)) {}

  static gmatrix identity(std::size_t n, int k) {
    gmatrix m(n, n, k);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = grassmann_element(k, scalar(1));
    return m;
  }
  static gmatrix lift(const qmatrix& q, int k) {
    gmatrix m(q.rows(), q.cols(), k);
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = grassmann_element(k, q(i, j));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int k() const { return k_; }
  grassmann_element& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const grassmann_element& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  qmatrix body() const {
    qmatrix b(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(i, j).body();
    return b;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  gmatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    gmatrix b(nr, nc, k_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const gmatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend gmatrix operator*(const gmatrix& a, const gmatrix& b) {
    if (a.cols_ != b.rows_ || a.k_ != b.k_) throw algebra_error("gmatrix: shape mismatch in product");
    gmatrix r(a.rows_, b.cols_, a.k_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const auto& x = a(i, l);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(l, j);
      }
    return r;
  }
  friend gmatrix operator+(gmatrix a, const gmatrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }
  friend gmatrix operator-(gmatrix a, const gmatrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
    return a;
  }
  gmatrix operator-() const {
    gmatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  friend bool operator==(const gmatrix&, const gmatrix&) = default;

private:
  void check_shape(const gmatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || k_ != b.k_) throw algebra_error("gmatrix: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  int k_ = 0;
  std::vector<grassmann_element> e_;
};

inline gmatrix substitute(const gmatrix& m, const std::vector<grassmann_element>& images) {
  gmatrix r(m.rows(), m.cols(), images.empty() ? m.k() : images.front().k());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = substitute(m(i, j), images);
  return r;
}

/// Inverse of a square Grassmann matrix with invertible body. Starts from the
/// body inverse and applies the correction M <- M + M(I - A M); each step
/// doubles the soul degree of the residual, so at most ceil(log2(k+1)) steps
/// run before the residual is exactly zero.
inline gmatrix invert_matrix(const gmatrix& a) {
  if (a.rows() != a.cols()) throw algebra_error("invert_matrix: not square");
  auto binv = inverse(a.body());
  if (!binv) throw not_invertible("matrix body is singular");
  const auto id = gmatrix::identity(a.rows(), a.k());
  gmatrix m = gmatrix::lift(*binv, a.k());
  for (int iter = 0; iter <= a.k() + 1; ++iter) {
    gmatrix residual = id - a * m;
    if (residual.is_zero()) return m;
    m = m + m * residual;
  }
  throw algebra_error("invert_matrix: correction series did not terminate");
}

/// Block matrix (X P; Q Y) of shape (m|n) over Λ(θ_1..θ_k).
class super_matrix {
public:
  super_matrix() = default;
  super_matrix(std::size_t m, std::size_t n, int k) : m_(m), n_(n), a_(m + n, m + n, k) {}
  super_matrix(std::size_t m, std::size_t n, gmatrix full) : m_(m), n_(n), a_(std::move(full)) {
    if (a_.rows() != m + n || a_.cols() != m + n) throw algebra_error("super_matrix: size does not match shape");
  }

  static super_matrix identity(std::size_t m, std::size_t n, int k) {
    return super_matrix(m, n, gmatrix::identity(m + n, k));
  }
  static super_matrix from_blocks(const gmatrix& x, const gmatrix& p, const gmatrix& q, const gmatrix& y) {
    std::size_t m = x.rows(), n = y.rows();
    super_matrix s(m, n, x.k());
    s.a_.set_block(0, 0, x);
    s.a_.set_block(0, m, p);
    s.a_.set_block(m, 0, q);
    s.a_.set_block(m, m, y);
    return s;
  }

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  int k() const { return a_.k(); }
  const gmatrix& full() const { return a_; }
  grassmann_element& operator()(std::size_t i, std::size_t j) { return a_(i, j); }
  const grassmann_element& operator()(std::size_t i, std::size_t j) const { return a_(i, j); }

  gmatrix X() const { return a_.block(0, 0, m_, m_); }
  gmatrix P() const { return a_.block(0, m_, m_, n_); }
  gmatrix Q() const { return a_.block(m_, 0, n_, m_); }
  gmatrix Y() const { return a_.block(m_, m_, n_, n_); }

  /// Index parity: rows/columns below m are even, the rest odd.
  parity index_parity(std::size_t i) const { return i < m_ ? parity::even : parity::odd; }

  bool parity_pattern_holds() const {
    for (std::size_t i = 0; i < m_ + n_; ++i)
      for (std::size_t j = 0; j < m_ + n_; ++j) {
        const auto& e = a_(i, j);
        if (e.is_zero()) continue;
        auto want = index_parity(i) + index_parity(j);
        auto pc = e.parity_of();
        if (pc != (is_odd(want) ? parity_class::odd : parity_class::even)) return false;
      }
    return true;
  }

  friend bool operator==(const super_matrix& a, const super_matrix& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.a_ == b.a_;
  }

private:
  std::size_t m_ = 0, n_ = 0;
  gmatrix a_;
};

inline super_matrix matrix_mul(const super_matrix& a, const super_matrix& b) {
  if (a.m() != b.m() || a.n() != b.n() || a.k() != b.k()) throw algebra_error("matrix_mul: shape mismatch");
  return super_matrix(a.m(), a.n(), a.full() * b.full());
}

/// Membership in GL(m|n)(R): parity pattern plus invertible body blocks.
inline bool is_gl_point(const super_matrix& a) {
  if (!a.parity_pattern_holds()) return false;
  return inverse(a.X().body()).has_value() && inverse(a.Y().body()).has_value();
}

inline void require_point(const super_matrix& a) {
  if (!a.parity_pattern_holds()) throw not_a_point("parity pattern violated");
  if (!inverse(a.X().body()) || !inverse(a.Y().body())) throw not_a_point("singular body block");
}

/// Group inverse in GL(m|n)(R), computed on the full matrix.
inline super_matrix matrix_inv(const super_matrix& a) {
  require_point(a);
  return super_matrix(a.m(), a.n(), invert_matrix(a.full()));
}

/// The point γ∘S, assembled from the closed block formulas
///   S(X) = (X - P Y^{-1} Q)^{-1},  S(Y) = (Y - Q X^{-1} P)^{-1},
///   S(P) = -X^{-1} P S(Y),         S(Q) = -Y^{-1} Q S(X).
inline super_matrix antipode_blocks(const super_matrix& a) {
  require_point(a);
  const gmatrix x = a.X(), p = a.P(), q = a.Q(), y = a.Y();
  const gmatrix xinv = invert_matrix(x), yinv = invert_matrix(y);
  const gmatrix sx = invert_matrix(x - p * yinv * q);
  const gmatrix sy = invert_matrix(y - q * xinv * p);
  const gmatrix sp = -(xinv * p * sy);
  const gmatrix sq = -(yinv * q * sx);
  return super_matrix::from_blocks(sx, sp, sq, sy);
}

struct decomposition {
  gmatrix x, y, p_prime, q_prime;
};

/// Coordinates (X, Y, p' = X^{-1} P, q' = Y^{-1} Q). Both odd blocks are
/// divided on the left, so q' is n×m like Q and is invariant under left
/// multiplication by even points.
inline decomposition decomposition_coords(const super_matrix& a) {
  require_point(a);
  gmatrix x = a.X(), y = a.Y();
  gmatrix pp = invert_matrix(x) * a.P();
  gmatrix qq = invert_matrix(y) * a.Q();
  return {std::move(x), std::move(y), std::move(pp), std::move(qq)};
}

/// Inverse of decomposition_coords: P = X p', Q = Y q'.
inline super_matrix reconstruct_point(const decomposition& d) {
  return super_matrix::from_blocks(d.x, d.x * d.p_prime, d.y * d.q_prime, d.y);
}

/// Seeded sampler of GL(m|n)(Λ(θ_1..θ_k)) points. Diagonal body blocks are
/// L·D·U with unit triangular L, U and a nonzero diagonal D, so every sample
/// is a point without rejection.
class point_sampler {
public:
  point_sampler(std::size_t m, std::size_t n, int k, std::uint64_t seed, int soul_range = 2)
      : m_(m), n_(n), k_(k), rng_(seed), soul_range_(soul_range) {}

  super_matrix sample() {
    super_matrix a(m_, n_, k_);
    gmatrix full = a.full();
    set_even_block(full, 0, m_);
    set_even_block(full, m_, n_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        full(i, m_ + j) = random_soul(parity::odd);
        full(m_ + j, i) = random_soul(parity::odd);
      }
    return super_matrix(m_, n_, std::move(full));
  }

  /// A point of the even subgroup (P = Q = 0).
  super_matrix sample_even() {
    super_matrix a = sample();
    gmatrix full = a.full();
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        full(i, m_ + j) = grassmann_element(k_);
        full(m_ + j, i) = grassmann_element(k_);
      }
    return super_matrix(m_, n_, std::move(full));
  }

  grassmann_element random_soul(parity par) {
    grassmann_element e(k_);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> coef(-soul_range_, soul_range_);
    for (std::size_t mask = 1; mask < e.dim(); ++mask) {
      if ((std::popcount(mask) & 1) != static_cast<int>(par)) continue;
      if (coin(rng_)) e[mask] = scalar(coef(rng_));
    }
    return e;
  }

  /// Invertible rational element body + even soul.
  grassmann_element random_unit() {
    grassmann_element e = random_soul(parity::even);
    e[0] = random_nonzero();
    return e;
  }

  std::mt19937_64& rng() { return rng_; }

private:
  scalar random_nonzero() {
    static const scalar choices[] = {scalar(1), scalar(-1), scalar(2), scalar(-2), scalar(1, 2), scalar(-1, 2),
                                     scalar(3), scalar(-3, 2)};
    std::uniform_int_distribution<int> pick(0, 7);
    return choices[pick(rng_)];
  }

  void set_even_block(gmatrix& full, std::size_t off, std::size_t size) {
    std::uniform_int_distribution<int> small(-2, 2);
    qmatrix l = qmatrix::identity(size), u = qmatrix::identity(size), d(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      d(i, i) = random_nonzero();
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = scalar(small(rng_));
        u(j, i) = scalar(small(rng_));
      }
    }
    qmatrix body = l * d * u;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        grassmann_element e = random_soul(parity::even);
        e[0] = body(i, j);
        full(off + i, off + j) = std::move(e);
      }
  }

  std::size_t m_, n_;
  int k_;
  std::mt19937_64 rng_;
  int soul_range_;
};

// ---- JSON ---------------------------------------------------------------

/// Entry as a list of [odd-support, "rational"] pairs in increasing mask order.
inline nlohmann::json to_json(const grassmann_element& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t mask = 0; mask < e.dim(); ++mask) {
    if (e[mask].is_zero()) continue;
    nlohmann::json support = nlohmann::json::array();
    for (std::size_t b = mask; b; b &= b - 1) support.push_back(std::countr_zero(b) + 1);
    arr.push_back({support, e[mask].str()});
  }
  return arr;
}

inline grassmann_element grassmann_from_json(int k, const nlohmann::json& j) {
  grassmann_element e(k);
  for (const auto& pair : j) {
    std::size_t mask = 0;
    int last = 0;
    for (const auto& idx : pair.at(0)) {
      int i = idx.get<int>();
      if (i <= last || i > k) throw algebra_error("point JSON: odd support must be strictly increasing within 1..k");
      mask |= std::size_t{1} << (i - 1);
      last = i;
    }
    e[mask] = rational::parse(pair.at(1).get<std::string>());
  }
  return e;
}

inline nlohmann::json to_json(const super_matrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.m() + a.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.m() + a.n(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"shape", {a.m(), a.n(), a.k()}}, {"entries", std::move(rows)}};
}

inline super_matrix point_from_json(const nlohmann::json& j) {
  auto shape = j.at("shape");
  std::size_t m = shape.at(0), n = shape.at(1);
  int k = shape.at(2);
  super_matrix a(m, n, k);
  const auto& rows = j.at("entries");
  if (rows.size() != m + n) throw algebra_error("point JSON: wrong number of rows");
  for (std::size_t i = 0; i < m + n; ++i) {
    if (rows[i].size() != m + n) throw algebra_error("point JSON: wrong number of columns");
    for (std::size_t jj = 0; jj < m + n; ++jj) a(i, jj) = grassmann_from_json(k, rows[i][jj]);
  }
  return a;
}

} // namespace superhopf
