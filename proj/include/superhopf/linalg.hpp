#pragma once

#include "superhopf/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace superhopf {

/// Dense row-major matrix of exact rationals.
class qmatrix {
public:
  qmatrix() = default;
  qmatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static qmatrix identity(std::size_t n) {
    qmatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  qmatrix transpose() const {
    qmatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend qmatrix operator*(const qmatrix& a, const qmatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("qmatrix: shape mismatch in product");
    qmatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const rational& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend qmatrix operator+(qmatrix a, const qmatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("qmatrix: shape mismatch in sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend qmatrix operator-(qmatrix a, const qmatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("qmatrix: shape mismatch in difference");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend qmatrix operator*(const rational& s, qmatrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }
  friend bool operator==(const qmatrix&, const qmatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<rational> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(qmatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    rational inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(qmatrix m) { return rref(m).size(); }

/// Basis of {x : m x = 0}; each vector has a 1 in one free column and 0 in the others.
inline std::vector<std::vector<rational>> nullspace(qmatrix m) {
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<rational> v(m.cols());
    v[f] = rational(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<qmatrix> inverse(const qmatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return qmatrix();
  qmatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = rational(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  qmatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Coordinates of `target` in the span of the columns of `basis`, if it lies there.
inline std::optional<std::vector<rational>> solve_in_span(const qmatrix& basis, const std::vector<rational>& target) {
  qmatrix aug(basis.rows(), basis.cols() + 1);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < basis.cols(); ++j) aug(i, j) = basis(i, j);
    aug(i, basis.cols()) = target[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == basis.cols()) return std::nullopt;
  std::vector<rational> x(basis.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, basis.cols());
  return x;
}

using sparse_vector = std::map<std::size_t, rational>;

/// Incremental row echelon basis over sparse rows. Used when the ambient
/// dimension is large but rows are short (monomial-spanned subspaces).
class sparse_echelon {
public:
  /// Reduces v against the current basis; returns the remainder.
  sparse_vector reduce(sparse_vector v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      rational f = it->second;
      std::size_t col = it->first;
      for (const auto& [c, x] : p->second) {
        auto& slot = v[c];
        slot -= f * x;
      }
      for (auto jt = v.begin(); jt != v.end();) jt = jt->second.is_zero() ? v.erase(jt) : std::next(jt);
      it = v.upper_bound(col);
    }
    return v;
  }

  /// Adds v to the span; returns true when it was independent.
  bool insert(sparse_vector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto lead = v.begin()->first;
    rational inv = v.begin()->second.inverse();
    for (auto& [c, x] : v) x *= inv;
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  bool contains(const sparse_vector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return pivots_.size(); }

private:
  std::map<std::size_t, sparse_vector> pivots_;
};

} // namespace superhopf
