#pragma once

#include "superhopf/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace superhopf {

using scalar = rational;

enum class parity : std::uint8_t { even = 0, odd = 1 };

inline parity operator+(parity a, parity b) {
  return static_cast<parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline parity operator*(parity a, parity b) {
  return static_cast<parity>(static_cast<std::uint8_t>(a) & static_cast<std::uint8_t>(b));
}
inline bool is_odd(parity p) { return p == parity::odd; }
inline const char* to_string(parity p) { return p == parity::odd ? "odd" : "even"; }

/// Parity of a possibly inhomogeneous element.
enum class parity_class : std::uint8_t { even, odd, mixed };
inline const char* to_string(parity_class p) {
  switch (p) {
  case parity_class::even: return "even";
  case parity_class::odd: return "odd";
  default: return "mixed";
  }
}

/// (-1)^{|a||b|}
inline int koszul_sign(parity a, parity b) { return is_odd(a * b) ? -1 : 1; }

class algebra_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reference to a generator: its parity plus index within the even or odd list.
struct symbol {
  parity par = parity::even;
  std::size_t index = 0;
  friend bool operator==(const symbol&, const symbol&) = default;
};

class generator_set;
using gen_set_ptr = std::shared_ptr<const generator_set>;

/// Ordered even and odd generators of a free super-commutative algebra.
/// Order is fixed at construction; the odd order defines the normal form.
class generator_set {
public:
  static constexpr std::size_t max_odd = 64;

  static gen_set_ptr make(std::vector<std::string> evens, std::vector<std::string> odds,
                          std::vector<int> even_degrees = {}, std::vector<int> odd_degrees = {}) {
    return std::make_shared<const generator_set>(ctor_tag{}, std::move(evens), std::move(odds),
                                                 std::move(even_degrees), std::move(odd_degrees));
  }

  struct ctor_tag {};
  generator_set(ctor_tag, std::vector<std::string> evens, std::vector<std::string> odds,
                std::vector<int> even_degrees, std::vector<int> odd_degrees)
      : evens_(std::move(evens)), odds_(std::move(odds)), even_deg_(std::move(even_degrees)),
        odd_deg_(std::move(odd_degrees)) {
    if (odds_.size() > max_odd) throw algebra_error("generator_set: at most 64 odd generators supported");
    if (even_deg_.empty()) even_deg_.assign(evens_.size(), 1);
    if (odd_deg_.empty()) odd_deg_.assign(odds_.size(), 1);
    if (even_deg_.size() != evens_.size() || odd_deg_.size() != odds_.size())
      throw algebra_error("generator_set: degree list length mismatch");
    for (std::size_t i = 0; i < evens_.size(); ++i) insert(evens_[i], {parity::even, i});
    for (std::size_t i = 0; i < odds_.size(); ++i) insert(odds_[i], {parity::odd, i});
  }

  const std::vector<std::string>& evens() const { return evens_; }
  const std::vector<std::string>& odds() const { return odds_; }
  std::size_t num_even() const { return evens_.size(); }
  std::size_t num_odd() const { return odds_.size(); }
  std::size_t size() const { return evens_.size() + odds_.size(); }

  /// Generators are addressed by slot: evens first, then odds.
  symbol slot_symbol(std::size_t slot) const {
    return slot < evens_.size() ? symbol{parity::even, slot} : symbol{parity::odd, slot - evens_.size()};
  }
  std::size_t slot_of(symbol s) const { return is_odd(s.par) ? evens_.size() + s.index : s.index; }
  const std::string& name(symbol s) const { return is_odd(s.par) ? odds_[s.index] : evens_[s.index]; }
  int degree(symbol s) const { return is_odd(s.par) ? odd_deg_[s.index] : even_deg_[s.index]; }
  const std::vector<int>& even_degrees() const { return even_deg_; }
  const std::vector<int>& odd_degrees() const { return odd_deg_; }

  std::optional<symbol> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  symbol lookup(const std::string& name) const {
    auto s = find(name);
    if (!s) throw algebra_error("unknown generator '" + name + "'");
    return *s;
  }

  friend bool operator==(const generator_set& a, const generator_set& b) {
    return a.evens_ == b.evens_ && a.odds_ == b.odds_ && a.even_deg_ == b.even_deg_ && a.odd_deg_ == b.odd_deg_;
  }

private:
  void insert(const std::string& name, symbol s) {
    if (!index_.emplace(name, s).second) throw algebra_error("duplicate generator name '" + name + "'");
  }

  std::vector<std::string> evens_, odds_;
  std::vector<int> even_deg_, odd_deg_;
  std::unordered_map<std::string, symbol> index_;
};

inline bool same_set(const gen_set_ptr& a, const gen_set_ptr& b) { return a == b || (a && b && *a == *b); }

/// Free product of generator sets: the algebra A_1 ⊗ ... ⊗ A_r, realized as the
/// free super-commutative algebra on the disjoint union with every odd generator
/// of factor i ordered before those of factor i+1. Under this identification
/// a_1 ⊗ ... ⊗ a_r is the normal-form product a_1 a_2 ... a_r, so the Koszul
/// signs of the super tensor product come from monomial reordering alone.
inline gen_set_ptr tensor_set(const std::vector<gen_set_ptr>& factors) {
  std::vector<std::string> ev, od;
  std::vector<int> evd, odd;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const std::string tag = "#" + std::to_string(f + 1);
    for (std::size_t i = 0; i < factors[f]->num_even(); ++i) {
      ev.push_back(factors[f]->evens()[i] + tag);
      evd.push_back(factors[f]->even_degrees()[i]);
    }
    for (std::size_t i = 0; i < factors[f]->num_odd(); ++i) {
      od.push_back(factors[f]->odds()[i] + tag);
      odd.push_back(factors[f]->odd_degrees()[i]);
    }
  }
  return generator_set::make(std::move(ev), std::move(od), std::move(evd), std::move(odd));
}

inline gen_set_ptr tensor_power(const gen_set_ptr& g, std::size_t r) {
  return tensor_set(std::vector<gen_set_ptr>(r, g));
}

/// Normal-form monomial: even exponent vector (trailing zeros trimmed) and odd
/// support as a bitmask, bit i standing for odd generator i. Because odd
/// generators square to zero the support is a set; the element represented is
/// the product of the evens followed by the odds in increasing index order.
struct super_monomial {
  std::vector<std::uint16_t> exps;
  std::uint64_t odd = 0;

  int even_degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  int odd_count() const { return std::popcount(odd); }
  /// Number of generator factors (the (A^+)-adic filtration degree for shifted presentations).
  int total_degree() const { return even_degree() + odd_count(); }
  parity par() const { return (odd_count() & 1) ? parity::odd : parity::even; }
  bool is_one() const { return exps.empty() && odd == 0; }

  std::uint16_t exponent(std::size_t i) const { return i < exps.size() ? exps[i] : 0; }

  std::vector<std::size_t> odd_support() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = odd; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }

  void trim() {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
  }

  static super_monomial generator(symbol s) {
    super_monomial m;
    if (is_odd(s.par)) {
      m.odd = std::uint64_t{1} << s.index;
    } else {
      m.exps.assign(s.index + 1, 0);
      m.exps[s.index] = 1;
    }
    return m;
  }

  friend bool operator==(const super_monomial&, const super_monomial&) = default;
  friend bool operator<(const super_monomial& a, const super_monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    std::size_t n = std::max(a.exps.size(), b.exps.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea > eb;
    }
    if (a.odd != b.odd) {
      // compare supports as increasing index lists
      std::uint64_t diff = a.odd ^ b.odd;
      std::uint64_t low = diff & (~diff + 1);
      return (a.odd & low) != 0;
    }
    return false;
  }
};

/// Sign of moving the odd generators of b past those of a: (-1)^{#{(i,j): i in a, j in b, i > j}}.
/// Returns 0 when the supports overlap.
inline int odd_merge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int count = 0;
  for (std::uint64_t m = b; m; m &= m - 1) {
    int j = std::countr_zero(m);
    std::uint64_t above = j == 63 ? 0 : (a >> (j + 1));
    count += std::popcount(above);
  }
  return (count & 1) ? -1 : 1;
}

/// Product of normal monomials. Returns sign in {-1, 0, +1} and the normal monomial.
inline std::pair<int, super_monomial> multiply_monomials(const super_monomial& a, const super_monomial& b) {
  int s = odd_merge_sign(a.odd, b.odd);
  if (s == 0) return {0, {}};
  super_monomial m;
  m.exps.resize(std::max(a.exps.size(), b.exps.size()), 0);
  for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] += a.exps[i];
  for (std::size_t i = 0; i < b.exps.size(); ++i) m.exps[i] += b.exps[i];
  m.odd = a.odd | b.odd;
  return {s, std::move(m)};
}

/// Element of a free super-commutative algebra in normal form.
class super_poly {
public:
  using term_map = std::map<super_monomial, scalar>;

  super_poly() = default;
  explicit super_poly(gen_set_ptr gens) : gens_(std::move(gens)) {}
  super_poly(gen_set_ptr gens, const scalar& c) : gens_(std::move(gens)) {
    if (!c.is_zero()) terms_.emplace(super_monomial{}, c);
  }

  static super_poly generator(gen_set_ptr gens, symbol s) {
    super_poly p(std::move(gens));
    p.terms_.emplace(super_monomial::generator(s), scalar(1));
    return p;
  }
  static super_poly generator(gen_set_ptr gens, const std::string& name) {
    symbol s = gens->lookup(name);
    return generator(std::move(gens), s);
  }
  static super_poly monomial(gen_set_ptr gens, super_monomial m, const scalar& c = scalar(1)) {
    super_poly p(std::move(gens));
    m.trim();
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const gen_set_ptr& gens() const { return gens_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  scalar coefficient(const super_monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? scalar() : it->second;
  }
  scalar constant_term() const { return coefficient(super_monomial{}); }

  /// Adds c*m; m must be in normal form.
  void add_term(const super_monomial& m, const scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  parity_class parity_of() const {
    bool has_even = false, has_odd = false;
    for (const auto& [m, c] : terms_) (is_odd(m.par()) ? has_odd : has_even) = true;
    if (has_even && has_odd) return parity_class::mixed;
    return has_odd ? parity_class::odd : parity_class::even;
  }

  /// Homogeneous components (even, odd).
  std::pair<super_poly, super_poly> split_parity() const {
    super_poly e(gens_), o(gens_);
    for (const auto& [m, c] : terms_) (is_odd(m.par()) ? o : e).terms_.emplace(m, c);
    return {e, o};
  }

  int max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  super_poly operator-() const {
    super_poly r(gens_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  super_poly& operator+=(const super_poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  super_poly& operator-=(const super_poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  super_poly& operator*=(const scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend super_poly operator+(super_poly a, const super_poly& b) { return a += b; }
  friend super_poly operator-(super_poly a, const super_poly& b) { return a -= b; }
  friend super_poly operator*(super_poly a, const scalar& s) { return a *= s; }
  friend super_poly operator*(const scalar& s, super_poly a) { return a *= s; }

  friend super_poly operator*(const super_poly& a, const super_poly& b) {
    a.check_compatible(b);
    super_poly r(a.gens_ ? a.gens_ : b.gens_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto [s, m] = multiply_monomials(ma, mb);
        if (s == 0) continue;
        scalar c = ca * cb;
        r.add_term(m, s < 0 ? -c : c);
      }
    }
    return r;
  }

  friend bool operator==(const super_poly& a, const super_poly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.terms_ == b.terms_ && same_set(a.gens_, b.gens_);
  }

  /// Operands must share a generator set. Empty set pointers act as the scalar ring.
  void check_compatible(const super_poly& o) const {
    if (gens_ && o.gens_ && !same_set(gens_, o.gens_))
      throw algebra_error("generator-set mismatch between operands");
  }

  super_poly& rebind(gen_set_ptr g) {
    gens_ = std::move(g);
    return *this;
  }

private:
  gen_set_ptr gens_;
  term_map terms_;
};

inline parity_class parity_of(const super_poly& p) { return p.parity_of(); }

/// Multiplies the listed generators in order and returns (sign, normal monomial).
/// Sign is 0 exactly when some odd generator repeats.
inline std::pair<int, super_monomial> normalize_product(const generator_set& gens,
                                                       const std::vector<std::string>& factors) {
  super_monomial acc;
  int sign = 1;
  for (const auto& name : factors) {
    symbol s = gens.lookup(name);
    auto [t, m] = multiply_monomials(acc, super_monomial::generator(s));
    if (t == 0) sign = 0;
    if (sign == 0) continue; // keep validating the remaining names
    sign *= t;
    acc = std::move(m);
  }
  if (sign == 0) return {0, {}};
  acc.trim();
  return {sign, acc};
}

/// Applies the unique super-algebra morphism determined by generator images.
/// images[slot] is the image of generator `slot` (evens first, then odds);
/// each must be homogeneous of the generator's parity (zero is allowed).
class algebra_hom {
public:
  algebra_hom(gen_set_ptr source, gen_set_ptr target, std::vector<super_poly> images, bool check_parity = true)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->size()) throw algebra_error("algebra_hom: wrong number of generator images");
    for (std::size_t slot = 0; slot < images_.size(); ++slot) {
      if (!images_[slot].gens()) images_[slot].rebind(target_);
      else if (!same_set(images_[slot].gens(), target_))
        throw algebra_error("algebra_hom: image of '" + source_->name(source_->slot_symbol(slot)) +
                            "' lives in the wrong algebra");
      if (check_parity) {
        symbol s = source_->slot_symbol(slot);
        auto pc = images_[slot].parity_of();
        bool ok = images_[slot].is_zero() ||
                  (is_odd(s.par) ? pc == parity_class::odd : pc == parity_class::even);
        if (!ok)
          throw algebra_error("parity-violating image for generator '" + source_->name(s) + "'");
      }
    }
    powers_.resize(source_->num_even());
  }

  const gen_set_ptr& source() const { return source_; }
  const gen_set_ptr& target() const { return target_; }
  const std::vector<super_poly>& images() const { return images_; }

  super_poly apply(const super_monomial& m) const {
    super_poly r(target_, scalar(1));
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i]) r = r * even_power(i, m.exps[i]);
    for (std::uint64_t bits = m.odd; bits; bits &= bits - 1) {
      std::size_t j = static_cast<std::size_t>(std::countr_zero(bits));
      r = r * images_[source_->num_even() + j];
      if (r.is_zero()) break;
    }
    return r;
  }

  super_poly apply(const super_poly& p) const {
    if (p.gens() && !same_set(p.gens(), source_)) throw algebra_error("algebra_hom: argument not in source algebra");
    super_poly r(target_);
    for (const auto& [m, c] : p.terms()) {
      super_poly t = apply(m);
      t *= c;
      r += t;
    }
    return r;
  }

private:
  const super_poly& even_power(std::size_t i, std::uint16_t e) const {
    auto& cache = powers_[i];
    if (cache.empty()) cache.push_back(images_[i]);
    while (cache.size() < e) cache.push_back(cache.back() * images_[i]);
    return cache[e - 1];
  }

  gen_set_ptr source_, target_;
  std::vector<super_poly> images_;
  mutable std::vector<std::vector<super_poly>> powers_;
};

/// One-shot evaluation of a super-algebra morphism given by generator-name images.
inline super_poly evaluate_hom(const super_poly& p, const std::map<std::string, super_poly>& images,
                               const gen_set_ptr& target) {
  const auto& src = p.gens();
  if (!src) return super_poly(target, p.constant_term());
  std::vector<super_poly> imgs(src->size(), super_poly(target));
  std::vector<bool> seen(src->size(), false);
  for (const auto& [name, img] : images) {
    symbol s = src->lookup(name);
    imgs[src->slot_of(s)] = img;
    seen[src->slot_of(s)] = true;
  }
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] && !seen[i]) throw algebra_error("evaluate_hom: no image for generator '" + src->evens()[i] + "'");
    for (auto j : m.odd_support())
      if (!seen[src->num_even() + j])
        throw algebra_error("evaluate_hom: no image for generator '" + src->odds()[j] + "'");
  }
  return algebra_hom(src, target, std::move(imgs)).apply(p);
}

/// Embeds p into factor `copy` (0-based) of a tensor_set built from factors
/// whose generator counts are given. No sign arises: the relative odd order is kept.
inline super_poly embed_factor(const super_poly& p, const gen_set_ptr& product, const std::vector<gen_set_ptr>& factors,
                               std::size_t copy) {
  std::size_t even_off = 0, odd_off = 0;
  for (std::size_t f = 0; f < copy; ++f) {
    even_off += factors[f]->num_even();
    odd_off += factors[f]->num_odd();
  }
  super_poly r(product);
  for (const auto& [m, c] : p.terms()) {
    super_monomial e;
    if (!m.exps.empty()) {
      e.exps.assign(even_off + m.exps.size(), 0);
      std::copy(m.exps.begin(), m.exps.end(), e.exps.begin() + static_cast<std::ptrdiff_t>(even_off));
    }
    e.odd = m.odd << odd_off;
    r.add_term(e, c);
  }
  return r;
}

/// Splits a monomial of a tensor_set product into its per-factor monomials.
inline std::vector<super_monomial> split_monomial(const super_monomial& m, const std::vector<gen_set_ptr>& factors) {
  std::vector<super_monomial> out(factors.size());
  std::size_t even_off = 0, odd_off = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    std::size_t ne = factors[f]->num_even(), no = factors[f]->num_odd();
    for (std::size_t i = 0; i < ne; ++i) {
      auto e = m.exponent(even_off + i);
      if (e) {
        out[f].exps.resize(i + 1, 0);
        out[f].exps[i] = e;
      }
    }
    std::uint64_t mask = no == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << no) - 1);
    out[f].odd = odd_off >= 64 ? 0 : (m.odd >> odd_off) & mask;
    even_off += ne;
    odd_off += no;
  }
  return out;
}

/// Element of the super tensor product A ⊗ B.
class super_tensor {
public:
  super_tensor(gen_set_ptr left, gen_set_ptr right)
      : factors_{std::move(left), std::move(right)}, product_(tensor_set(factors_)), value_(product_) {}
  super_tensor(gen_set_ptr left, gen_set_ptr right, gen_set_ptr product)
      : factors_{std::move(left), std::move(right)}, product_(std::move(product)), value_(product_) {}

  /// a ⊗ b
  static super_tensor pure(const super_poly& a, const super_poly& b, const gen_set_ptr& product) {
    super_tensor t(a.gens(), b.gens(), product);
    t.value_ = embed_factor(a, product, t.factors_, 0) * embed_factor(b, product, t.factors_, 1);
    return t;
  }
  static super_tensor pure(const super_poly& a, const super_poly& b) {
    return pure(a, b, tensor_set({a.gens(), b.gens()}));
  }

  static super_tensor from_value(gen_set_ptr left, gen_set_ptr right, super_poly value) {
    super_tensor t(std::move(left), std::move(right), value.gens());
    t.value_ = std::move(value);
    return t;
  }

  const gen_set_ptr& left() const { return factors_[0]; }
  const gen_set_ptr& right() const { return factors_[1]; }
  const gen_set_ptr& product_set() const { return product_; }
  const super_poly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  struct term {
    super_monomial left, right;
    scalar coeff;
  };
  /// Expansion into pure tensors of normal monomials: Σ coeff · left ⊗ right.
  std::vector<term> terms() const {
    std::vector<term> out;
    for (const auto& [m, c] : value_.terms()) {
      auto parts = split_monomial(m, factors_);
      out.push_back({std::move(parts[0]), std::move(parts[1]), c});
    }
    return out;
  }

  /// Multiplication in A ⊗̲ B: (a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd.
  friend super_tensor tensor_mul(const super_tensor& x, const super_tensor& y) {
    super_tensor r(x.factors_[0], x.factors_[1], x.product_);
    r.value_ = x.value_ * y.value_;
    return r;
  }
  friend super_tensor operator+(const super_tensor& x, const super_tensor& y) {
    super_tensor r = x;
    r.value_ += y.value_;
    return r;
  }
  friend bool operator==(const super_tensor& a, const super_tensor& b) { return a.value_ == b.value_; }

private:
  std::vector<gen_set_ptr> factors_;
  gen_set_ptr product_;
  super_poly value_;
};

/// The super symmetry c_{A,B}: a ⊗ b ↦ (-1)^{|a||b|} b ⊗ a.
inline super_tensor flip(const super_tensor& t) {
  gen_set_ptr swapped = tensor_set({t.right(), t.left()});
  super_tensor out(t.right(), t.left(), swapped);
  super_poly v(swapped);
  for (const auto& tm : t.terms()) {
    auto m1 = super_poly::monomial(t.right(), tm.right);
    auto m2 = super_poly::monomial(t.left(), tm.left);
    int s = koszul_sign(tm.left.par(), tm.right.par());
    super_tensor piece = super_tensor::pure(m1, m2, swapped);
    v += piece.value() * (s < 0 ? -tm.coeff : tm.coeff);
  }
  return super_tensor::from_value(t.right(), t.left(), v);
}

} // namespace superhopf
