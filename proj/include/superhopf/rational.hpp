#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superhopf {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in int64 are stored inline and
/// all arithmetic on them goes through 128-bit intermediates; anything larger
/// spills to a GMP rational. The spill is transparent: a big value is demoted
/// again as soon as it fits, so equality can compare representations directly.
class rational {
public:
  rational() = default;
  rational(int v) : num_(v) {}
  rational(long v) : num_(v) { if (v == min64) promote_from(mpq_class(v)); }
  rational(long long v) : num_(v) { if (v == min64) promote_from(mpq_class(static_cast<long>(v))); }

  rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    mpq_class q(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    q.canonicalize();
    assign(std::move(q));
  }

  explicit rational(const mpq_class& q) { assign(mpq_class(q)); }

  rational(const rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  rational(rational&&) noexcept = default;
  rational& operator=(const rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  rational& operator=(rational&&) noexcept = default;

  /// Parses "n" or "n/d" (optional leading sign, decimal digits only).
  static rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("rational: empty literal");
    std::string s(text);
    auto slash = s.find('/');
    auto valid = [](std::string_view part, bool allow_sign) {
      if (part.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (part[0] == '-' || part[0] == '+')) ++i;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') return false;
      return true;
    };
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(n, true) || !valid(d, false))
      throw std::invalid_argument("rational: malformed literal '" + s + "'");
    if (n[0] == '+') n.erase(0, 1);
    mpz_class zn(n, 10), zd(d, 10);
    if (zd == 0) throw std::domain_error("rational: zero denominator");
    mpq_class q(zn, zd);
    q.canonicalize();
    rational r;
    r.assign(std::move(q));
    return r;
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  }

  std::string str() const {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  rational operator-() const {
    if (!big_) return from_small(-num_, den_);
    return from_mpq(-*big_);
  }

  rational inverse() const {
    if (is_zero()) throw std::domain_error("rational: division by zero");
    if (!big_) return num_ < 0 ? from_small(-den_, -num_) : from_small(den_, num_);
    mpq_class q = 1 / *big_;
    return from_mpq(std::move(q));
  }

  friend rational operator+(const rational& a, const rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_i128(static_cast<__int128>(a.num_) + b.num_, 1);
      if (a.num_ == 0) return b;
      if (b.num_ == 0) return a;
      const std::int64_t g = std::gcd(a.den_, b.den_);
      __int128 n = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
      __int128 d = static_cast<__int128>(a.den_ / g) * b.den_;
      if (n == 0) return rational();
      if (g != 1) {
        std::int64_t r = static_cast<std::int64_t>(n % g);
        std::int64_t g2 = std::gcd(r < 0 ? -r : r, g);
        n /= g2;
        d /= g2;
      }
      return from_i128(n, d);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }

  friend rational operator-(const rational& a, const rational& b) { return a + (-b); }

  friend rational operator*(const rational& a, const rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return rational();
      if (a.den_ == 1 && b.den_ == 1) return from_i128(static_cast<__int128>(a.num_) * b.num_, 1);
      const std::int64_t g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
      const std::int64_t g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
      __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
      __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
      return from_i128(n, d);
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }

  friend rational operator/(const rational& a, const rational& b) { return a * b.inverse(); }

  rational& operator+=(const rational& o) { return *this = *this + o; }
  rational& operator-=(const rational& o) { return *this = *this - o; }
  rational& operator*=(const rational& o) { return *this = *this * o; }
  rational& operator/=(const rational& o) { return *this = *this / o; }

  friend bool operator==(const rational& a, const rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // canonical: a big value never fits the inline form
  }

  friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
    if (!a.big_ && !b.big_) {
      __int128 l = static_cast<__int128>(a.num_) * b.den_;
      __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

private:
  static constexpr std::int64_t min64 = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t max64 = std::numeric_limits<std::int64_t>::max();

  static rational from_small(std::int64_t n, std::int64_t d) {
    rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  // n/d already in lowest terms, d > 0.
  static rational from_i128(__int128 n, __int128 d) {
    if (n > -static_cast<__int128>(max64) - 1 && n <= max64 && d <= max64 && n != min64) {
      return from_small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
    auto to_mpz = [](__int128 v) {
      bool neg = v < 0;
      unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
      mpz_class hi(static_cast<unsigned long>(u >> 64));
      mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
      mpz_class z = (hi << 64) + lo;
      return neg ? mpz_class(-z) : z;
    };
    mpq_class q(to_mpz(n), to_mpz(d));
    rational r;
    r.promote_from(std::move(q));
    return r;
  }

  static rational from_mpq(mpq_class q) {
    rational r;
    r.assign(std::move(q));
    return r;
  }

  // q canonical.
  void assign(mpq_class q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != min64) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      big_.reset();
    } else {
      promote_from(std::move(q));
    }
  }

  void promote_from(mpq_class q) {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

} // namespace superhopf
