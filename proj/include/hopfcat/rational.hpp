// Arbitrary precision rationals with an int64 fast path.
//
// Values whose numerator and denominator fit in int64 are kept inline;
// anything larger is promoted to a shared, immutable mpq_class.  Results are
// always demoted back when they fit, so every value has exactly one
// representation and equality is a field comparison.

#ifndef HOPFCAT_RATIONAL_HPP_
#define HOPFCAT_RATIONAL_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace hopfcat {

namespace impl {

using i128 = __int128;
using u128 = unsigned __int128;

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0)
      return gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 abs128(i128 x) { return x < 0 ? u128(-(x + 1)) + 1 : u128(x); }

inline bool fits64(i128 x) {
  // INT64_MIN is excluded so negation never overflows.
  return x > std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline void set_mpz(mpz_class& z, i128 v) {
  u128 a = abs128(v);
  std::uint64_t limbs[2] = {static_cast<std::uint64_t>(a),
                            static_cast<std::uint64_t>(a >> 64)};
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (v < 0)
    z = -z;
}

} // namespace impl

class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  Rational(int n) : num_(n) {}           // NOLINT
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0)
      throw DivisionByZero("rational with zero denominator");
    assign128(n, d);
  }
  explicit Rational(const mpq_class& q) { assign_mpq(mpq_class(q)); }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  // Only meaningful when is_small().
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  mpq_class to_mpq() const {
    if (big_)
      return *big_;
    mpq_class q;
    mpz_class n, d;
    impl::set_mpz(n, num_);
    impl::set_mpz(d, den_);
    q = mpq_class(n, d);
    q.canonicalize();
    return q;
  }

  double to_double() const {
    return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string numerator_str() const {
    return big_ ? big_->get_num().get_str() : std::to_string(num_);
  }
  std::string denominator_str() const {
    return big_ ? big_->get_den().get_str() : std::to_string(den_);
  }
  std::string str() const {
    if (is_integer())
      return numerator_str();
    return numerator_str() + "/" + denominator_str();
  }

  static Rational from_strings(const std::string& n, const std::string& d) {
    mpq_class q{mpz_class(n), mpz_class(d)};
    if (q.get_den() == 0)
      throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  Rational operator-() const {
    if (big_)
      return Rational(mpq_class(-*big_));
    Rational r;
    r.assign128(-impl::i128(num_), den_);
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.den_ == b.den_)
        r.assign128(impl::i128(a.num_) + b.num_, a.den_);
      else
        r.assign128(impl::i128(a.num_) * b.den_ + impl::i128(b.num_) * a.den_,
                    impl::i128(a.den_) * b.den_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (!a.big_ && !b.big_) {
      Rational r;
      r.assign128(impl::i128(a.num_) * b.num_, impl::i128(a.den_) * b.den_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }

  Rational inverse() const {
    if (is_zero())
      throw DivisionByZero("inverse of zero rational");
    if (big_)
      return Rational(mpq_class(1 / *big_));
    Rational r;
    r.assign128(den_, num_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_)
      return *a.big_ == *b.big_;
    return false;  // demotion makes mixed representations unequal
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  friend int compare(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      impl::i128 l = impl::i128(a.num_) * b.den_;
      impl::i128 r = impl::i128(b.num_) * a.den_;
      return (l > r) - (l < r);
    }
    return cmp(a.to_mpq(), b.to_mpq());
  }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;

  void assign128(impl::i128 n, impl::i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    impl::u128 g = impl::gcd_u128(impl::abs128(n), impl::u128(d));
    if (g > 1) {
      n /= impl::i128(g);
      d /= impl::i128(g);
    }
    if (impl::fits64(n) && impl::fits64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
      return;
    }
    mpz_class zn, zd;
    impl::set_mpz(zn, n);
    impl::set_mpz(zd, d);
    big_ = std::make_shared<const mpq_class>(zn, zd);
    num_ = 0;
    den_ = 1;
  }

  void assign_mpq(mpq_class q) {
    q.canonicalize();
    if (mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 63 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 63) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      big_.reset();
    } else {
      big_ = std::make_shared<const mpq_class>(std::move(q));
      num_ = 0;
      den_ = 1;
    }
  }
};

} // namespace hopfcat

#endif
