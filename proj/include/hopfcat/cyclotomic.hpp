// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element of order n is stored on the power basis 1, z, ..., z^(phi(n)-1)
// of Q(zeta_n), i.e. reduced modulo the n-th cyclotomic polynomial.  Binary
// operations lift both operands to the lcm of their orders.  After every
// operation the order is lowered when that is cheap (all exponents share a
// factor with n, or n = 2 mod 4); canonical() additionally finds the minimal
// conductor, which makes the representation unique.

#ifndef HOPFCAT_CYCLOTOMIC_HPP_
#define HOPFCAT_CYCLOTOMIC_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hopfcat {

namespace impl {

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  if (n > 1)
    result -= result / n;
  return result;
}

inline std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    ps.push_back(n);
  return ps;
}

using IntPoly = std::vector<std::int64_t>;  // coefficient of x^i at [i]

// Reduction data for one order n: x^k mod Phi_n for 0 <= k < n.
struct CycloTable {
  int n;
  int phi;
  IntPoly cyclotomic_poly;
  std::vector<std::vector<std::pair<int, std::int64_t>>> power_mod;
};

inline IntPoly cyclotomic_polynomial(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division.
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    IntPoly den = cyclotomic_polynomial(d);
    int dd = static_cast<int>(den.size()) - 1;
    IntPoly q(num.size() - dd, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
      std::int64_t c = num[i];  // den is monic
      q[i - dd] = c;
      if (c != 0)
        for (int j = 0; j <= dd; ++j)
          num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

inline std::shared_ptr<const CycloTable> make_cyclo_table(int n) {
  auto t = std::make_shared<CycloTable>();
  t->n = n;
  t->cyclotomic_poly = cyclotomic_polynomial(n);
  t->phi = static_cast<int>(t->cyclotomic_poly.size()) - 1;
  std::vector<std::int64_t> cur(t->phi, 0);
  t->power_mod.resize(n);
  for (int k = 0; k < n; ++k) {
    if (k < t->phi) {
      std::fill(cur.begin(), cur.end(), 0);
      cur[k] = 1;
    } else {
      // multiply previous by x and fold the x^phi term back
      std::int64_t top = cur[t->phi - 1];
      for (int i = t->phi - 1; i > 0; --i)
        cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < t->phi; ++i)
          cur[i] -= top * t->cyclotomic_poly[i];
    }
    for (int i = 0; i < t->phi; ++i)
      if (cur[i] != 0)
        t->power_mod[k].emplace_back(i, cur[i]);
  }
  return t;
}

inline const CycloTable& cyclo_table(int n) {
  thread_local std::map<int, std::shared_ptr<const CycloTable>> local;
  auto it = local.find(n);
  if (it != local.end())
    return *it->second;
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloTable>> shared;
  std::shared_ptr<const CycloTable> t;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = shared[n];
    if (!slot)
      slot = make_cyclo_table(n);
    t = slot;
  }
  return *local.emplace(n, t).first->second;
}

inline int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

inline int mod_pos(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

} // namespace impl

class CycloNumber {
public:
  using Term = std::pair<int, Rational>;

  CycloNumber() = default;
  CycloNumber(const Rational& q) {  // NOLINT: rationals embed implicitly
    if (!q.is_zero())
      terms_.emplace_back(0, q);
  }
  CycloNumber(int q) : CycloNumber(Rational(q)) {}  // NOLINT
  CycloNumber(std::int64_t q) : CycloNumber(Rational(q)) {}  // NOLINT

  // zeta_n^e
  static CycloNumber zeta(int n, int e = 1) {
    if (n < 1)
      throw PreconditionViolated("cyclotomic order must be positive");
    std::vector<Rational> dense(n);
    dense[impl::mod_pos(e, n)] = Rational(1);
    return from_dense(n, dense);
  }

  // Element of order n from a sparse exponent -> coefficient map; exponents
  // are taken mod n and the result is reduced.
  static CycloNumber from_terms(int n, const std::vector<Term>& terms) {
    if (n < 1)
      throw PreconditionViolated("cyclotomic order must be positive");
    std::vector<Rational> dense(n);
    for (const Term& t : terms)
      dense[impl::mod_pos(t.first, n)] += t.second;
    return from_dense(n, dense);
  }

  int order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0 && order_ == 1); }
  bool is_one() const { return is_rational() && !terms_.empty() && terms_[0].second.is_one(); }
  Rational rational_value() const {
    if (!is_rational())
      throw PreconditionViolated("cyclotomic number is not rational");
    return terms_.empty() ? Rational() : terms_[0].second;
  }

  CycloNumber operator-() const {
    CycloNumber r = *this;
    for (Term& t : r.terms_)
      t.second = -t.second;
    return r;
  }

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.order_ == b.order_) {
      CycloNumber r;
      r.order_ = a.order_;
      merge_add(a.terms_, b.terms_, r.terms_);
      r.simplify();
      return r;
    }
    int n = impl::lcm_int(a.order_, b.order_);
    std::vector<Rational> dense(n);
    a.lift_into(n, dense);
    b.lift_into(n, dense);
    return from_dense(n, dense);
  }
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }

  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    if (a.is_zero() || b.is_zero()) return CycloNumber();
    if (a.order_ == 1) return b.scaled(a.terms_[0].second);
    if (b.order_ == 1) return a.scaled(b.terms_[0].second);
    int n = impl::lcm_int(a.order_, b.order_);
    int sa = n / a.order_, sb = n / b.order_;
    std::vector<Rational> dense(n);
    for (const Term& x : a.terms_)
      for (const Term& y : b.terms_)
        dense[(x.first * sa + y.first * sb) % n] += x.second * y.second;
    return from_dense(n, dense);
  }

  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

  CycloNumber scaled(const Rational& q) const {
    if (q.is_zero())
      return CycloNumber();
    CycloNumber r = *this;
    for (Term& t : r.terms_)
      t.second *= q;
    return r;
  }

  // Image under zeta_n -> zeta_n^k, gcd(k, n) = 1.
  CycloNumber galois(int k) const {
    if (order_ == 1 || is_zero())
      return *this;
    if (std::gcd(impl::mod_pos(k, order_), order_) != 1)
      throw PreconditionViolated("galois exponent not coprime to the order");
    std::vector<Rational> dense(order_);
    for (const Term& t : terms_)
      dense[impl::mod_pos(static_cast<long long>(t.first) * k, order_)] += t.second;
    return from_dense(order_, dense);
  }

  // Complex conjugation, zeta -> zeta^-1.
  CycloNumber conjugate() const { return galois(-1); }

  // Field norm down to Q times the inverse of the product of the other
  // conjugates.
  CycloNumber inverse() const {
    if (is_zero())
      throw DivisionByZero("inverse of zero cyclotomic number");
    if (order_ == 1)
      return CycloNumber(terms_[0].second.inverse());
    CycloNumber rest(1);
    for (int k = 2; k < order_; ++k)
      if (std::gcd(k, order_) == 1)
        rest *= galois(k);
    CycloNumber norm = *this * rest;
    if (!norm.is_rational())
      throw InternalMismatch("norm of cyclotomic number is not rational");
    return rest.scaled(norm.rational_value().inverse());
  }
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

  std::complex<double> to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double two_pi = 6.283185307179586476925286766559;
    for (const Term& t : terms_) {
      double angle = two_pi * t.first / order_;
      z += t.second.to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
  }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.order_ == b.order_)
      return a.terms_ == b.terms_;
    return (a - b).is_zero();
  }
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  // Representation at the minimal conductor; equal field elements yield
  // identical canonical forms.
  CycloNumber canonical() const {
    CycloNumber x = *this;
    bool lowered = true;
    while (lowered && x.order_ > 1) {
      lowered = false;
      for (int p : impl::prime_factors(x.order_)) {
        CycloNumber y;
        if (x.descend(x.order_ / p, y)) {
          x = std::move(y);
          lowered = true;
          break;
        }
      }
    }
    return x;
  }

  // Total order on canonical forms (order first, then terms); used only to
  // make sorted outputs reproducible.
  friend int canonical_compare(const CycloNumber& a, const CycloNumber& b) {
    CycloNumber x = a.canonical(), y = b.canonical();
    if (x.order_ != y.order_)
      return x.order_ < y.order_ ? -1 : 1;
    std::size_t n = std::min(x.terms_.size(), y.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (x.terms_[i].first != y.terms_[i].first)
        return x.terms_[i].first < y.terms_[i].first ? 1 : -1;
      int c = compare(x.terms_[i].second, y.terms_[i].second);
      if (c != 0)
        return c;
    }
    if (x.terms_.size() != y.terms_.size())
      return x.terms_.size() < y.terms_.size() ? -1 : 1;
    return 0;
  }

  // Canonical text form "a0 + a1*z(n)^e1 + ...".
  std::string str() const {
    CycloNumber c = canonical();
    if (c.is_zero())
      return "0";
    std::string out;
    bool first = true;
    for (const Term& t : c.terms_) {
      Rational q = t.second;
      bool neg = q.sign() < 0;
      if (!first)
        out += neg ? " - " : " + ";
      else if (neg)
        out += "-";
      Rational mag = neg ? -q : q;
      if (t.first == 0) {
        out += mag.str();
      } else {
        if (!mag.is_one())
          out += mag.str() + "*";
        out += "z(" + std::to_string(c.order_) + ")^" + std::to_string(t.first);
      }
      first = false;
    }
    return out;
  }

private:
  int order_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients

  static void merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                        std::vector<Term>& out) {
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back(b[j++]);
      } else {
        Rational s = a[i].second + b[j].second;
        if (!s.is_zero())
          out.emplace_back(a[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
  }

  void lift_into(int n, std::vector<Rational>& dense) const {
    int s = n / order_;
    for (const Term& t : terms_)
      dense[t.first * s] += t.second;
  }

  // dense has length n, indexed by exponent mod n
  static CycloNumber from_dense(int n, const std::vector<Rational>& dense) {
    CycloNumber r;
    r.order_ = n;
    const impl::CycloTable& tab = impl::cyclo_table(n);
    std::vector<Rational> red(tab.phi);
    for (int k = 0; k < n; ++k) {
      if (dense[k].is_zero())
        continue;
      if (k < tab.phi) {
        red[k] += dense[k];
        continue;
      }
      for (const auto& [e, c] : tab.power_mod[k])
        red[e] += dense[k] * Rational(c);
    }
    for (int e = 0; e < tab.phi; ++e)
      if (!red[e].is_zero())
        r.terms_.emplace_back(e, std::move(red[e]));
    r.simplify();
    return r;
  }

  // Cheap order reduction.
  void simplify() {
    for (;;) {
      if (terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0)) {
        order_ = 1;
        return;
      }
      int g = order_;
      for (const Term& t : terms_)
        g = std::gcd(g, t.first);
      if (g > 1) {
        order_ /= g;
        for (Term& t : terms_)
          t.first /= g;
        continue;
      }
      if (order_ % 4 == 2 && order_ > 2) {
        // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
        int m = order_ / 2;
        int half = (m + 1) / 2;
        std::vector<Rational> dense(m);
        for (const Term& t : terms_) {
          Rational c = (t.first % 2 == 0) ? t.second : -t.second;
          dense[impl::mod_pos(static_cast<long long>(t.first) * half, m)] += c;
        }
        *this = from_dense(m, dense);
        return;
      }
      return;
    }
  }

  // If this element lies in Q(zeta_d) for d | order, write it there.
  bool descend(int d, CycloNumber& out) const {
    int n = order_;
    for (int k = 1 + d; k < n; k += d)
      if (std::gcd(k, n) == 1 && galois(k) != *this)
        return false;
    // Solve sum_e c_e zeta_n^{e n/d} = this over e < phi(d).
    const impl::CycloTable& big = impl::cyclo_table(n);
    int phi_d = impl::euler_phi(d);
    int step = n / d;
    int rows = big.phi;
    // augmented matrix rows x (phi_d + 1)
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(phi_d + 1));
    for (int e = 0; e < phi_d; ++e)
      for (const auto& [i, c] : big.power_mod[(e * step) % n])
        m[i][e] = Rational(c);
    for (const Term& t : terms_)
      m[t.first][phi_d] = t.second;
    int r = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < phi_d && r < rows; ++col) {
      int piv = -1;
      for (int i = r; i < rows; ++i)
        if (!m[i][col].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0)
        continue;
      std::swap(m[r], m[piv]);
      Rational inv = m[r][col].inverse();
      for (int j = col; j <= phi_d; ++j)
        m[r][j] *= inv;
      for (int i = 0; i < rows; ++i)
        if (i != r && !m[i][col].is_zero()) {
          Rational f = m[i][col];
          for (int j = col; j <= phi_d; ++j)
            m[i][j] -= f * m[r][j];
        }
      pivot_col.push_back(col);
      ++r;
    }
    for (int i = r; i < rows; ++i)
      if (!m[i][phi_d].is_zero())
        throw InternalMismatch("galois-fixed element has no subfield expansion");
    std::vector<Term> terms;
    for (int i = 0; i < r; ++i)
      if (!m[i][phi_d].is_zero())
        terms.emplace_back(pivot_col[i], m[i][phi_d]);
    out = from_terms(d, terms);
    return true;
  }
};

} // namespace hopfcat

#endif
