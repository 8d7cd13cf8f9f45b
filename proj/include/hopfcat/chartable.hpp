// Exact character tables by Dixon's modular method.
//
// The central characters w_i(K_j) = |C_j| chi_i(g_j) / chi_i(1) are the common
// eigenvectors of the class multiplication matrices.  These are split over a
// prime field F_p with p = 1 mod exp(G), degrees are recovered from the
// orthogonality relation, and each value chi(g) = sum_l m_l zeta_e^l is lifted
// from the eigenvalue multiplicities m_l computed mod p.

#ifndef HOPFCAT_CHARTABLE_HPP_
#define HOPFCAT_CHARTABLE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "json_io.hpp"

namespace hopfcat {

struct CharacterTable {
  Group group;
  std::vector<ConjClassG> classes;
  std::vector<int> class_of;                  // element -> class index
  std::vector<std::vector<CycloNumber>> chars;  // rows = irreducibles
  std::vector<int> degrees;

  int size() const { return static_cast<int>(chars.size()); }
  const CycloNumber& value(int i, int g) const { return chars[i][class_of[g]]; }
};

inline const CycloNumber& character_value(const CharacterTable& t, int i, int g) {
  return t.value(i, g);
}

// a[i][j][k] = #{(x, y) in C_i x C_j : xy = g_k}
inline std::vector<std::vector<std::vector<int>>> class_multiplication_coefficients(
    const Group& g, const std::vector<ConjClassG>& classes, const std::vector<int>& class_of) {
  std::size_t r = classes.size();
  std::vector<std::vector<std::vector<int>>> a(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    int gk = classes[k].representative;
    for (std::size_t i = 0; i < r; ++i)
      for (int x : classes[i].members) {
        int y = g.mul(g.inv(x), gk);
        ++a[i][class_of[y]][k];
      }
  }
  return a;
}

namespace impl {

struct ModP {
  std::int64_t p;

  std::int64_t norm(std::int64_t x) const { return ((x % p) + p) % p; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return a * b % p; }
  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1;
    a = norm(a);
    while (e > 0) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::int64_t inv(std::int64_t a) const {
    if (norm(a) == 0)
      throw DivisionByZero("inverse of 0 mod p");
    return pow(a, p - 2);
  }
};

inline bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

using ModRow = std::vector<std::int64_t>;

// Null space of the r x c matrix m over F_p (basis rows).
inline std::vector<ModRow> nullspace_mod(std::vector<ModRow> m, std::size_t c, const ModP& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0)
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[row], m[piv]);
    std::int64_t inv = f.inv(m[row][col]);
    for (auto& x : m[row])
      x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != row && m[i][col] != 0) {
        std::int64_t s = m[i][col];
        for (std::size_t j = 0; j < c; ++j)
          m[i][j] = f.norm(m[i][j] - s * m[row][j]);
      }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(c, false);
  for (std::size_t p : pivots)
    is_pivot[p] = true;
  std::vector<ModRow> basis;
  for (std::size_t free = 0; free < c; ++free) {
    if (is_pivot[free])
      continue;
    ModRow x(c, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = f.norm(-m[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Smallest prime p = 1 mod e exceeding lower.
inline std::int64_t dixon_prime(int e, std::int64_t lower) {
  std::int64_t p = (lower / e + 1) * e + 1;
  while (!is_prime(p))
    p += e;
  return p;
}

inline std::int64_t primitive_root_of_unity(const ModP& f, int e) {
  std::vector<int> factors = prime_factors(static_cast<int>(f.p - 1));
  for (std::int64_t g = 2; g < f.p; ++g) {
    bool generator = true;
    for (int q : factors)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        generator = false;
        break;
      }
    if (generator)
      return f.pow(g, (f.p - 1) / e);
  }
  throw InternalMismatch("no primitive root mod p");
}

// Compare rows by their values lifted to a common order.
inline int compare_rows(const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    int c = canonical_compare(a[k], b[k]);
    if (c != 0)
      return c;
  }
  return 0;
}

} // namespace impl

inline CharacterTable character_table(const Group& g, int bound = kDefaultGroupBound) {
  if (g.order() > bound)
    throw BoundExceeded("character_table: |G| = " + std::to_string(g.order()) +
                        " exceeds bound " + std::to_string(bound));
  CharacterTable tab;
  tab.group = g;
  tab.classes = conjugacy_classes(g);
  tab.class_of = class_index(g, tab.classes);
  const auto& classes = tab.classes;
  std::size_t r = classes.size();
  int n = g.order();
  int e = g.exponent();
  auto a = class_multiplication_coefficients(g, classes, tab.class_of);

  impl::ModP f{impl::dixon_prime(e, 4LL * n)};

  // T_j with (T_j)_{ik} = a_{ijk}: T_j w = w_j w for every central character w
  std::vector<std::vector<impl::ModRow>> subspaces{{}};
  for (std::size_t i = 0; i < r; ++i) {
    impl::ModRow v(r, 0);
    v[i] = 1;
    subspaces[0].push_back(v);
  }
  for (std::size_t j = 1; j < r && subspaces.size() < r; ++j) {
    std::vector<std::vector<impl::ModRow>> next;
    for (auto& basis : subspaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::size_t d = basis.size();
      // images T_j b for each basis vector b
      std::vector<impl::ModRow> img(d, impl::ModRow(r, 0));
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t i = 0; i < r; ++i) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < r; ++k)
            s += a[i][j][k] * basis[b][k] % f.p;
          img[b][i] = f.norm(s);
        }
      std::size_t found = 0;
      for (std::int64_t lam = 0; lam < f.p && found < d; ++lam) {
        // coefficients c with sum_b c_b (T_j - lam) b = 0
        std::vector<impl::ModRow> sys(r, impl::ModRow(d, 0));
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t i = 0; i < r; ++i)
            sys[i][b] = f.norm(img[b][i] - lam * basis[b][i]);
        auto ker = impl::nullspace_mod(sys, d, f);
        if (ker.empty())
          continue;
        std::vector<impl::ModRow> eig;
        for (const auto& c : ker) {
          impl::ModRow v(r, 0);
          for (std::size_t b = 0; b < d; ++b)
            for (std::size_t i = 0; i < r; ++i)
              v[i] = f.norm(v[i] + c[b] * basis[b][i]);
          eig.push_back(std::move(v));
        }
        found += eig.size();
        next.push_back(std::move(eig));
      }
      if (found != d)
        throw InternalMismatch("class matrices not diagonalizable mod p");
    }
    subspaces = std::move(next);
  }
  if (subspaces.size() != r)
    throw InternalMismatch("class sums failed to separate central characters");

  // power map: pow_class[k][t] = class of g_k^t
  std::vector<std::vector<int>> pow_class(r, std::vector<int>(e));
  for (std::size_t k = 0; k < r; ++k) {
    int x = 0;
    for (int t = 0; t < e; ++t) {
      pow_class[k][t] = tab.class_of[x];
      x = g.mul(x, classes[k].representative);
    }
  }
  std::int64_t z = impl::primitive_root_of_unity(f, e);

  std::vector<std::vector<CycloNumber>> rows;
  std::vector<int> degrees;
  for (const auto& sp : subspaces) {
    impl::ModRow w = sp[0];
    if (w[0] == 0)
      throw InternalMismatch("central character vanishes on the identity class");
    std::int64_t s0 = f.inv(w[0]);
    for (auto& x : w)
      x = f.mul(x, s0);
    // sum_k w_k w_{k*} / |C_k| = |G| / chi(1)^2
    std::int64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      int kstar = tab.class_of[g.inv(classes[k].representative)];
      s = f.norm(s + f.mul(f.mul(w[k], w[kstar]), f.inv(classes[k].size())));
    }
    std::int64_t d2 = f.mul(n % f.p, f.inv(s));
    int d = 0;
    for (int c = 1; c * c <= n; ++c)
      if (f.norm(static_cast<std::int64_t>(c) * c) == d2) {
        d = c;
        break;
      }
    if (d == 0)
      throw InternalMismatch("no integral degree for a central character");
    impl::ModRow chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = f.mul(f.mul(d, w[k]), f.inv(classes[k].size()));
    std::int64_t inv_e = f.inv(e);
    std::vector<CycloNumber> row(r);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<CycloNumber::Term> terms;
      for (int l = 0; l < e; ++l) {
        std::int64_t m = 0;
        for (int t = 0; t < e; ++t)
          m = f.norm(m + f.mul(chi[pow_class[k][t]], f.pow(z, (static_cast<std::int64_t>(e) - l) * t % e)));
        m = f.mul(m, inv_e);
        if (m > d)
          throw InternalMismatch("eigenvalue multiplicity exceeds degree");
        if (m != 0)
          terms.emplace_back(l, Rational(m));
      }
      row[k] = CycloNumber::from_terms(e, terms);
    }
    rows.push_back(std::move(row));
    degrees.push_back(d);
  }

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  auto is_trivial = [&](std::size_t i) {
    for (const auto& x : rows[i])
      if (!x.is_one())
        return false;
    return true;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty)
      return tx;
    if (degrees[x] != degrees[y])
      return degrees[x] < degrees[y];
    return impl::compare_rows(rows[x], rows[y]) < 0;
  });
  for (std::size_t i : order) {
    tab.chars.push_back(rows[i]);
    tab.degrees.push_back(degrees[i]);
  }

  // exact checks: degree sum and row orthogonality
  int sumsq = 0;
  for (int d : tab.degrees)
    sumsq += d * d;
  if (sumsq != n)
    throw InconsistentCharacters("degrees do not satisfy sum d^2 = |G|");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      CycloNumber ip;
      for (std::size_t k = 0; k < r; ++k)
        ip += (tab.chars[i][k] * tab.chars[j][k].conjugate()).scaled(classes[k].size());
      if (ip != CycloNumber(i == j ? n : 0))
        throw InconsistentCharacters("row orthogonality fails");
    }
  return tab;
}

inline nlohmann::json chartable_to_json(const CharacterTable& t) {
  nlohmann::json sizes = nlohmann::json::array(), reps = nlohmann::json::array(), chars = nlohmann::json::array();
  for (const auto& c : t.classes) {
    sizes.push_back(c.size());
    reps.push_back(c.representative);
  }
  for (const auto& row : t.chars)
    chars.push_back(vec_to_json(row));
  return {{"classes", sizes}, {"representatives", reps}, {"chars", chars}};
}

// Rebuilds a table for g from its JSON form (class data is recomputed and must
// match the stored sizes).
inline CharacterTable chartable_from_json(const Group& g, const nlohmann::json& j) {
  CharacterTable tab;
  tab.group = g;
  tab.classes = conjugacy_classes(g);
  tab.class_of = class_index(g, tab.classes);
  const auto& sizes = j.at("classes");
  if (sizes.size() != tab.classes.size())
    throw PreconditionViolated("stored table has a different class count");
  for (std::size_t k = 0; k < sizes.size(); ++k)
    if (sizes[k].get<int>() != tab.classes[k].size())
      throw PreconditionViolated("stored table has different class sizes");
  for (const auto& row : j.at("chars")) {
    tab.chars.push_back(vec_from_json(row));
    const CycloNumber& d = tab.chars.back()[0];
    if (!d.is_rational() || !d.rational_value().is_integer() || !d.rational_value().is_small())
      throw PreconditionViolated("stored degree is not an integer");
    tab.degrees.push_back(static_cast<int>(d.rational_value().num()));
  }
  if (tab.chars.size() != tab.classes.size())
    throw PreconditionViolated("stored table is not square");
  return tab;
}

} // namespace hopfcat

#endif
