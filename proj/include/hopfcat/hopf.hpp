// Finite-dimensional quasitriangular Hopf algebras by structure constants:
// the Drinfeld double D(kG), the group algebra kG with R = 1 (x) 1, integrals,
// the Drinfeld map, central and character-ring idempotents, and the Hopf
// conjugacy classes C^j.
//
// Elements of A and functionals on A are both coefficient vectors (Vec), the
// latter on the dual basis.

#ifndef HOPFCAT_HOPF_HPP_
#define HOPFCAT_HOPF_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "json_io.hpp"
#include "linalg.hpp"

namespace hopfcat {

using SparseVec = std::vector<std::pair<int, CycloNumber>>;

struct Term2 {
  int i;
  int j;
  CycloNumber c;
};

constexpr int kDefaultMaxAlgebraDim = 400;

namespace impl {

// Sorted, merged, zero-free.
inline SparseVec normalize_sparse(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [k, c] : v) {
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.emplace_back(k, std::move(c));
    if (out.back().second.is_zero())
      out.pop_back();
  }
  return out;
}

template <class Key>
void add_to(std::map<Key, CycloNumber>& m, const Key& k, const CycloNumber& c) {
  if (c.is_zero())
    return;
  auto [it, fresh] = m.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      m.erase(it);
  }
}

} // namespace impl

class QTAlgebra {
public:
  struct Data {
    std::string name;
    int dim = 0;
    std::vector<SparseVec> mult;             // index i*dim + j: e_i e_j
    Vec unit;
    std::vector<std::vector<Term2>> comult;  // Delta e_i
    Vec counit;
    std::vector<SparseVec> antipode;         // S e_i
    std::vector<Term2> rmatrix;
    std::vector<std::string> labels;
  };

  explicit QTAlgebra(Data d, bool verify = true) : d_(std::move(d)) {
    if (d_.labels.empty())
      for (int i = 0; i < d_.dim; ++i)
        d_.labels.push_back("e" + std::to_string(i));
    compute_monodromy();
    if (verify)
      verify_axioms();
  }

  const std::string& name() const { return d_.name; }
  int dim() const { return d_.dim; }
  const std::vector<std::string>& labels() const { return d_.labels; }

  const SparseVec& product(int i, int j) const { return d_.mult[static_cast<std::size_t>(i) * d_.dim + j]; }
  const Vec& one() const { return d_.unit; }
  const Vec& counit() const { return d_.counit; }
  const std::vector<Term2>& coproduct(int i) const { return d_.comult[i]; }
  const SparseVec& antipode_of(int i) const { return d_.antipode[i]; }
  const std::vector<Term2>& rmatrix() const { return d_.rmatrix; }
  const std::vector<Term2>& monodromy() const { return q_; }

  Vec basis(int i) const {
    Vec v(d_.dim);
    v[i] = CycloNumber(1);
    return v;
  }

  Vec multiply(const Vec& a, const Vec& b) const {
    Vec r(d_.dim);
    std::vector<int> nz;
    for (int j = 0; j < d_.dim; ++j)
      if (!b[j].is_zero())
        nz.push_back(j);
    for (int i = 0; i < d_.dim; ++i) {
      if (a[i].is_zero())
        continue;
      for (int j : nz) {
        const SparseVec& p = product(i, j);
        if (p.empty())
          continue;
        CycloNumber c = a[i] * b[j];
        for (const auto& [k, m] : p)
          r[k] += c * m;
      }
    }
    return r;
  }

  CycloNumber epsilon(const Vec& a) const { return dot(d_.counit, a); }

  static CycloNumber evaluate(const Vec& f, const Vec& a) { return dot(f, a); }

  Vec antipode(const Vec& a) const {
    Vec r(d_.dim);
    for (int i = 0; i < d_.dim; ++i)
      if (!a[i].is_zero())
        for (const auto& [k, c] : d_.antipode[i])
          r[k] += a[i] * c;
    return r;
  }

  Vec antipode_inverse(const Vec& a) const {
    if (!s_inverse_) {
      std::vector<Vec> rows(d_.dim, Vec(d_.dim));
      for (int i = 0; i < d_.dim; ++i)
        for (const auto& [k, c] : d_.antipode[i])
          rows[k][i] = c;
      s_inverse_ = std::make_shared<LinearSolver>(rows);
      if (s_inverse_->singular())
        throw InvariantViolation("antipode is not invertible");
    }
    return s_inverse_->solve(a);
  }

  // (fg)(a) = f(a_1) g(a_2)
  Vec convolve(const Vec& f, const Vec& g) const {
    Vec r(d_.dim);
    for (int i = 0; i < d_.dim; ++i)
      for (const Term2& t : d_.comult[i])
        if (!f[t.i].is_zero() && !g[t.j].is_zero())
          r[i] += t.c * f[t.i] * g[t.j];
    return r;
  }

  // a <- f = f(a_1) a_2
  Vec harpoon_left(const Vec& a, const Vec& f) const {
    Vec r(d_.dim);
    for (int i = 0; i < d_.dim; ++i)
      if (!a[i].is_zero())
        for (const Term2& t : d_.comult[i])
          if (!f[t.i].is_zero())
            r[t.j] += a[i] * t.c * f[t.i];
    return r;
  }

  // f -> a = a_1 f(a_2)
  Vec harpoon_right(const Vec& f, const Vec& a) const {
    Vec r(d_.dim);
    for (int i = 0; i < d_.dim; ++i)
      if (!a[i].is_zero())
        for (const Term2& t : d_.comult[i])
          if (!f[t.j].is_zero())
            r[t.i] += a[i] * t.c * f[t.j];
    return r;
  }

  // s(f) = f o S
  Vec dual_antipode(const Vec& f) const {
    Vec r(d_.dim);
    for (int i = 0; i < d_.dim; ++i)
      for (const auto& [k, c] : d_.antipode[i])
        if (!f[k].is_zero())
          r[i] += c * f[k];
    return r;
  }

  // phi_R(f) = (f (x) id)(Q)
  Vec drinfeld_map(const Vec& f) const {
    Vec r(d_.dim);
    for (const Term2& t : q_)
      if (!f[t.i].is_zero())
        r[t.j] += t.c * f[t.i];
    return r;
  }

  // The companion map S phi_R s.
  Vec drinfeld_map_r(const Vec& f) const { return antipode(drinfeld_map(dual_antipode(f))); }

  // a_1 l S(a_2)
  Vec adjoint_left(const Vec& a, const Vec& l) const {
    Vec r(d_.dim);
    for (int i = 0; i < d_.dim; ++i)
      if (!a[i].is_zero())
        for (const Term2& t : d_.comult[i]) {
          Vec x = multiply(multiply(basis(t.i), l), antipode(basis(t.j)));
          axpy(r, a[i] * t.c, x);
        }
    return r;
  }

  // S(a_1) l a_2
  Vec adjoint_right(const Vec& a, const Vec& l) const {
    Vec r(d_.dim);
    for (int i = 0; i < d_.dim; ++i)
      if (!a[i].is_zero())
        for (const Term2& t : d_.comult[i]) {
          Vec x = multiply(multiply(antipode(basis(t.i)), l), basis(t.j));
          axpy(r, a[i] * t.c, x);
        }
    return r;
  }

  // Delta(a) as a dim x dim coefficient matrix (row = first factor).
  std::vector<Vec> coproduct_matrix(const Vec& a) const {
    std::vector<Vec> m(d_.dim, Vec(d_.dim));
    for (int i = 0; i < d_.dim; ++i)
      if (!a[i].is_zero())
        for (const Term2& t : d_.comult[i])
          m[t.i][t.j] += a[i] * t.c;
    return m;
  }

  void verify_axioms() const;

  nlohmann::json to_json() const {
    nlohmann::json mult = nlohmann::json::array(), comult = nlohmann::json::array(),
                   anti = nlohmann::json::array(), r = nlohmann::json::array();
    for (int i = 0; i < d_.dim; ++i)
      for (int j = 0; j < d_.dim; ++j)
        for (const auto& [k, c] : product(i, j))
          mult.push_back({i, j, k, cyclo_to_json(c)});
    for (int i = 0; i < d_.dim; ++i)
      for (const Term2& t : d_.comult[i])
        comult.push_back({i, t.i, t.j, cyclo_to_json(t.c)});
    for (int i = 0; i < d_.dim; ++i)
      for (const auto& [k, c] : d_.antipode[i])
        anti.push_back({i, k, cyclo_to_json(c)});
    for (const Term2& t : d_.rmatrix)
      r.push_back({t.i, t.j, cyclo_to_json(t.c)});
    return {{"name", d_.name}, {"dim", d_.dim}, {"labels", d_.labels}, {"mult", mult},
            {"unit", vec_to_json(d_.unit)}, {"comult", comult}, {"counit", vec_to_json(d_.counit)},
            {"antipode", anti}, {"R", r}};
  }

private:
  Data d_;
  std::vector<Term2> q_;
  mutable std::shared_ptr<LinearSolver> s_inverse_;

  using Key2 = std::pair<int, int>;
  using Key3 = std::tuple<int, int, int>;

  SparseVec mul_sparse(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b)
        for (const auto& [k, m] : product(i, j))
          out.emplace_back(k, x * y * m);
    return impl::normalize_sparse(std::move(out));
  }

  std::map<Key2, CycloNumber> mul_tensor2(const std::map<Key2, CycloNumber>& a,
                                          const std::map<Key2, CycloNumber>& b) const {
    std::map<Key2, CycloNumber> out;
    for (const auto& [ka, x] : a)
      for (const auto& [kb, y] : b) {
        const SparseVec& p1 = product(ka.first, kb.first);
        if (p1.empty())
          continue;
        const SparseVec& p2 = product(ka.second, kb.second);
        for (const auto& [k1, m1] : p1)
          for (const auto& [k2, m2] : p2)
            impl::add_to(out, Key2{k1, k2}, x * y * m1 * m2);
      }
    return out;
  }

  std::map<Key3, CycloNumber> mul_tensor3(const std::map<Key3, CycloNumber>& a,
                                          const std::map<Key3, CycloNumber>& b) const {
    std::map<Key3, CycloNumber> out;
    for (const auto& [ka, x] : a)
      for (const auto& [kb, y] : b) {
        const SparseVec& p1 = product(std::get<0>(ka), std::get<0>(kb));
        if (p1.empty())
          continue;
        const SparseVec& p2 = product(std::get<1>(ka), std::get<1>(kb));
        if (p2.empty())
          continue;
        const SparseVec& p3 = product(std::get<2>(ka), std::get<2>(kb));
        for (const auto& [k1, m1] : p1)
          for (const auto& [k2, m2] : p2)
            for (const auto& [k3, m3] : p3)
              impl::add_to(out, Key3{k1, k2, k3}, x * y * m1 * m2 * m3);
      }
    return out;
  }

  std::map<Key2, CycloNumber> as_map(const std::vector<Term2>& t) const {
    std::map<Key2, CycloNumber> m;
    for (const Term2& x : t)
      impl::add_to(m, Key2{x.i, x.j}, x.c);
    return m;
  }

  SparseVec sparse_of(const Vec& v) const {
    SparseVec s;
    for (int i = 0; i < d_.dim; ++i)
      if (!v[i].is_zero())
        s.emplace_back(i, v[i]);
    return s;
  }

  void compute_monodromy() {
    // Q = R_21 R
    std::map<Key2, CycloNumber> r21, r;
    for (const Term2& t : d_.rmatrix) {
      impl::add_to(r21, Key2{t.j, t.i}, t.c);
      impl::add_to(r, Key2{t.i, t.j}, t.c);
    }
    for (const auto& [k, c] : mul_tensor2(r21, r))
      q_.push_back(Term2{k.first, k.second, c});
  }
};

inline void QTAlgebra::verify_axioms() const {
  const int n = d_.dim;
  auto fail = [&](const std::string& what) {
    throw InvariantViolation(d_.name + ": " + what);
  };
  if (static_cast<int>(d_.mult.size()) != n * n || static_cast<int>(d_.comult.size()) != n ||
      static_cast<int>(d_.antipode.size()) != n || static_cast<int>(d_.unit.size()) != n ||
      static_cast<int>(d_.counit.size()) != n)
    fail("structure tensors have the wrong shape");
  SparseVec unit = sparse_of(d_.unit);

  for (int i = 0; i < n; ++i) {
    SparseVec ei{{i, CycloNumber(1)}};
    if (mul_sparse(unit, ei) != ei || mul_sparse(ei, unit) != ei)
      fail("unit axiom fails");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SparseVec& ij = product(i, j);
      for (int k = 0; k < n; ++k) {
        SparseVec left = mul_sparse(ij, SparseVec{{k, CycloNumber(1)}});
        SparseVec right = mul_sparse(SparseVec{{i, CycloNumber(1)}}, product(j, k));
        if (left.size() != right.size())
          fail("associativity fails");
        for (std::size_t t = 0; t < left.size(); ++t)
          if (left[t].first != right[t].first || left[t].second != right[t].second)
            fail("associativity fails");
      }
    }

  // coalgebra: coassociativity and counit
  for (int i = 0; i < n; ++i) {
    std::map<Key3, CycloNumber> l, r;
    for (const Term2& t : d_.comult[i]) {
      for (const Term2& u : d_.comult[t.i])
        impl::add_to(l, Key3{u.i, u.j, t.j}, t.c * u.c);
      for (const Term2& u : d_.comult[t.j])
        impl::add_to(r, Key3{t.i, u.i, u.j}, t.c * u.c);
    }
    if (l != r)
      fail("coassociativity fails");
    Vec a(n), b(n);
    for (const Term2& t : d_.comult[i]) {
      a[t.j] += d_.counit[t.i] * t.c;
      b[t.i] += d_.counit[t.j] * t.c;
    }
    if (!vec_equal(a, basis(i)) || !vec_equal(b, basis(i)))
      fail("counit axiom fails");
  }

  // bialgebra compatibility
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::map<Key2, CycloNumber> lhs;
      for (const auto& [k, c] : product(i, j))
        for (const Term2& t : d_.comult[k])
          impl::add_to(lhs, Key2{t.i, t.j}, c * t.c);
      if (lhs != mul_tensor2(as_map(d_.comult[i]), as_map(d_.comult[j])))
        fail("coproduct is not multiplicative");
      CycloNumber e;
      for (const auto& [k, c] : product(i, j))
        e += c * d_.counit[k];
      if (e != d_.counit[i] * d_.counit[j])
        fail("counit is not multiplicative");
    }
  {
    std::map<Key2, CycloNumber> d1, uu;
    for (const auto& [k, c] : unit)
      for (const Term2& t : d_.comult[k])
        impl::add_to(d1, Key2{t.i, t.j}, c * t.c);
    for (const auto& [a, x] : unit)
      for (const auto& [b, y] : unit)
        impl::add_to(uu, Key2{a, b}, x * y);
    if (d1 != uu || epsilon(d_.unit) != CycloNumber(1))
      fail("unit is not grouplike");
  }

  // antipode: S(a_1) a_2 = eps(a) 1 = a_1 S(a_2)
  for (int i = 0; i < n; ++i) {
    Vec l(n), r(n);
    for (const Term2& t : d_.comult[i]) {
      for (const auto& [k, c] : d_.antipode[t.i])
        for (const auto& [m, x] : product(k, t.j))
          l[m] += t.c * c * x;
      for (const auto& [k, c] : d_.antipode[t.j])
        for (const auto& [m, x] : product(t.i, k))
          r[m] += t.c * c * x;
    }
    Vec expect = scale(d_.unit, d_.counit[i]);
    if (!vec_equal(l, expect) || !vec_equal(r, expect))
      fail("antipode axiom fails");
  }

  // R-matrix: R Delta(x) = Delta^cop(x) R, (Delta (x) id)R = R13 R23,
  // (id (x) Delta)R = R13 R12, (eps (x) id)R = 1 = (id (x) eps)R
  auto r2 = as_map(d_.rmatrix);
  for (int i = 0; i < n; ++i) {
    std::map<Key2, CycloNumber> cop;
    for (const Term2& t : d_.comult[i])
      impl::add_to(cop, Key2{t.j, t.i}, t.c);
    if (mul_tensor2(r2, as_map(d_.comult[i])) != mul_tensor2(cop, r2))
      fail("R does not intertwine Delta and Delta^cop");
  }
  std::map<Key3, CycloNumber> r13, r23, r12, dl, dr;
  for (const Term2& t : d_.rmatrix) {
    for (const auto& [k, c] : unit) {
      impl::add_to(r13, Key3{t.i, k, t.j}, t.c * c);
      impl::add_to(r23, Key3{k, t.i, t.j}, t.c * c);
      impl::add_to(r12, Key3{t.i, t.j, k}, t.c * c);
    }
    for (const Term2& u : d_.comult[t.i])
      impl::add_to(dl, Key3{u.i, u.j, t.j}, t.c * u.c);
    for (const Term2& u : d_.comult[t.j])
      impl::add_to(dr, Key3{t.i, u.i, u.j}, t.c * u.c);
  }
  if (dl != mul_tensor3(r13, r23))
    fail("(Delta x id)R != R13 R23");
  if (dr != mul_tensor3(r13, r12))
    fail("(id x Delta)R != R13 R12");
  Vec el(n), er(n);
  for (const Term2& t : d_.rmatrix) {
    el[t.j] += d_.counit[t.i] * t.c;
    er[t.i] += d_.counit[t.j] * t.c;
  }
  if (!vec_equal(el, d_.unit) || !vec_equal(er, d_.unit))
    fail("counit condition on R fails");
}

// ---------------------------------------------------------------------------
// instances

// D(kG) on the basis p_g |x| h, index g*|G| + h.  Coproduct
//   Delta(p_g |x| h) = sum_{ab=g} (p_b |x| h) (x) (p_a |x| h)
// is the ordering compatible with the product rule and R below.
inline QTAlgebra build_double(const Group& g, int max_dim = kDefaultMaxAlgebraDim) {
  const int n = g.order();
  const int dim = n * n;
  if (dim > max_dim)
    throw BoundExceeded("build_double: dim " + std::to_string(dim) + " exceeds bound " +
                        std::to_string(max_dim));
  auto idx = [n](int a, int b) { return a * n + b; };
  QTAlgebra::Data d;
  d.name = "D(" + g.name() + ")";
  d.dim = dim;
  d.mult.resize(static_cast<std::size_t>(dim) * dim);
  for (int g1 = 0; g1 < n; ++g1)
    for (int h1 = 0; h1 < n; ++h1)
      for (int h2 = 0; h2 < n; ++h2) {
        // (p_g1 h1)(p_g2 h2) nonzero iff g1 = h1 g2 h1^-1
        int g2 = g.conj(g.inv(h1), g1);
        d.mult[static_cast<std::size_t>(idx(g1, h1)) * dim + idx(g2, h2)] = {{idx(g1, g.mul(h1, h2)), CycloNumber(1)}};
      }
  d.unit.assign(dim, CycloNumber());
  for (int x = 0; x < n; ++x)
    d.unit[idx(x, 0)] = CycloNumber(1);
  d.comult.resize(dim);
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h)
      for (int a = 0; a < n; ++a) {
        int b = g.mul(g.inv(a), x);  // ab = x
        d.comult[idx(x, h)].push_back(Term2{idx(b, h), idx(a, h), CycloNumber(1)});
      }
  d.counit.assign(dim, CycloNumber());
  for (int h = 0; h < n; ++h)
    d.counit[idx(0, h)] = CycloNumber(1);
  d.antipode.resize(dim);
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h)
      d.antipode[idx(x, h)] = {{idx(g.conj(g.inv(h), g.inv(x)), g.inv(h)), CycloNumber(1)}};
  // R = sum_x (1 |x| x) (x) (p_x |x| e)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      d.rmatrix.push_back(Term2{idx(y, x), idx(x, 0), CycloNumber(1)});
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h)
      d.labels.push_back("p" + std::to_string(x) + "|" + std::to_string(h));
  return QTAlgebra(std::move(d));
}

// kG with R = 1 (x) 1.
inline QTAlgebra build_triangular(const Group& g, int max_dim = kDefaultMaxAlgebraDim) {
  const int n = g.order();
  if (n > max_dim)
    throw BoundExceeded("build_triangular: dim " + std::to_string(n) + " exceeds bound " +
                        std::to_string(max_dim));
  QTAlgebra::Data d;
  d.name = "k" + g.name();
  d.dim = n;
  d.mult.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      d.mult[static_cast<std::size_t>(a) * n + b] = {{g.mul(a, b), CycloNumber(1)}};
  d.unit.assign(n, CycloNumber());
  d.unit[0] = CycloNumber(1);
  d.comult.resize(n);
  for (int a = 0; a < n; ++a)
    d.comult[a] = {Term2{a, a, CycloNumber(1)}};
  d.counit.assign(n, CycloNumber(1));
  d.antipode.resize(n);
  for (int a = 0; a < n; ++a)
    d.antipode[a] = {{g.inv(a), CycloNumber(1)}};
  d.rmatrix = {Term2{0, 0, CycloNumber(1)}};
  for (int a = 0; a < n; ++a)
    d.labels.push_back("g" + std::to_string(a));
  return QTAlgebra(std::move(d));
}

// ---------------------------------------------------------------------------
// solvers

// Kernel of a homogeneous system whose rows arrive lazily.  Once the rank
// leaves a one-dimensional kernel, the candidate is tested against the whole
// system by `satisfies`, which lets large, very redundant systems stop early.
inline std::vector<Vec> solve_homogeneous(std::size_t ncols,
                                          const std::function<void(const std::function<bool(Vec)>&)>& rows,
                                          const std::function<bool(const Vec&)>& satisfies) {
  Echelon e(ncols);
  std::vector<Vec> found;
  bool done = false;
  std::size_t tested_rank = ncols + 1;
  rows([&](Vec row) {
    if (done)
      return false;
    if (e.add(std::move(row)) && e.rank() + 1 == ncols && tested_rank != e.rank()) {
      tested_rank = e.rank();
      Vec cand = e.kernel()[0];
      if (satisfies(cand)) {
        found = {cand};
        done = true;
        return false;
      }
    }
    if (e.full()) {
      done = true;
      return false;
    }
    return true;
  });
  if (done && !found.empty())
    return found;
  return e.kernel();
}

struct Integrals {
  Vec lambda;  // idempotent two-sided integral of A
  Vec t;       // idempotent integral of A*
};

inline Integrals integrals(const QTAlgebra& a) {
  const int n = a.dim();
  Integrals out;
  auto left_integral = [&](const Vec& x) {
    for (int i = 0; i < n; ++i)
      if (!vec_equal(a.multiply(a.basis(i), x), scale(x, a.counit()[i])))
        return false;
    return true;
  };
  auto ker = solve_homogeneous(
      n,
      [&](const std::function<bool(Vec)>& emit) {
        // coefficient of e_k in e_i x - eps(e_i) x
        for (int i = 0; i < n; ++i) {
          std::vector<Vec> rows(n, Vec(n));
          for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : a.product(i, j))
              rows[k][j] += c;
          for (int k = 0; k < n; ++k) {
            rows[k][k] -= a.counit()[i];
            if (!is_zero_vec(rows[k]) && !emit(std::move(rows[k])))
              return;
          }
        }
      },
      left_integral);
  if (ker.size() != 1)
    throw NoIntegral(a.name() + ": left integral space has dimension " + std::to_string(ker.size()));
  CycloNumber e = a.epsilon(ker[0]);
  if (e.is_zero())
    throw NoIntegral(a.name() + ": integral is annihilated by the counit (not semisimple)");
  out.lambda = scale(ker[0], e.inverse());
  for (int i = 0; i < n; ++i)
    if (!vec_equal(a.multiply(out.lambda, a.basis(i)), scale(out.lambda, a.counit()[i])))
      throw NoIntegral(a.name() + ": left integral is not a right integral");

  // t: (id (x) t)Delta(x) = t(x) 1
  auto dual_integral = [&](const Vec& t) {
    for (int i = 0; i < n; ++i) {
      Vec lhs(n);
      for (const Term2& u : a.coproduct(i))
        lhs[u.i] += u.c * t[u.j];
      if (!vec_equal(lhs, scale(a.one(), t[i])))
        return false;
    }
    return true;
  };
  auto tker = solve_homogeneous(
      n,
      [&](const std::function<bool(Vec)>& emit) {
        for (int i = 0; i < n; ++i) {
          std::vector<Vec> rows(n, Vec(n));
          for (const Term2& u : a.coproduct(i))
            rows[u.i][u.j] += u.c;
          for (int j = 0; j < n; ++j) {
            rows[j][i] -= a.one()[j];
            if (!is_zero_vec(rows[j]) && !emit(std::move(rows[j])))
              return;
          }
        }
      },
      dual_integral);
  if (tker.size() != 1)
    throw NoIntegral(a.name() + ": dual integral space has dimension " + std::to_string(tker.size()));
  CycloNumber t1 = dot(tker[0], a.one());
  if (t1.is_zero())
    throw NoIntegral(a.name() + ": dual integral vanishes on 1 (not cosemisimple)");
  out.t = scale(tker[0], t1.inverse());
  return out;
}

// E_i = chi_i(1) (Lambda <- chi_i o S), checked to be a complete family of
// orthogonal central idempotents with chi_i(E_j) = delta_ij chi_i(1).
inline std::vector<Vec> central_idempotents(const QTAlgebra& a, const Vec& lambda,
                                            const std::vector<Vec>& chars) {
  const int n = a.dim();
  std::vector<Vec> e;
  for (const Vec& chi : chars)
    e.push_back(scale(a.harpoon_left(lambda, a.dual_antipode(chi)), dot(chi, a.one())));
  Vec total(n);
  for (std::size_t i = 0; i < e.size(); ++i) {
    total = add(total, e[i]);
    for (std::size_t j = 0; j < e.size(); ++j) {
      Vec p = a.multiply(e[i], e[j]);
      if (!vec_equal(p, i == j ? e[i] : Vec(n)))
        throw InconsistentCharacters("central idempotents are not orthogonal idempotents");
      CycloNumber v = dot(chars[i], e[j]);
      if (v != (i == j ? dot(chars[i], a.one()) : CycloNumber()))
        throw InconsistentCharacters("chi_i(E_j) != delta_ij chi_i(1)");
    }
    for (int k = 0; k < n; ++k)
      if (!vec_equal(a.multiply(e[i], a.basis(k)), a.multiply(a.basis(k), e[i])))
        throw InconsistentCharacters("idempotent is not central");
  }
  if (!vec_equal(total, a.one()))
    throw InconsistentCharacters("central idempotents do not sum to 1");
  return e;
}

inline Subspace compute_K_A(const QTAlgebra& a) {
  std::vector<Vec> images;
  for (int i = 0; i < a.dim(); ++i)
    images.push_back(a.drinfeld_map(a.basis(i)));
  return Subspace::span(a.dim(), images);
}

inline bool is_factorizable(const QTAlgebra& a) {
  return compute_K_A(a).dim() == static_cast<std::size_t>(a.dim());
}

// Primitive idempotents F_j of the character ring C(A) and the partition
// blocks[j] = {s : E_s occurs in phi_R(F_j)}.
struct CharRingIdempotents {
  std::vector<Vec> f;
  std::vector<std::vector<int>> blocks;
  bool factorizable = false;
};

namespace impl {

inline std::vector<std::vector<int>> drinfeld_blocks(const QTAlgebra& a, const std::vector<Vec>& f,
                                                     const std::vector<Vec>& chars,
                                                     const std::vector<Vec>& e) {
  std::vector<std::vector<int>> blocks;
  for (const Vec& fj : f) {
    Vec z = a.drinfeld_map(fj);
    Vec rebuilt(a.dim());
    std::vector<int> block;
    for (std::size_t s = 0; s < chars.size(); ++s) {
      CycloNumber c = dot(chars[s], z) / dot(chars[s], a.one());
      if (c.is_one()) {
        block.push_back(static_cast<int>(s));
        rebuilt = add(rebuilt, e[s]);
      } else if (!c.is_zero()) {
        throw InternalMismatch("phi_R(F_j) is not a sum of central idempotents");
      }
    }
    if (!vec_equal(rebuilt, z))
      throw InternalMismatch("phi_R(F_j) is not a sum of central idempotents");
    blocks.push_back(block);
  }
  return blocks;
}

} // namespace impl

inline CharRingIdempotents char_ring_idempotents(const QTAlgebra& a, const std::vector<Vec>& chars,
                                                 const std::vector<Vec>& e, const Vec& t) {
  const int n = a.dim();
  CharRingIdempotents out;
  std::vector<Vec> rows(n, Vec(n));
  for (int i = 0; i < n; ++i) {
    Vec img = a.drinfeld_map(a.basis(i));
    for (int j = 0; j < n; ++j)
      rows[j][i] = img[j];
  }
  LinearSolver phi(rows);
  if (!phi.singular()) {
    out.factorizable = true;
    for (const Vec& ej : e)
      out.f.push_back(phi.solve(ej));
  } else {
    // Grouplike basis: the dual basis consists of orthogonal convolution
    // idempotents, so C(A) is the algebra of functions constant on the blocks
    // of basis elements that no character separates.
    for (int i = 0; i < n; ++i) {
      const auto& d = a.coproduct(i);
      if (d.size() != 1 || d[0].i != i || d[0].j != i || !d[0].c.is_one())
        throw NotFactorizable(a.name() + ": phi_R is singular and the basis is not grouplike");
    }
    std::vector<int> block_of(n, -1);
    std::vector<std::vector<int>> members;
    for (int i = 0; i < n; ++i) {
      if (block_of[i] >= 0)
        continue;
      block_of[i] = static_cast<int>(members.size());
      members.push_back({i});
      for (int j = i + 1; j < n; ++j) {
        if (block_of[j] >= 0)
          continue;
        bool same = true;
        for (const Vec& chi : chars)
          if (chi[i] != chi[j]) {
            same = false;
            break;
          }
        if (same) {
          block_of[j] = block_of[i];
          members.back().push_back(j);
        }
      }
    }
    if (members.size() != chars.size())
      throw InconsistentCharacters("character ring dimension differs from the number of characters");
    for (const auto& m : members) {
      Vec f(n);
      for (int i : m)
        f[i] = CycloNumber(1);
      out.f.push_back(std::move(f));
    }
  }
  // F_0 = t
  auto it = std::find_if(out.f.begin(), out.f.end(), [&](const Vec& f) { return vec_equal(f, t); });
  if (it == out.f.end())
    throw InternalMismatch("the dual integral is not among the character-ring idempotents");
  std::rotate(out.f.begin(), it, it + 1);
  if (!out.factorizable)
    std::sort(out.f.begin() + 1, out.f.end(), [](const Vec& x, const Vec& y) {
      auto first = [](const Vec& v) {
        std::size_t i = 0;
        while (v[i].is_zero())
          ++i;
        return i;
      };
      return first(x) < first(y);
    });
  // orthogonality under convolution, completeness
  Vec total(n);
  for (std::size_t i = 0; i < out.f.size(); ++i) {
    total = add(total, out.f[i]);
    for (std::size_t j = i; j < out.f.size(); ++j)
      if (!vec_equal(a.convolve(out.f[i], out.f[j]), i == j ? out.f[i] : Vec(n)))
        throw InternalMismatch("character-ring idempotents are not orthogonal");
  }
  if (!vec_equal(total, a.counit()))
    throw InternalMismatch("character-ring idempotents do not sum to the counit");
  out.blocks = impl::drinfeld_blocks(a, out.f, chars, e);
  return out;
}

struct HopfClass {
  Subspace space;  // C^j = Lambda <- F_j A*
  Vec sum;         // C_j = Lambda <- dim(A) F_j
};

inline HopfClass conjugacy_class(const QTAlgebra& a, const Vec& lambda, const Vec& fj) {
  HopfClass c;
  std::vector<Vec> gens;
  for (int k = 0; k < a.dim(); ++k)
    gens.push_back(a.harpoon_left(lambda, a.convolve(fj, a.basis(k))));
  c.space = Subspace::span(a.dim(), gens);
  c.sum = a.harpoon_left(lambda, scale(fj, CycloNumber(a.dim())));
  return c;
}

} // namespace hopfcat

#endif
