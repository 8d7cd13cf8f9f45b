// Left normal coideal subalgebras: the C(M,H,lambda) family of D(kG), group
// algebras kN in kG, integrals, products, intersections, left kernels.

#ifndef HOPFCAT_COIDEAL_HPP_
#define HOPFCAT_COIDEAL_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hopf.hpp"
#include "linalg.hpp"

namespace hopfcat {

// lambda : M x H -> mu_order, stored as exponents: lambda(m, h) =
// zeta_order^exps[pos(m) * |H| + pos(h)] with pos the index in members.
struct Bicharacter {
  Subgroup m;
  Subgroup h;
  int order = 1;
  std::vector<int> exps;

  int exponent(int x, int y) const {
    auto px = std::lower_bound(m.members.begin(), m.members.end(), x) - m.members.begin();
    auto py = std::lower_bound(h.members.begin(), h.members.end(), y) - h.members.begin();
    return exps[static_cast<std::size_t>(px) * h.members.size() + py];
  }
  CycloNumber value(int x, int y) const { return CycloNumber::zeta(order, exponent(x, y)); }

  bool is_trivial() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
  }

  Bicharacter inverse() const {
    Bicharacter b = *this;
    for (int& e : b.exps)
      e = (order - e) % order;
    return b;
  }

  // lambda^op(h, m) = lambda(m, h), a bicharacter on H x M
  Bicharacter op() const {
    Bicharacter b;
    b.m = h;
    b.h = m;
    b.order = order;
    b.exps.resize(exps.size());
    for (std::size_t i = 0; i < m.members.size(); ++i)
      for (std::size_t j = 0; j < h.members.size(); ++j)
        b.exps[j * m.members.size() + i] = exps[i * h.members.size() + j];
    return b;
  }

  friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
    return a.m == b.m && a.h == b.h && a.order == b.order && a.exps == b.exps;
  }
};

namespace impl {

inline Subgroup derived_subgroup(const Group& g, const Subgroup& s) {
  std::vector<int> comm;
  for (int a : s.members)
    for (int b : s.members)
      comm.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return closure(g, comm);
}

inline int abelianization_exponent(const Group& g, const Subgroup& s) {
  Subgroup d = derived_subgroup(g, s);
  int e = 1;
  for (int a : s.members) {
    int k = 1;
    for (int x = a; !d.contains(x); x = g.mul(x, a))
      ++k;
    e = std::lcm(e, k);
  }
  return e;
}

// Extends values on generators to a function s -> Z/order^width by
// f(x s_i) = f(x) + v_i; returns false if that is not well defined, which is
// exactly the failure of the assignment to define a homomorphism.
inline bool extend_hom(const Group& g, const Subgroup& s, const std::vector<int>& gens,
                       const std::vector<std::vector<int>>& gen_values, int order,
                       std::vector<std::vector<int>>& out) {
  std::size_t width = gen_values.empty() ? 0 : gen_values[0].size();
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < s.members.size(); ++i)
    pos[s.members[i]] = static_cast<int>(i);
  out.assign(s.members.size(), std::vector<int>());
  std::vector<bool> seen(s.members.size(), false);
  out[pos[0]] = std::vector<int>(width, 0);
  seen[pos[0]] = true;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = g.mul(x, gens[i]);
      std::vector<int> v = out[pos[x]];
      for (std::size_t w = 0; w < width; ++w)
        v[w] = (v[w] + gen_values[i][w]) % order;
      if (!seen[pos[y]]) {
        seen[pos[y]] = true;
        out[pos[y]] = std::move(v);
        queue.push_back(y);
      } else if (out[pos[y]] != v) {
        return false;
      }
    }
  }
  return true;
}

// All homomorphisms s -> Z/order, as value vectors over s.members.
inline std::vector<std::vector<int>> linear_characters(const Group& g, const Subgroup& s, int order) {
  std::vector<int> gens = generators(g, s);
  if (gens.empty())
    return {std::vector<int>(s.members.size(), 0)};
  std::vector<std::vector<int>> result;
  std::vector<int> assign(gens.size(), 0);
  for (;;) {
    std::vector<std::vector<int>> gv;
    for (int a : assign)
      gv.push_back({a});
    std::vector<std::vector<int>> vals;
    if (extend_hom(g, s, gens, gv, order, vals)) {
      std::vector<int> flat;
      for (const auto& v : vals)
        flat.push_back(v[0]);
      result.push_back(flat);
    }
    std::size_t k = 0;
    while (k < assign.size() && ++assign[k] == order)
      assign[k++] = 0;
    if (k == assign.size())
      break;
  }
  return result;
}

} // namespace impl

// All G-invariant bicharacters M x H -> roots of unity, sorted by exponent
// table (the trivial one first).
inline std::vector<Bicharacter> enumerate_invariant_bicharacters(const Group& g, const Subgroup& m,
                                                                 const Subgroup& h) {
  if (!is_normal(g, m) || !is_normal(g, h))
    throw PreconditionViolated("bicharacter subgroups must be normal");
  if (!commute_elementwise(g, m, h))
    throw PreconditionViolated("M and H must commute elementwise");
  int order = std::lcm(impl::abelianization_exponent(g, m), impl::abelianization_exponent(g, h));
  auto chars = impl::linear_characters(g, m, order);
  std::vector<int> hgens = generators(g, h);
  std::vector<std::size_t> assign(hgens.size(), 0);
  std::vector<Bicharacter> out;
  std::size_t nm = m.members.size(), nh = h.members.size();
  for (;;) {
    std::vector<std::vector<int>> gv;
    for (std::size_t a : assign)
      gv.push_back(chars[a]);
    std::vector<std::vector<int>> vals;  // h -> character of M
    if (hgens.empty() || impl::extend_hom(g, h, hgens, gv, order, vals)) {
      if (hgens.empty())
        vals.assign(nh, std::vector<int>(nm, 0));
      Bicharacter b{m, h, order, std::vector<int>(nm * nh)};
      for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nh; ++j)
          b.exps[i * nh + j] = vals[j][i];
      bool invariant = true;
      for (int x = 0; x < g.order() && invariant; ++x)
        for (int a : m.members) {
          for (int y : h.members)
            if (b.exponent(g.conj(g.inv(x), a), y) != b.exponent(a, g.conj(x, y))) {
              invariant = false;
              break;
            }
          if (!invariant)
            break;
        }
      if (invariant)
        out.push_back(std::move(b));
    }
    std::size_t k = 0;
    while (k < assign.size() && ++assign[k] == chars.size())
      assign[k++] = 0;
    if (k == assign.size())
      break;
  }
  std::sort(out.begin(), out.end(), [](const Bicharacter& a, const Bicharacter& b) { return a.exps < b.exps; });
  return out;
}

struct Triple {
  Subgroup m;
  Subgroup h;
  Bicharacter lambda;
  int index = 0;  // position in enumerate_invariant_bicharacters(G, M, H)
};

struct CoidealSubalgebra {
  Subspace space;
  std::optional<Triple> tag;
  std::optional<Subgroup> normal_subgroup;  // kN in the triangular instance
  Vec integral;                             // Lambda_L, filled by coideal_integral

  std::size_t dim() const { return space.dim(); }
};

// ---------------------------------------------------------------------------
// structural checks

inline bool is_subalgebra(const QTAlgebra& a, const Subspace& l) {
  if (!l.contains(a.one()))
    return false;
  for (const Vec& x : l.basis())
    for (const Vec& y : l.basis())
      if (!l.contains(a.multiply(x, y)))
        return false;
  return true;
}

// Delta(l) in A (x) L
inline bool is_left_coideal(const QTAlgebra& a, const Subspace& l) {
  for (const Vec& x : l.basis())
    for (const Vec& row : a.coproduct_matrix(x))
      if (!is_zero_vec(row) && !l.contains(row))
        return false;
  return true;
}

inline bool is_left_normal(const QTAlgebra& a, const Subspace& l) {
  for (int i = 0; i < a.dim(); ++i)
    for (const Vec& x : l.basis())
      if (!l.contains(a.adjoint_left(a.basis(i), x)))
        return false;
  return true;
}

inline void check_coideal_invariants(const QTAlgebra& a, const Subspace& l, const std::string& what) {
  if (!is_subalgebra(a, l))
    throw InvariantViolation(what + " is not a subalgebra");
  if (!is_left_coideal(a, l))
    throw InvariantViolation(what + " is not a left coideal");
  if (!is_left_normal(a, l))
    throw InvariantViolation(what + " is not normal");
}

inline bool is_normal_hopf_subalgebra(const QTAlgebra& a, const Subspace& l) {
  if (!is_subalgebra(a, l))
    return false;
  for (const Vec& x : l.basis()) {
    if (!l.contains(a.antipode(x)))
      return false;
    auto m = a.coproduct_matrix(x);
    for (const Vec& row : m)
      if (!l.contains(row))
        return false;
    for (int j = 0; j < a.dim(); ++j) {
      Vec col(a.dim());
      for (int i = 0; i < a.dim(); ++i)
        col[i] = m[i][j];
      if (!l.contains(col))
        return false;
    }
  }
  for (int i = 0; i < a.dim(); ++i)
    for (const Vec& x : l.basis())
      if (!l.contains(a.adjoint_left(a.basis(i), x)) || !l.contains(a.adjoint_right(a.basis(i), x)))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// construction

// Right-coset representatives of M (smallest index in each coset Ms).
inline std::vector<int> coset_representatives(const Group& g, const Subgroup& m) {
  std::vector<bool> covered(g.order(), false);
  std::vector<int> reps;
  for (int s = 0; s < g.order(); ++s) {
    if (covered[s])
      continue;
    reps.push_back(s);
    for (int x : m.members)
      covered[g.mul(x, s)] = true;
  }
  return reps;
}

// C(M,H,lambda) = span{ f_s^h |x| h }, f_s^h = sum_m lambda(m,h) p_{ms}, in
// the algebra returned by build_double(g).
inline CoidealSubalgebra build_coideal(const QTAlgebra& a, const Group& g, const Triple& t,
                                       bool verify = true) {
  const int n = g.order();
  if (a.dim() != n * n)
    throw PreconditionViolated("algebra is not the double of this group");
  if (!commute_elementwise(g, t.m, t.h) || !is_normal(g, t.m) || !is_normal(g, t.h))
    throw PreconditionViolated("triple needs normal, elementwise commuting M and H");
  std::vector<Vec> gens;
  for (int h : t.h.members)
    for (int s : coset_representatives(g, t.m)) {
      Vec v(a.dim());
      for (int m : t.m.members)
        v[g.mul(m, s) * n + h] = t.lambda.value(m, h);
      gens.push_back(std::move(v));
    }
  CoidealSubalgebra c;
  c.space = Subspace::span(a.dim(), gens);
  c.tag = t;
  std::size_t expect = static_cast<std::size_t>(t.h.order()) * (n / t.m.order());
  if (c.space.dim() != expect)
    throw InvariantViolation("C(M,H,lambda) has dimension " + std::to_string(c.space.dim()) +
                             ", expected |H||G:M| = " + std::to_string(expect));
  if (verify)
    check_coideal_invariants(a, c.space, "C(M,H,lambda)");
  return c;
}

// All C(M,H,lambda) over valid triples, deduplicated by subspace and sorted by
// (dim, first triple).  Each entry keeps the first triple that produced it.
inline std::vector<CoidealSubalgebra> enumerate_coideals(const QTAlgebra& a, const Group& g,
                                                         bool verify = true) {
  std::vector<CoidealSubalgebra> out;
  auto normals = normal_subgroups(g);
  for (const Subgroup& m : normals)
    for (const Subgroup& h : normals) {
      if (!commute_elementwise(g, m, h))
        continue;
      auto bis = enumerate_invariant_bicharacters(g, m, h);
      for (std::size_t b = 0; b < bis.size(); ++b) {
        CoidealSubalgebra c = build_coideal(a, g, Triple{m, h, bis[b], static_cast<int>(b)}, false);
        bool dup = false;
        for (const auto& o : out)
          if (o.space == c.space) {
            dup = true;
            break;
          }
        if (!dup) {
          if (verify)
            check_coideal_invariants(a, c.space, "C(M,H,lambda)");
          out.push_back(std::move(c));
        }
      }
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const CoidealSubalgebra& x, const CoidealSubalgebra& y) { return x.dim() < y.dim(); });
  return out;
}

// Left normal coideal subalgebras of kG (R = 1 (x) 1): the group algebras kN
// of normal subgroups.
inline std::vector<CoidealSubalgebra> enumerate_coideals_triangular(const QTAlgebra& a, const Group& g,
                                                                    bool verify = true) {
  if (a.dim() != g.order())
    throw PreconditionViolated("algebra is not the group algebra of this group");
  std::vector<CoidealSubalgebra> out;
  for (const Subgroup& nsub : normal_subgroups(g)) {
    std::vector<Vec> gens;
    for (int x : nsub.members)
      gens.push_back(a.basis(x));
    CoidealSubalgebra c;
    c.space = Subspace::span(a.dim(), gens);
    c.normal_subgroup = nsub;
    if (verify)
      check_coideal_invariants(a, c.space, "kN");
    out.push_back(std::move(c));
  }
  return out;
}

// Integral of an arbitrary subspace L (as a subalgebra): l x = eps(l) x for
// all l in L, eps(x) = 1.
inline Vec subspace_integral(const QTAlgebra& a, const Subspace& l) {
  const auto& b = l.basis();
  std::size_t k = b.size();
  std::vector<std::vector<Vec>> prod(k, std::vector<Vec>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      prod[i][j] = a.multiply(b[i], b[j]);
  std::vector<CycloNumber> eps(k);
  for (std::size_t i = 0; i < k; ++i)
    eps[i] = a.epsilon(b[i]);
  auto to_elem = [&](const Vec& c) {
    Vec x(a.dim());
    for (std::size_t j = 0; j < k; ++j)
      axpy(x, c[j], b[j]);
    return x;
  };
  auto satisfies = [&](const Vec& c) {
    Vec x = to_elem(c);
    for (std::size_t i = 0; i < k; ++i)
      if (!vec_equal(a.multiply(b[i], x), scale(x, eps[i])))
        return false;
    return true;
  };
  auto ker = solve_homogeneous(
      k,
      [&](const std::function<bool(Vec)>& emit) {
        for (std::size_t i = 0; i < k; ++i)
          for (int coord = 0; coord < a.dim(); ++coord) {
            Vec row(k);
            for (std::size_t j = 0; j < k; ++j)
              row[j] = prod[i][j][coord] - eps[i] * b[j][coord];
            if (!is_zero_vec(row) && !emit(std::move(row)))
              return;
          }
      },
      satisfies);
  if (ker.size() != 1)
    throw NoIntegral("coideal integral space has dimension " + std::to_string(ker.size()));
  Vec x = to_elem(ker[0]);
  CycloNumber e = a.epsilon(x);
  if (e.is_zero())
    throw NoIntegral("coideal integral is annihilated by the counit");
  return scale(x, e.inverse());
}

inline const Vec& coideal_integral(const QTAlgebra& a, CoidealSubalgebra& l) {
  if (l.integral.empty())
    l.integral = subspace_integral(a, l.space);
  return l.integral;
}

inline Subspace coideal_product(const QTAlgebra& a, const Subspace& l, const Subspace& m) {
  Subspace s(a.dim());
  for (const Vec& x : l.basis())
    for (const Vec& y : m.basis()) {
      s.add(a.multiply(x, y));
      if (s.echelon().full())
        return s;
    }
  return s;
}

inline Subspace coideal_intersect(const Subspace& l, const Subspace& m) { return intersect(l, m); }

// (A//L)^* = { f : f(al) = eps(l) f(a) } = span{ a |-> delta_k(a Lambda_L) }.
inline Subspace quotient_dual(const QTAlgebra& a, const Vec& lambda_l) {
  std::vector<Vec> cols(a.dim(), Vec(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    Vec p = a.multiply(a.basis(i), lambda_l);
    for (int k = 0; k < a.dim(); ++k)
      cols[k][i] = p[k];
  }
  return Subspace::span(a.dim(), cols);
}

// The same space described by its defining equations f(e_i l) = eps(l) f(e_i).
inline Subspace quotient_dual_by_equations(const QTAlgebra& a, const Subspace& l) {
  Echelon eqs(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (const Vec& x : l.basis()) {
      Vec row = a.multiply(a.basis(i), x);
      row[i] -= a.epsilon(x);
      if (!is_zero_vec(row))
        eqs.add(row);
      if (eqs.full())
        break;
    }
  return Subspace::span(a.dim(), eqs.kernel());
}

// Idempotent integral of a Hopf subalgebra B of A^*: f lambda = f(1) lambda
// for f in B, lambda(1) = 1.
inline Vec dual_subspace_integral(const QTAlgebra& a, const Subspace& b) {
  const auto& basis = b.basis();
  std::size_t k = basis.size();
  Echelon eqs(k);
  for (const Vec& f : basis) {
    CycloNumber f1 = dot(f, a.one());
    std::vector<Vec> prods;
    for (const Vec& g : basis)
      prods.push_back(a.convolve(f, g));
    for (int coord = 0; coord < a.dim(); ++coord) {
      Vec row(k);
      for (std::size_t j = 0; j < k; ++j)
        row[j] = prods[j][coord] - f1 * basis[j][coord];
      if (!is_zero_vec(row))
        eqs.add(std::move(row));
    }
  }
  auto ker = eqs.kernel();
  if (ker.size() != 1)
    throw NoIntegral("dual integral space has dimension " + std::to_string(ker.size()));
  Vec x(a.dim());
  for (std::size_t j = 0; j < k; ++j)
    axpy(x, ker[0][j], basis[j]);
  CycloNumber e = dot(x, a.one());
  if (e.is_zero())
    throw NoIntegral("dual integral vanishes on 1");
  return scale(x, e.inverse());
}

// phi_R((A//L)^*)
inline Subspace centralizer_coideal(const QTAlgebra& a, const Vec& lambda_l) {
  std::vector<Vec> imgs;
  Subspace q = quotient_dual(a, lambda_l);
  for (const Vec& f : q.basis())
    imgs.push_back(a.drinfeld_map(f));
  return Subspace::span(a.dim(), imgs);
}

// LKer of the module given by matrices rho(e_i): all a with
// a_1 (x) a_2 m = a (x) m.  Several modules are stacked (their direct sum).
inline Subspace left_kernel(const QTAlgebra& a, const std::vector<const std::vector<Matrix>*>& modules) {
  const int n = a.dim();
  Echelon sys(n);
  for (const auto* rho : modules) {
    std::size_t d = (*rho)[0].n;
    for (int j = 0; j < n && !sys.full(); ++j) {
      // rows indexed by (p, q) for tensor component e_j
      std::vector<Vec> rows(d * d, Vec(n));
      for (int i = 0; i < n; ++i) {
        for (const Term2& t : a.coproduct(i)) {
          if (t.i != j)
            continue;
          const Matrix& m = (*rho)[t.j];
          for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q)
              if (!m(p, q).is_zero())
                rows[p * d + q][i] += t.c * m(p, q);
        }
        if (i == j)
          for (std::size_t p = 0; p < d; ++p)
            rows[p * d + p][i] -= CycloNumber(1);
      }
      for (Vec& r : rows)
        if (!is_zero_vec(r)) {
          sys.add(std::move(r));
          if (sys.full())
            break;
        }
    }
  }
  return Subspace::span(n, sys.kernel());
}

} // namespace hopfcat

#endif
