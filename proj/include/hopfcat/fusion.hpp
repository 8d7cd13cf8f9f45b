// Simple objects of Rep(D(kG)), the S-matrix, fusion rules, the lattice of
// fusion subcategories and Mueger centralizers computed three ways.

#ifndef HOPFCAT_FUSION_HPP_
#define HOPFCAT_FUSION_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chartable.hpp"
#include "coideal.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hopf.hpp"
#include "linalg.hpp"

namespace hopfcat {

// ---------------------------------------------------------------------------
// representations of small groups

// A subgroup as a group in its own right; element i is s.members[i].
inline Group subgroup_as_group(const Group& g, const Subgroup& s, const std::string& name = "") {
  std::size_t n = s.members.size();
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < n; ++i)
    pos[s.members[i]] = static_cast<int>(i);
  std::vector<int> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = pos[g.mul(s.members[i], s.members[j])];
  return Group(static_cast<int>(n), std::move(t), name);
}

// Matrices rho(c) for every element of g affording the irreducible character
// row i of tab, realized as induced from a linear character of a subgroup.
inline std::vector<Matrix> monomial_representation(const CharacterTable& tab, int i) {
  const Group& g = tab.group;
  const int d = tab.degrees[i];
  std::vector<Matrix> rho(g.order(), Matrix(d));
  if (d == 1) {
    for (int x = 0; x < g.order(); ++x)
      rho[x](0, 0) = tab.value(i, x);
    return rho;
  }
  for (const Subgroup& k : all_subgroups(g)) {
    if (k.order() * d != g.order())
      continue;
    CharacterTable kt = character_table(subgroup_as_group(g, k));
    std::vector<int> pos(g.order(), -1);
    for (std::size_t j = 0; j < k.members.size(); ++j)
      pos[k.members[j]] = static_cast<int>(j);
    // left transversal t_1 = e, ..., t_d
    std::vector<int> trans;
    std::vector<bool> covered(g.order(), false);
    for (int x = 0; x < g.order(); ++x)
      if (!covered[x]) {
        trans.push_back(x);
        for (int y : k.members)
          covered[g.mul(x, y)] = true;
      }
    for (int row = 0; row < kt.size(); ++row) {
      if (kt.degrees[row] != 1)
        continue;
      auto psi = [&](int x) { return pos[x] < 0 ? CycloNumber() : kt.value(row, pos[x]); };
      bool match = true;
      for (const ConjClassG& c : tab.classes) {
        CycloNumber ind;
        for (int t : trans)
          ind += psi(g.mul(g.mul(g.inv(t), c.representative), t));
        if (ind != tab.chars[i][tab.class_of[c.representative]]) {
          match = false;
          break;
        }
      }
      if (!match)
        continue;
      // c t_a = t_b k  =>  rho(c) e_a = psi(k) e_b
      for (int x = 0; x < g.order(); ++x)
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) {
            int kk = g.mul(g.mul(g.inv(trans[b]), x), trans[a]);
            if (pos[kk] >= 0)
              rho[x](b, a) = psi(kk);
          }
      return rho;
    }
  }
  throw NotMonomial("character " + std::to_string(i) + " of " + g.name() +
                    " is not induced from a linear character");
}

// ---------------------------------------------------------------------------
// simple objects of D(kG)

struct SimpleObject {
  int index = 0;
  int class_index = 0;
  int char_index = 0;  // row of the centralizer's character table
  int rep = 0;         // the class representative a
  int dim = 0;
  Subgroup centralizer;
  std::vector<CycloNumber> cent_char;  // chi on centralizer.members
  Vec character;                       // on the basis of D(kG)
  std::vector<Matrix> matrices;        // rho(p_x |x| h), index x*|G| + h

  CycloNumber centralizer_value(int h) const {
    auto it = std::lower_bound(centralizer.members.begin(), centralizer.members.end(), h);
    if (it == centralizer.members.end() || *it != h)
      throw PreconditionViolated("element is not in the centralizer");
    return cent_char[static_cast<std::size_t>(it - centralizer.members.begin())];
  }
};

constexpr int kDefaultIrrepGroupBound = 12;

inline std::vector<SimpleObject> double_irreps(const Group& g, int bound = kDefaultIrrepGroupBound) {
  if (g.order() > bound)
    throw BoundExceeded("double_irreps: |G| = " + std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(bound));
  const int n = g.order();
  const int dimA = n * n;
  std::vector<SimpleObject> out;
  auto classes = conjugacy_classes(g);
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    int a = classes[ci].representative;
    Subgroup c = centralizer_subgroup(g, a);
    CharacterTable ct = character_table(subgroup_as_group(g, c, "C(" + std::to_string(a) + ")"));
    std::vector<int> pos(n, -1);
    for (std::size_t j = 0; j < c.members.size(); ++j)
      pos[c.members[j]] = static_cast<int>(j);
    std::vector<int> reps;  // left cosets g C
    std::vector<bool> covered(n, false);
    for (int x = 0; x < n; ++x)
      if (!covered[x]) {
        reps.push_back(x);
        for (int y : c.members)
          covered[g.mul(x, y)] = true;
      }
    const int k = static_cast<int>(reps.size());
    for (int row = 0; row < ct.size(); ++row) {
      auto rho = monomial_representation(ct, row);
      const int dc = ct.degrees[row];
      SimpleObject s;
      s.index = static_cast<int>(out.size());
      s.class_index = static_cast<int>(ci);
      s.char_index = row;
      s.rep = a;
      s.dim = k * dc;
      s.centralizer = c;
      for (std::size_t j = 0; j < c.members.size(); ++j)
        s.cent_char.push_back(ct.value(row, static_cast<int>(j)));
      s.matrices.assign(dimA, Matrix(s.dim));
      s.character.assign(dimA, CycloNumber());
      for (int h = 0; h < n; ++h)
        for (int i = 0; i < k; ++i) {
          // h g_i = g_j c
          int j = 0;
          while (pos[g.mul(g.inv(reps[j]), g.mul(h, reps[i]))] < 0)
            ++j;
          int cc = pos[g.mul(g.inv(reps[j]), g.mul(h, reps[i]))];
          int x = g.conj(reps[j], a);  // p_x acts as 1 on block j
          Matrix& m = s.matrices[x * n + h];
          for (int p = 0; p < dc; ++p)
            for (int q = 0; q < dc; ++q)
              m(j * dc + p, i * dc + q) = rho[cc](p, q);
        }
      for (int b = 0; b < dimA; ++b)
        s.character[b] = s.matrices[b].trace();
      out.push_back(std::move(s));
    }
  }
  int total = 0;
  for (const auto& s : out)
    total += s.dim * s.dim;
  if (total != dimA)
    throw InternalMismatch("sum of squared simple dimensions is not |G|^2");
  return out;
}

// rho is an algebra map: rho(e_i) rho(e_j) = rho(e_i e_j), rho(1) = I.
inline bool is_representation(const QTAlgebra& a, const std::vector<Matrix>& rho) {
  std::size_t d = rho[0].n;
  Matrix one(d);
  for (int i = 0; i < a.dim(); ++i)
    if (!a.one()[i].is_zero())
      one = one + rho[i].scaled(a.one()[i]);
  if (!(one == Matrix::identity(d)))
    return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Matrix lhs = rho[i] * rho[j];
      Matrix rhs(d);
      for (const auto& [k, c] : a.product(i, j))
        rhs = rhs + rho[k].scaled(c);
      if (!(lhs == rhs))
        return false;
    }
  return true;
}

// Index of the simple whose character is chi o S.
inline std::vector<int> dual_indices(const QTAlgebra& a, const std::vector<Vec>& chars) {
  std::vector<int> dual(chars.size(), -1);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    Vec c = a.dual_antipode(chars[i]);
    for (std::size_t j = 0; j < chars.size(); ++j)
      if (vec_equal(c, chars[j]))
        dual[i] = static_cast<int>(j);
    if (dual[i] < 0)
      throw InconsistentCharacters("dual of a simple is not simple");
  }
  return dual;
}

// ---------------------------------------------------------------------------
// S-matrix and fusion rules

// s_ij = chi_i(phi_R(chi_{j*})), checked against tr(Q | V_i (x) V_j^*) computed
// from the representation matrices (rho_{j^*}(x) = rho_j(S x)^T).
inline Matrix smatrix(const QTAlgebra& a, const std::vector<Vec>& chars, const std::vector<int>& dual,
                      const std::vector<const std::vector<Matrix>*>& matrices = {}) {
  std::size_t r = chars.size();
  Matrix s(r);
  for (std::size_t j = 0; j < r; ++j) {
    Vec z = a.drinfeld_map(chars[dual[j]]);
    for (std::size_t i = 0; i < r; ++i)
      s(i, j) = dot(chars[i], z);
  }
  if (!matrices.empty()) {
    // rho(S e_b) for each simple
    std::vector<std::vector<Matrix>> anti(r);
    for (std::size_t j = 0; j < r; ++j) {
      const auto& rho = *matrices[j];
      for (int b = 0; b < a.dim(); ++b) {
        Matrix m(rho[0].n);
        for (const auto& [k, c] : a.antipode_of(b))
          m = m + rho[k].scaled(c);
        anti[j].push_back(m);
      }
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const auto& ri = *matrices[i];
        std::size_t di = ri[0].n, dj = anti[j][0].n;
        // trace of sum_c rho_i(Q1) (x) rho_j(S Q2)^T, entrywise on the diagonal
        CycloNumber tr;
        for (const Term2& q : a.monodromy()) {
          const Matrix& x = ri[q.i];
          const Matrix& y = anti[j][q.j];
          for (std::size_t p = 0; p < di; ++p) {
            if (x(p, p).is_zero())
              continue;
            for (std::size_t u = 0; u < dj; ++u)
              if (!y(u, u).is_zero())
                tr += q.c * x(p, p) * y(u, u);
          }
        }
        if (tr != s(i, j))
          throw InternalMismatch("S-matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") differs between the character and trace computations");
      }
  }
  return s;
}

using FusionRules = std::vector<std::vector<std::vector<int>>>;  // N[i][j][k]

// N_ij^k = (chi_i chi_j chi_{k*})(Lambda) = (chi_i chi_j)(chi_{k*} -> Lambda)
inline FusionRules fusion_coefficients(const QTAlgebra& a, const std::vector<Vec>& chars,
                                       const std::vector<int>& dual, const Vec& lambda) {
  std::size_t r = chars.size();
  std::vector<Vec> w(r);
  for (std::size_t k = 0; k < r; ++k)
    w[k] = a.harpoon_right(chars[dual[k]], lambda);
  FusionRules n(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Vec u = a.convolve(chars[i], chars[j]);
      for (std::size_t k = 0; k < r; ++k) {
        CycloNumber v = dot(u, w[k]);
        if (!v.is_rational() || !v.rational_value().is_integer() || v.rational_value().sign() < 0 ||
            !v.rational_value().is_small())
          throw NonIntegerMultiplicity("N_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
                                       std::to_string(k) + " = " + v.str());
        n[i][j][k] = static_cast<int>(v.rational_value().num());
      }
    }
  return n;
}

// ---------------------------------------------------------------------------
// fusion subcategories

struct TripleTag {
  Subgroup m;
  Subgroup h;
  int b = 0;  // index into enumerate_invariant_bicharacters(G, M, H)
  Bicharacter lambda;
};

struct FusionSubcategory {
  std::vector<int> simples;  // sorted
  std::optional<TripleTag> triple;
  std::int64_t fpdim = 0;

  friend bool operator==(const FusionSubcategory& a, const FusionSubcategory& b) {
    return a.simples == b.simples;
  }
};

inline std::int64_t fpdim_of(const std::vector<int>& simples, const std::vector<int>& dims) {
  std::int64_t s = 0;
  for (int i : simples)
    s += static_cast<std::int64_t>(dims[i]) * dims[i];
  return s;
}

// Closure of seed (plus unit) under duals and fusion.
inline std::vector<int> fusion_closure(const FusionRules& n, const std::vector<int>& dual,
                                       const std::vector<int>& seed) {
  std::size_t r = dual.size();
  std::vector<bool> in(r, false);
  std::vector<int> list;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  push(0);
  for (int s : seed)
    push(s);
  for (std::size_t q = 0; q < list.size(); ++q) {
    push(dual[list[q]]);
    for (std::size_t p = 0; p <= q; ++p)
      for (std::size_t k = 0; k < r; ++k)
        if (n[list[q]][list[p]][k] > 0 || n[list[p]][list[q]][k] > 0)
          push(static_cast<int>(k));
  }
  std::sort(list.begin(), list.end());
  return list;
}

inline bool is_fusion_closed(const FusionRules& n, const std::vector<int>& dual, const std::vector<int>& set) {
  return fusion_closure(n, dual, set) == set;
}

// S(M,H,B): simples (a, chi) with a in M and B(a,h) chi(1) = chi(h) for h in H.
inline FusionSubcategory subcat_from_triple(const Group& g, const std::vector<SimpleObject>& simples,
                                            const FusionRules& n, const std::vector<int>& dual,
                                            const TripleTag& t) {
  FusionSubcategory s;
  s.triple = t;
  std::vector<int> dims;
  for (const SimpleObject& x : simples) {
    dims.push_back(x.dim);
    if (!t.m.contains(x.rep))
      continue;
    CycloNumber d = x.centralizer_value(0);
    bool ok = true;
    for (int h : t.h.members)
      if (t.lambda.value(x.rep, h) * d != x.centralizer_value(h)) {
        ok = false;
        break;
      }
    if (ok)
      s.simples.push_back(x.index);
  }
  s.fpdim = fpdim_of(s.simples, dims);
  std::int64_t expect = static_cast<std::int64_t>(t.m.order()) * (g.order() / t.h.order());
  if (s.fpdim != expect)
    throw NotClosed("S(M,H,B) has FPdim " + std::to_string(s.fpdim) + ", expected |M|[G:H] = " +
                    std::to_string(expect));
  if (!is_fusion_closed(n, dual, s.simples))
    throw NotClosed("S(M,H,B) is not closed under fusion");
  return s;
}

inline bool subcat_less(const FusionSubcategory& a, const FusionSubcategory& b) {
  if (a.fpdim != b.fpdim)
    return a.fpdim < b.fpdim;
  return a.simples < b.simples;
}

// Every fusion-closed set of simples, found by closing {unit} under "add one
// simple" until nothing new appears.
inline std::vector<std::vector<int>> brute_force_subcats(const FusionRules& n, const std::vector<int>& dual) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue{fusion_closure(n, dual, {})};
  found.insert(queue[0]);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t x = 0; x < dual.size(); ++x) {
      if (std::binary_search(queue[q].begin(), queue[q].end(), static_cast<int>(x)))
        continue;
      std::vector<int> seed = queue[q];
      seed.push_back(static_cast<int>(x));
      auto c = fusion_closure(n, dual, seed);
      if (found.insert(c).second)
        queue.push_back(c);
    }
  return std::vector<std::vector<int>>(found.begin(), found.end());
}

// Literal subset search; only for small r.
inline std::vector<std::vector<int>> subset_search_subcats(const FusionRules& n, const std::vector<int>& dual) {
  std::size_t r = dual.size();
  if (r > 20)
    throw BoundExceeded("subset search needs at most 20 simples");
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (r - 1)); ++mask) {
    std::vector<int> set{0};
    for (std::size_t i = 1; i < r; ++i)
      if (mask & (std::uint64_t{1} << (i - 1)))
        set.push_back(static_cast<int>(i));
    bool closed = true;
    for (int x : set) {
      if (!std::binary_search(set.begin(), set.end(), dual[x])) {
        closed = false;
        break;
      }
      for (int y : set) {
        for (std::size_t k = 0; k < r && closed; ++k)
          if (n[x][y][k] > 0 && !std::binary_search(set.begin(), set.end(), static_cast<int>(k)))
            closed = false;
        if (!closed)
          break;
      }
      if (!closed)
        break;
    }
    if (closed)
      out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> subcat_meet(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline std::vector<int> subcat_join(const FusionRules& n, const std::vector<int>& dual,
                                    const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> seed = a;
  seed.insert(seed.end(), b.begin(), b.end());
  return fusion_closure(n, dual, seed);
}

// Rep(A//L) = { i : chi_i(Lambda_L) = chi_i(1) }
inline std::vector<int> quotient_irreps(const QTAlgebra& a, const std::vector<Vec>& chars, const Vec& lambda_l) {
  std::vector<int> out;
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (dot(chars[i], lambda_l) == dot(chars[i], a.one()))
      out.push_back(static_cast<int>(i));
  return out;
}

inline std::vector<int> centralizer_by_smatrix(const Matrix& s, const std::vector<int>& dims,
                                               const std::vector<int>& d) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.n; ++i) {
    bool ok = true;
    for (int j : d)
      if (s(i, j) != CycloNumber(static_cast<std::int64_t>(dims[i]) * dims[j])) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(static_cast<int>(i));
  }
  return out;
}

// Union of the blocks A_j over j with C^j inside L; must agree with the
// blocks over j with F_j(Lambda_L) != 0.
inline std::vector<int> centralizer_by_classes(const std::vector<HopfClass>& classes,
                                               const CharRingIdempotents& f, const Subspace& l,
                                               const Vec& lambda_l) {
  std::set<int> a, b;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    if (classes[j].space.is_subspace_of(l))
      a.insert(f.blocks[j].begin(), f.blocks[j].end());
    if (!dot(f.f[j], lambda_l).is_zero())
      b.insert(f.blocks[j].begin(), f.blocks[j].end());
  }
  if (a != b)
    throw InternalMismatch("{j : C^j in L} and {j : F_j(Lambda_L) != 0} differ");
  return std::vector<int>(a.begin(), a.end());
}

} // namespace hopfcat

#endif
