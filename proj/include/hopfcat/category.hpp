// Everything computed for one quasitriangular instance: the algebra, its
// simples, idempotents, Hopf conjugacy classes, S-matrix, fusion rules, the
// coideal lattice and the fusion subcategory lattice with the correspondence
// L <-> Rep(A//L) between them.

#ifndef HOPFCAT_CATEGORY_HPP_
#define HOPFCAT_CATEGORY_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chartable.hpp"
#include "coideal.hpp"
#include "fusion.hpp"
#include "group.hpp"
#include "hopf.hpp"

namespace hopfcat {

enum class InstanceKind { Double, Triangular };

struct CoidealEntry {
  CoidealSubalgebra coideal;
  std::vector<int> quotient;  // Rep(A//L)
};

struct Instance {
  InstanceKind kind = InstanceKind::Double;
  Group group;
  std::shared_ptr<QTAlgebra> algebra;
  Integrals integrals;
  std::vector<SimpleObject> simples;  // doubles only
  std::vector<std::vector<Matrix>> group_modules;  // triangular only
  std::vector<Vec> chars;
  std::vector<int> dual;
  std::vector<int> dims;
  std::vector<Vec> e;
  CharRingIdempotents f;
  std::vector<int> block_of;  // j with i in blocks[j]
  std::vector<HopfClass> classes;
  Matrix s;
  FusionRules n;
  std::vector<CoidealEntry> coideals;
  std::vector<FusionSubcategory> lattice;  // sorted by (fpdim, simples)

  const QTAlgebra& a() const { return *algebra; }
  std::size_t rank() const { return chars.size(); }
  const std::vector<Matrix>& module(std::size_t i) const {
    return kind == InstanceKind::Double ? simples[i].matrices : group_modules[i];
  }

  // Index into coideals of the L with Rep(A//L) = d, or -1.
  int coideal_for(const std::vector<int>& d) const {
    for (std::size_t i = 0; i < coideals.size(); ++i)
      if (coideals[i].quotient == d)
        return static_cast<int>(i);
    return -1;
  }
  int coideal_index(const Subspace& l) const {
    for (std::size_t i = 0; i < coideals.size(); ++i)
      if (coideals[i].coideal.space == l)
        return static_cast<int>(i);
    return -1;
  }
  int subcat_index(const std::vector<int>& d) const {
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (lattice[i].simples == d)
        return static_cast<int>(i);
    return -1;
  }
};

struct InstanceOptions {
  int max_dim = kDefaultMaxAlgebraDim;
  bool verify_coideals = true;
  bool check_smatrix_trace = true;
};

namespace impl {

inline void finish_instance(Instance& in, const InstanceOptions& opt) {
  const QTAlgebra& a = *in.algebra;
  in.integrals = integrals(a);
  in.dual = dual_indices(a, in.chars);
  in.dims.clear();
  for (const Vec& c : in.chars) {
    CycloNumber d = dot(c, a.one());
    in.dims.push_back(static_cast<int>(d.rational_value().num()));
  }
  in.e = central_idempotents(a, in.integrals.lambda, in.chars);
  in.f = char_ring_idempotents(a, in.chars, in.e, in.integrals.t);
  in.block_of.assign(in.chars.size(), -1);
  for (std::size_t j = 0; j < in.f.blocks.size(); ++j)
    for (int i : in.f.blocks[j])
      in.block_of[i] = static_cast<int>(j);
  in.classes.clear();
  for (const Vec& fj : in.f.f)
    in.classes.push_back(conjugacy_class(a, in.integrals.lambda, fj));
  std::vector<const std::vector<Matrix>*> mats;
  if (opt.check_smatrix_trace)
    for (const auto& s : in.simples)
      mats.push_back(&s.matrices);
  in.s = smatrix(a, in.chars, in.dual, mats);
  in.n = fusion_coefficients(a, in.chars, in.dual, in.integrals.lambda);
  for (auto& c : in.coideals) {
    coideal_integral(a, c.coideal);
    c.quotient = quotient_irreps(a, in.chars, c.coideal.integral);
  }
}

} // namespace impl

inline Instance analyze_double(const Group& g, const InstanceOptions& opt = {}) {
  Instance in;
  in.kind = InstanceKind::Double;
  in.group = g;
  in.algebra = std::make_shared<QTAlgebra>(build_double(g, opt.max_dim));
  in.simples = double_irreps(g, std::max(kDefaultIrrepGroupBound, g.order()));
  for (const auto& s : in.simples)
    in.chars.push_back(s.character);
  for (const auto& c : enumerate_coideals(*in.algebra, g, opt.verify_coideals))
    in.coideals.push_back(CoidealEntry{c, {}});
  impl::finish_instance(in, opt);

  // subcategories from triples, checked against the brute-force lattice
  std::vector<FusionSubcategory> from_triples;
  auto normals = normal_subgroups(g);
  for (const Subgroup& m : normals)
    for (const Subgroup& h : normals) {
      if (!commute_elementwise(g, m, h))
        continue;
      auto bis = enumerate_invariant_bicharacters(g, m, h);
      for (std::size_t b = 0; b < bis.size(); ++b) {
        auto sc = subcat_from_triple(g, in.simples, in.n, in.dual,
                                     TripleTag{m, h, static_cast<int>(b), bis[b]});
        if (std::find(from_triples.begin(), from_triples.end(), sc) == from_triples.end())
          from_triples.push_back(std::move(sc));
      }
    }
  std::sort(from_triples.begin(), from_triples.end(), subcat_less);
  auto brute = brute_force_subcats(in.n, in.dual);
  std::vector<std::vector<int>> keys;
  for (const auto& sc : from_triples)
    keys.push_back(sc.simples);
  std::sort(keys.begin(), keys.end());
  if (keys != brute)
    throw OracleMismatch("triple-parameterized subcategories (" + std::to_string(keys.size()) +
                         ") differ from the brute-force lattice (" + std::to_string(brute.size()) + ")");
  in.lattice = std::move(from_triples);
  return in;
}

inline Instance analyze_triangular(const Group& g, const InstanceOptions& opt = {}) {
  Instance in;
  in.kind = InstanceKind::Triangular;
  in.group = g;
  in.algebra = std::make_shared<QTAlgebra>(build_triangular(g, opt.max_dim));
  CharacterTable t = character_table(g);
  for (int i = 0; i < t.size(); ++i) {
    Vec chi(g.order());
    for (int x = 0; x < g.order(); ++x)
      chi[x] = t.value(i, x);
    in.chars.push_back(std::move(chi));
    in.group_modules.push_back(monomial_representation(t, i));
  }
  for (auto& c : enumerate_coideals_triangular(*in.algebra, g, opt.verify_coideals))
    in.coideals.push_back(CoidealEntry{c, {}});
  InstanceOptions o = opt;
  o.check_smatrix_trace = false;
  impl::finish_instance(in, o);
  for (const auto& set : brute_force_subcats(in.n, in.dual)) {
    FusionSubcategory sc;
    sc.simples = set;
    sc.fpdim = fpdim_of(set, in.dims);
    in.lattice.push_back(std::move(sc));
  }
  std::sort(in.lattice.begin(), in.lattice.end(), subcat_less);
  return in;
}

enum class CentralizerMethod { SMatrix, Phi, Classes };

inline const char* method_name(CentralizerMethod m) {
  switch (m) {
    case CentralizerMethod::SMatrix: return "smatrix";
    case CentralizerMethod::Phi: return "phi";
    case CentralizerMethod::Classes: return "classes";
  }
  return "?";
}

// phi_R((A//L)^*) as a coideal with its integral.
inline CoidealSubalgebra centralizer_coideal_of(const Instance& in, const CoidealSubalgebra& l) {
  CoidealSubalgebra c;
  c.space = centralizer_coideal(in.a(), l.integral);
  c.integral = subspace_integral(in.a(), c.space);
  return c;
}

inline FusionSubcategory centralizer(const Instance& in, const std::vector<int>& d, CentralizerMethod method) {
  FusionSubcategory out;
  if (method == CentralizerMethod::SMatrix) {
    out.simples = centralizer_by_smatrix(in.s, in.dims, d);
  } else {
    int li = in.coideal_for(d);
    if (li < 0)
      throw MethodPreconditionViolated(std::string("method ") + method_name(method) +
                                       " needs a coideal L with Rep(A//L) = D");
    const CoidealSubalgebra& l = in.coideals[li].coideal;
    if (method == CentralizerMethod::Phi) {
      CoidealSubalgebra star = centralizer_coideal_of(in, l);
      out.simples = quotient_irreps(in.a(), in.chars, star.integral);
    } else {
      out.simples = centralizer_by_classes(in.classes, in.f, l.space, l.integral);
    }
  }
  out.fpdim = fpdim_of(out.simples, in.dims);
  int idx = in.subcat_index(out.simples);
  if (idx >= 0)
    out.triple = in.lattice[idx].triple;
  return out;
}

// <seed> as a fusion closure; see verify for the comparison with
// Rep(A//LKer(seed)).
inline FusionSubcategory generated_subcategory(const Instance& in, const std::vector<int>& seed) {
  FusionSubcategory out;
  out.simples = fusion_closure(in.n, in.dual, seed);
  out.fpdim = fpdim_of(out.simples, in.dims);
  return out;
}

} // namespace hopfcat

#endif
