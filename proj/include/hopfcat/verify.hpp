// Verification of the centralizer, conjugacy-class and factorization
// identities on one instance.  Every check is decided exactly; failures are
// report entries, never exceptions.

#ifndef HOPFCAT_VERIFY_HPP_
#define HOPFCAT_VERIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "category.hpp"

namespace hopfcat {

struct CheckRecord {
  std::string id;
  nlohmann::json subject;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

struct Report {
  std::string group;
  std::string instance;  // "double" or "triangular"
  std::vector<CheckRecord> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
  }

  void sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
      if (a.id != b.id)
        return a.id < b.id;
      return a.subject.dump() < b.subject.dump();
    });
  }

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks)
      cs.push_back({{"id", c.id}, {"subject", c.subject}, {"pass", c.pass}, {"skipped", c.skipped},
                    {"detail", c.detail}});
    return {{"group", group}, {"instance", instance}, {"checks", cs}};
  }

  // One line per check id: passed / total (skipped).
  std::string summary() const {
    std::ostringstream os;
    os << group << " (" << instance << ")\n";
    std::size_t i = 0;
    while (i < checks.size()) {
      std::size_t j = i, pass = 0, skip = 0;
      for (; j < checks.size() && checks[j].id == checks[i].id; ++j) {
        pass += checks[j].pass && !checks[j].skipped;
        skip += checks[j].skipped;
      }
      std::size_t total = j - i;
      os << "  " << checks[i].id << std::string(checks[i].id.size() < 30 ? 30 - checks[i].id.size() : 1, ' ')
         << (skip == total ? "SKIP " : pass + skip == total ? "PASS " : "FAIL ") << pass << "/" << (total - skip);
      if (skip)
        os << " (" << skip << " skipped)";
      os << "\n";
      i = j;
    }
    return os.str();
  }
};

enum class Suite { Smoke, Full };

// The checks that run in each suite.
inline const std::vector<std::string>& check_ids(Suite s) {
  static const std::vector<std::string> smoke{"a.fpdim-product",    "b.double-centralizer", "g.double-dual",
                                              "h.dual-integral",    "q.centralizer-methods", "r.quotient-triple",
                                              "s.centralizer-triple", "u.class-structure"};
  static const std::vector<std::string> full{
      "a.fpdim-product",        "b.double-centralizer",   "c.fpdim-exchange",       "d.lattice-anti-iso",
      "e.kernel-product",       "f.dual-classes",         "g.double-dual",          "h.dual-integral",
      "i.intersection",         "j.normal-commute",       "k.normal-dual",          "l.divisibility",
      "m.centralize-equivalent", "n.coideal-equivalent",  "o.factorization",        "p.coinvariant-centralizer",
      "q.centralizer-methods",  "r.quotient-triple",      "s.centralizer-triple",   "t.coideal-dual-triple",
      "u.class-structure",      "v.integral-decomposition", "w.generated-subcategory", "x.drinfeld-character-product"};
  return s == Suite::Smoke ? smoke : full;
}

namespace impl {

inline std::string gens_label(const Group& g, const Subgroup& s) {
  auto gs = generators(g, s);
  if (gs.empty())
    return "e";
  std::string out;
  for (std::size_t i = 0; i < gs.size(); ++i)
    out += (i ? "." : "") + std::to_string(gs[i]);
  return out;
}

inline std::string coideal_label(const Instance& in, const CoidealSubalgebra& c) {
  if (c.tag)
    return "C(M=" + gens_label(in.group, c.tag->m) + ",H=" + gens_label(in.group, c.tag->h) +
           ",B=" + std::to_string(c.tag->index) + ")";
  if (c.normal_subgroup)
    return "kN(" + gens_label(in.group, *c.normal_subgroup) + ")";
  return "L";
}

inline nlohmann::json coideal_subject(const Instance& in, std::size_t i) {
  const auto& c = in.coideals[i].coideal;
  return {{"coideal", coideal_label(in, c)}, {"dim", c.dim()}};
}

inline nlohmann::json subcat_subject(const std::vector<int>& d) { return {{"subcat", d}}; }

inline std::string set_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline Subspace unit_space(const QTAlgebra& a) { return Subspace::span(a.dim(), {a.one()}); }

inline Vec f_r(const QTAlgebra& a, const Vec& p) {
  Vec r(a.dim());
  for (const Term2& t : a.rmatrix())
    if (!p[t.i].is_zero())
      r[t.j] += t.c * p[t.i];
  return r;
}

inline Vec f_r21(const QTAlgebra& a, const Vec& p) {
  Vec r(a.dim());
  for (const Term2& t : a.rmatrix())
    if (!p[t.j].is_zero())
      r[t.i] += t.c * p[t.j];
  return r;
}

inline bool commute(const QTAlgebra& a, const Subspace& x, const Subspace& y) {
  for (const Vec& u : x.basis())
    for (const Vec& v : y.basis())
      if (!vec_equal(a.multiply(u, v), a.multiply(v, u)))
        return false;
  return true;
}

inline Subspace span_image(const QTAlgebra& a, const Subspace& s, const std::function<Vec(const Vec&)>& f) {
  std::vector<Vec> imgs;
  for (const Vec& v : s.basis())
    imgs.push_back(f(v));
  return Subspace::span(a.dim(), imgs);
}

// Per-coideal data shared by several checks.
struct CoidealData {
  Subspace dual;           // (A//L)^*
  CoidealSubalgebra star;  // L^* = phi_R((A//L)^*)
  int star_index = -1;
  bool normal_hopf = false;
};

struct Context {
  const Instance& in;
  std::vector<int> all;
  std::vector<int> muger;  // C'
  std::vector<std::vector<int>> cents;  // D' for each lattice member
  std::vector<CoidealData> cd;
  std::vector<Subspace> lker;  // LKer(V_i)
  Subspace k_a;

  explicit Context(const Instance& i) : in(i) {
    for (std::size_t x = 0; x < in.rank(); ++x)
      all.push_back(static_cast<int>(x));
    muger = centralizer_by_smatrix(in.s, in.dims, all);
    for (const auto& d : in.lattice)
      cents.push_back(centralizer_by_smatrix(in.s, in.dims, d.simples));
    const QTAlgebra& a = in.a();
    for (const auto& c : in.coideals) {
      CoidealData d;
      d.dual = quotient_dual(a, c.coideal.integral);
      d.star = centralizer_coideal_of(in, c.coideal);
      d.star_index = in.coideal_index(d.star.space);
      cd.push_back(std::move(d));
    }
    for (std::size_t x = 0; x < in.rank(); ++x)
      lker.push_back(left_kernel(a, {&in.module(x)}));
    k_a = compute_K_A(a);
  }

  std::vector<int> cent(const std::vector<int>& d) const {
    int idx = in.subcat_index(d);
    return idx >= 0 ? cents[idx] : centralizer_by_smatrix(in.s, in.dims, d);
  }
  bool factorizable() const { return in.f.factorizable; }
  std::int64_t fp(const std::vector<int>& d) const { return fpdim_of(d, in.dims); }
  std::vector<int> join(const std::vector<int>& x, const std::vector<int>& y) const {
    return subcat_join(in.n, in.dual, x, y);
  }
  std::vector<int> quotient_of(const Subspace& l) const {
    CoidealSubalgebra c;
    c.space = l;
    return quotient_irreps(in.a(), in.chars, coideal_integral(in.a(), c));
  }
  bool centralize(int i, int m) const {
    return in.s(i, m) == CycloNumber(static_cast<std::int64_t>(in.dims[i]) * in.dims[m]);
  }
};

} // namespace impl

// seed drives the random functionals of check x; everything else is exhaustive.
inline Report verify_identities(const Instance& in, Suite suite = Suite::Full, std::uint64_t seed = 0) {
  Report rep;
  rep.group = in.group.name();
  rep.instance = in.kind == InstanceKind::Double ? "double" : "triangular";
  const auto& wanted = check_ids(suite);
  auto want = [&](const std::string& id) { return std::find(wanted.begin(), wanted.end(), id) != wanted.end(); };
  auto add = [&](const std::string& id, nlohmann::json subject, bool pass, std::string detail = "") {
    rep.checks.push_back(CheckRecord{id, std::move(subject), pass, false, std::move(detail)});
  };
  auto na = [&](const std::string& id, const std::string& why) {
    rep.checks.push_back(CheckRecord{id, {{"instance", rep.instance}}, true, true, "skipped: " + why});
  };

  impl::Context cx(in);
  const QTAlgebra& a = in.a();
  const std::size_t dim = static_cast<std::size_t>(a.dim());
  const Subspace unit = impl::unit_space(a);
  const bool is_double = in.kind == InstanceKind::Double;

  for (std::size_t i = 0; i < in.coideals.size(); ++i)
    if (want("j.normal-commute") || want("k.normal-dual") || want("o.factorization") ||
        want("p.coinvariant-centralizer"))
      cx.cd[i].normal_hopf = is_normal_hopf_subalgebra(a, in.coideals[i].coideal.space);

  // FPdim(D) FPdim(D') = FPdim(C) FPdim(D meet C')
  if (want("a.fpdim-product"))
    for (std::size_t x = 0; x < in.lattice.size(); ++x) {
      const auto& d = in.lattice[x].simples;
      std::int64_t lhs = cx.fp(d) * cx.fp(cx.cents[x]);
      std::int64_t rhs = static_cast<std::int64_t>(dim) * cx.fp(subcat_meet(d, cx.muger));
      add("a.fpdim-product", impl::subcat_subject(d), lhs == rhs,
          std::to_string(lhs) + " vs " + std::to_string(rhs));
    }

  // D'' = D join C'
  if (want("b.double-centralizer"))
    for (std::size_t x = 0; x < in.lattice.size(); ++x) {
      const auto& d = in.lattice[x].simples;
      auto dd = cx.cent(cx.cents[x]);
      auto j = cx.join(d, cx.muger);
      add("b.double-centralizer", impl::subcat_subject(d), dd == j, impl::set_str(dd) + " vs " + impl::set_str(j));
    }

  // FPdim(B meet D') FPdim(D) = FPdim(B' meet D) FPdim(B), all partners D
  if (want("c.fpdim-exchange"))
    for (std::size_t x = 0; x < in.lattice.size(); ++x) {
      const auto& b = in.lattice[x].simples;
      std::size_t bad = 0;
      for (std::size_t y = 0; y < in.lattice.size(); ++y) {
        const auto& d = in.lattice[y].simples;
        if (cx.fp(subcat_meet(b, cx.cents[y])) * cx.fp(d) != cx.fp(subcat_meet(cx.cents[x], d)) * cx.fp(b))
          ++bad;
      }
      add("c.fpdim-exchange", impl::subcat_subject(b), bad == 0,
          std::to_string(in.lattice.size() - bad) + "/" + std::to_string(in.lattice.size()) + " partners");
    }

  // Rep(A//L) meet Rep(A//M) = Rep(A//LM), Rep(A//L) join Rep(A//M) = Rep(A//(L meet M))
  if (want("d.lattice-anti-iso"))
    for (std::size_t i = 0; i < in.coideals.size(); ++i) {
      std::size_t bad = 0;
      for (std::size_t j = 0; j < in.coideals.size(); ++j) {
        const auto& l = in.coideals[i];
        const auto& m = in.coideals[j];
        Subspace prod = coideal_product(a, l.coideal.space, m.coideal.space);
        Subspace meet = coideal_intersect(l.coideal.space, m.coideal.space);
        int pi = in.coideal_index(prod), mi = in.coideal_index(meet);
        if (pi < 0 || mi < 0 || in.coideals[pi].quotient != subcat_meet(l.quotient, m.quotient) ||
            in.coideals[mi].quotient != cx.join(l.quotient, m.quotient))
          ++bad;
      }
      add("d.lattice-anti-iso", impl::coideal_subject(in, i), bad == 0,
          std::to_string(in.coideals.size() - bad) + "/" + std::to_string(in.coideals.size()) + " partners");
    }

  // L K_A = K_A L, L meet K_A = L**, L** inside L K_A
  if (want("e.kernel-product"))
    for (std::size_t i = 0; i < in.coideals.size(); ++i) {
      const Subspace& l = in.coideals[i].coideal.space;
      Subspace lk = coideal_product(a, l, cx.k_a);
      Subspace kl = coideal_product(a, cx.k_a, l);
      Subspace lss = centralizer_coideal_of(in, cx.cd[i].star).space;
      bool comm = lk == kl;
      bool meet = intersect(l, cx.k_a) == lss;
      bool incl = lss.is_subspace_of(lk);
      add("e.kernel-product", impl::coideal_subject(in, i), comm && meet && incl,
          std::string("LK=KL ") + (comm ? "yes" : "no") + ", L^K=L** " + (meet ? "yes" : "no") +
              ", L** in LK " + (incl ? "yes" : "no"));
    }

  // L* = sum of C^j over chi_j in Irr(A//L)
  if (want("f.dual-classes")) {
    if (!cx.factorizable()) {
      na("f.dual-classes", "not factorizable");
    } else {
      for (std::size_t i = 0; i < in.coideals.size(); ++i) {
        Subspace acc(dim);
        for (int x : in.coideals[i].quotient)
          acc = sum(acc, in.classes[in.block_of[x]].space);
        add("f.dual-classes", impl::coideal_subject(in, i), acc == cx.cd[i].star.space,
            "dim L* = " + std::to_string(cx.cd[i].star.space.dim()));
      }
    }
  }

  // L** = L
  if (want("g.double-dual")) {
    if (!cx.factorizable()) {
      na("g.double-dual", "not factorizable");
    } else {
      for (std::size_t i = 0; i < in.coideals.size(); ++i) {
        Subspace lss = centralizer_coideal_of(in, cx.cd[i].star).space;
        add("g.double-dual", impl::coideal_subject(in, i), lss == in.coideals[i].coideal.space,
            "dim L** = " + std::to_string(lss.dim()));
      }
    }
  }

  // phi_R(lambda_L) = Lambda_{L*}, lambda_L the integral of (A//L)^*
  if (want("h.dual-integral"))
    for (std::size_t i = 0; i < in.coideals.size(); ++i) {
      Vec lam = dual_subspace_integral(a, cx.cd[i].dual);
      bool ok = vec_equal(a.drinfeld_map(lam), cx.cd[i].star.integral);
      add("h.dual-integral", impl::coideal_subject(in, i), ok);
    }

  // phi_R(B meet B') = L meet L*, B = (A//L)^*, B' = (A//L*)^*
  if (want("i.intersection")) {
    if (!cx.factorizable()) {
      na("i.intersection", "not factorizable");
    } else {
      for (std::size_t i = 0; i < in.coideals.size(); ++i) {
        Subspace b2 = quotient_dual(a, cx.cd[i].star.integral);
        Subspace lhs = impl::span_image(a, intersect(cx.cd[i].dual, b2), [&](const Vec& f) { return a.drinfeld_map(f); });
        Subspace rhs = intersect(in.coideals[i].coideal.space, cx.cd[i].star.space);
        add("i.intersection", impl::coideal_subject(in, i), lhs == rhs, "dim " + std::to_string(rhs.dim()));
      }
    }
  }

  // L normal Hopf: ml = lm for l in L, m in L*
  if (want("j.normal-commute"))
    for (std::size_t i = 0; i < in.coideals.size(); ++i)
      if (cx.cd[i].normal_hopf)
        add("j.normal-commute", impl::coideal_subject(in, i),
            impl::commute(a, in.coideals[i].coideal.space, cx.cd[i].star.space));

  // L normal Hopf => L* normal Hopf
  if (want("k.normal-dual")) {
    if (!cx.factorizable()) {
      na("k.normal-dual", "not factorizable");
    } else {
      for (std::size_t i = 0; i < in.coideals.size(); ++i)
        if (cx.cd[i].normal_hopf)
          add("k.normal-dual", impl::coideal_subject(in, i), is_normal_hopf_subalgebra(a, cx.cd[i].star.space));
    }
  }

  // C^j in L => dim V_j | dim L; squared when Rep(A//L) is nondegenerate
  if (want("l.divisibility")) {
    if (!cx.factorizable()) {
      na("l.divisibility", "not factorizable");
    } else {
      for (std::size_t i = 0; i < in.coideals.size(); ++i) {
        const auto& c = in.coideals[i];
        std::size_t dl = c.coideal.dim();
        bool nondeg = subcat_meet(c.quotient, cx.cent(c.quotient)) == std::vector<int>{0};
        bool ok = true;
        std::string detail;
        for (std::size_t j = 0; j < in.classes.size(); ++j) {
          if (!in.classes[j].space.is_subspace_of(c.coideal.space))
            continue;
          for (int s : in.f.blocks[j]) {
            std::size_t d = static_cast<std::size_t>(in.dims[s]);
            if (dl % d != 0 || (nondeg && dl % (d * d) != 0))
              ok = false;
          }
        }
        detail = std::string("dim L = ") + std::to_string(dl) + (nondeg ? ", nondegenerate quotient" : "");
        add("l.divisibility", impl::coideal_subject(in, i), ok, detail);
      }
    }
  }

  // five equivalent ways for V_i, V_m to centralize each other
  if (want("m.centralize-equivalent"))
    for (std::size_t i = 0; i < in.rank(); ++i) {
      std::size_t bad = 0;
      for (std::size_t m = 0; m < in.rank(); ++m) {
        int ji = in.block_of[i], jm = in.block_of[m];
        bool s1 = cx.centralize(static_cast<int>(i), static_cast<int>(m));
        bool s2 = vec_equal(a.convolve(in.chars[m], in.f.f[ji]), scale(in.f.f[ji], CycloNumber(in.dims[m])));
        bool s3 = vec_equal(a.convolve(in.chars[i], in.f.f[jm]), scale(in.f.f[jm], CycloNumber(in.dims[i])));
        bool s4 = in.classes[ji].space.is_subspace_of(cx.lker[m]);
        bool s5 = in.classes[jm].space.is_subspace_of(cx.lker[i]);
        if (!(s1 == s2 && s2 == s3 && s3 == s4 && s4 == s5))
          ++bad;
      }
      add("m.centralize-equivalent", {{"simple", i}}, bad == 0,
          std::to_string(in.rank() - bad) + "/" + std::to_string(in.rank()) + " partners");
    }

  // V_m in Rep(A//L)' iff C^{j_m} in L iff L* inside LKer(V_m)
  if (want("n.coideal-equivalent"))
    for (std::size_t i = 0; i < in.coideals.size(); ++i) {
      const auto& c = in.coideals[i];
      auto cent = cx.cent(c.quotient);
      std::size_t bad = 0;
      for (std::size_t m = 0; m < in.rank(); ++m) {
        bool s1 = std::binary_search(cent.begin(), cent.end(), static_cast<int>(m));
        bool s2 = in.classes[in.block_of[m]].space.is_subspace_of(c.coideal.space);
        bool s3 = cx.cd[i].star.space.is_subspace_of(cx.lker[m]);
        if (!(s1 == s2 && s2 == s3))
          ++bad;
      }
      add("n.coideal-equivalent", impl::coideal_subject(in, i), bad == 0,
          std::to_string(in.rank() - bad) + "/" + std::to_string(in.rank()) + " simples");
    }

  // K normal Hopf with Rep(A//K) nondegenerate: K K* = A, K meet K* = k,
  // K and K* commute, dim K dim K* = dim A
  if (want("o.factorization")) {
    if (!cx.factorizable()) {
      na("o.factorization", "not factorizable");
    } else {
      for (std::size_t i = 0; i < in.coideals.size(); ++i) {
        if (!cx.cd[i].normal_hopf)
          continue;
        const auto& c = in.coideals[i];
        if (subcat_meet(c.quotient, cx.cent(c.quotient)) != std::vector<int>{0})
          continue;
        const Subspace& k = c.coideal.space;
        const Subspace& l = cx.cd[i].star.space;
        bool full = coideal_product(a, k, l).dim() == dim;
        bool triv = intersect(k, l) == unit;
        bool comm = impl::commute(a, k, l);
        bool dims = k.dim() * l.dim() == dim;
        add("o.factorization", impl::coideal_subject(in, i), full && triv && comm && dims,
            "dim K = " + std::to_string(k.dim()) + ", dim K* = " + std::to_string(l.dim()));
      }
    }
  }

  // q : A -> A//L, L normal Hopf: f_R21(B*) centralizes A^{co q} and f_R(B*)
  // centralizes ^{co q}A
  if (want("p.coinvariant-centralizer"))
    for (std::size_t i = 0; i < in.coideals.size(); ++i) {
      if (!cx.cd[i].normal_hopf)
        continue;
      const Subspace& b = cx.cd[i].dual;
      // A^{co q} = {a : a_1 f(a_2) = f(1) a}, ^{co q}A = {a : f(a_1) a_2 = f(1) a}, f in B
      Echelon right(dim), left(dim);
      for (const Vec& f : b.basis()) {
        CycloNumber f1 = dot(f, a.one());
        for (std::size_t coord = 0; coord < dim; ++coord) {
          Vec r1(dim), r2(dim);
          for (std::size_t x = 0; x < dim; ++x) {
            Vec e = a.basis(static_cast<int>(x));
            r1[x] = a.harpoon_right(f, e)[coord] - (x == coord ? f1 : CycloNumber());
            r2[x] = a.harpoon_left(e, f)[coord] - (x == coord ? f1 : CycloNumber());
          }
          if (!is_zero_vec(r1))
            right.add(std::move(r1));
          if (!is_zero_vec(r2))
            left.add(std::move(r2));
        }
      }
      Subspace coinv_r = Subspace::span(dim, right.kernel());
      Subspace coinv_l = Subspace::span(dim, left.kernel());
      Subspace img21 = impl::span_image(a, b, [&](const Vec& f) { return impl::f_r21(a, f); });
      Subspace img = impl::span_image(a, b, [&](const Vec& f) { return impl::f_r(a, f); });
      bool ok1 = impl::commute(a, img21, coinv_r);
      bool ok2 = impl::commute(a, img, coinv_l);
      add("p.coinvariant-centralizer", impl::coideal_subject(in, i), ok1 && ok2,
          "dim A^{co q} = " + std::to_string(coinv_r.dim()));
    }

  // smatrix, phi and classes methods agree
  if (want("q.centralizer-methods"))
    for (const auto& d : in.lattice) {
      auto s = centralizer(in, d.simples, CentralizerMethod::SMatrix).simples;
      auto p = centralizer(in, d.simples, CentralizerMethod::Phi).simples;
      std::string detail;
      bool ok = s == p;
      try {
        auto c = centralizer(in, d.simples, CentralizerMethod::Classes).simples;
        ok = ok && s == c;
        detail = "smatrix " + impl::set_str(s) + ", phi " + impl::set_str(p) + ", classes " + impl::set_str(c);
      } catch (const InternalMismatch& e) {
        ok = false;
        detail = e.what();
      }
      add("q.centralizer-methods", impl::subcat_subject(d.simples), ok, detail);
    }

  // triple conventions: Rep(D//C(M,H,l)) = S(M,H,l^-1),
  // S(M,H,l)' = S(H,M,(l^op)^-1), phi_R((D//C(M,H,l))^*) = C(H,M,(l^op)^-1)
  if (want("r.quotient-triple") || want("s.centralizer-triple") || want("t.coideal-dual-triple")) {
    if (!is_double) {
      for (const char* id : {"r.quotient-triple", "s.centralizer-triple", "t.coideal-dual-triple"})
        if (want(id))
          na(id, "triples parameterize doubles only");
    } else {
      const Group& g = in.group;
      auto normals = normal_subgroups(g);
      auto sub = [&](const Subgroup& m, const Subgroup& h, const Bicharacter& b) {
        return subcat_from_triple(g, in.simples, in.n, in.dual, TripleTag{m, h, 0, b}).simples;
      };
      for (const Subgroup& m : normals)
        for (const Subgroup& h : normals) {
          if (!commute_elementwise(g, m, h))
            continue;
          auto bis = enumerate_invariant_bicharacters(g, m, h);
          for (std::size_t bi = 0; bi < bis.size(); ++bi) {
            const Bicharacter& b = bis[bi];
            nlohmann::json subj = {{"triple", "M=" + impl::gens_label(g, m) + ",H=" + impl::gens_label(g, h) +
                                                  ",B=" + std::to_string(bi)}};
            Bicharacter dual_b = b.op().inverse();
            CoidealSubalgebra c = build_coideal(a, g, Triple{m, h, b, static_cast<int>(bi)}, false);
            coideal_integral(a, c);
            if (want("r.quotient-triple"))
              add("r.quotient-triple", subj, quotient_irreps(a, in.chars, c.integral) == sub(m, h, b.inverse()));
            if (want("s.centralizer-triple"))
              add("s.centralizer-triple", subj,
                  centralizer_by_smatrix(in.s, in.dims, sub(m, h, b)) == sub(h, m, dual_b));
            if (want("t.coideal-dual-triple")) {
              Subspace star = centralizer_coideal(a, c.integral);
              add("t.coideal-dual-triple", subj,
                  star == build_coideal(a, g, Triple{h, m, dual_b, 0}, false).space);
            }
          }
        }
    }
  }

  // class dimensions, F_j(Lambda) = 1/n_j, sum of C_j = dim(A) Lambda
  if (want("u.class-structure")) {
    Vec total(dim);
    for (std::size_t j = 0; j < in.classes.size(); ++j) {
      const auto& cj = in.classes[j];
      axpy(total, CycloNumber(1), cj.sum);
      std::size_t sq = 0;
      for (int s : in.f.blocks[j])
        sq += static_cast<std::size_t>(in.dims[s]) * in.dims[s];
      std::vector<Vec> prods;
      for (std::size_t k = 0; k < dim; ++k)
        prods.push_back(a.convolve(a.basis(static_cast<int>(k)), in.f.f[j]));
      std::size_t dfj = Subspace::span(dim, prods).dim();
      bool integral_n = dfj > 0 && dim % dfj == 0;
      CycloNumber fl = dot(in.f.f[j], in.integrals.lambda);
      bool ok = integral_n && fl == CycloNumber(Rational(static_cast<std::int64_t>(dfj), static_cast<std::int64_t>(dim)));
      // in the factorizable case dim C^j = dim(V_j)^2
      if (cx.factorizable())
        ok = ok && cj.space.dim() == sq;
      add("u.class-structure", {{"class", j}}, ok,
          "dim C^j = " + std::to_string(cj.space.dim()) + ", n_j = " + (integral_n ? std::to_string(dim / dfj) : "?"));
    }
    add("u.class-structure", {{"class", "all"}}, vec_equal(total, scale(in.integrals.lambda, CycloNumber(static_cast<std::int64_t>(dim)))),
        "sum of class sums = dim(A) Lambda");
  }

  // Lambda_L = (1/dim L) sum_{C^j in L} C_j, and {j : C^j in L} = {j : F_j(Lambda_L) != 0}
  if (want("v.integral-decomposition"))
    for (std::size_t i = 0; i < in.coideals.size(); ++i) {
      const auto& c = in.coideals[i].coideal;
      Vec acc(dim);
      bool same = true;
      for (std::size_t j = 0; j < in.classes.size(); ++j) {
        bool inside = in.classes[j].space.is_subspace_of(c.space);
        if (inside)
          axpy(acc, CycloNumber(1), in.classes[j].sum);
        same = same && inside == !dot(in.f.f[j], c.integral).is_zero();
      }
      acc = scale(acc, CycloNumber(Rational(1, static_cast<std::int64_t>(c.dim()))));
      add("v.integral-decomposition", impl::coideal_subject(in, i), same && vec_equal(acc, c.integral));
    }

  // <V> = Rep(A//LKer(V)) for each simple V
  if (want("w.generated-subcategory"))
    for (std::size_t i = 0; i < in.rank(); ++i) {
      auto gen = generated_subcategory(in, {static_cast<int>(i)}).simples;
      auto q = cx.quotient_of(cx.lker[i]);
      add("w.generated-subcategory", {{"simple", i}}, gen == q, impl::set_str(gen) + " vs " + impl::set_str(q));
    }

  // phi_R(chi f) = phi_R(chi) phi_R(f) for characters chi and random f
  if (want("x.drinfeld-character-product")) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int sample = 0; sample < 4; ++sample) {
      Vec f(dim);
      for (auto& x : f)
        x = CycloNumber(coeff(rng));
      Vec pf = a.drinfeld_map(f);
      std::size_t bad = 0;
      for (const Vec& chi : in.chars)
        if (!vec_equal(a.drinfeld_map(a.convolve(chi, f)), a.multiply(a.drinfeld_map(chi), pf)))
          ++bad;
      add("x.drinfeld-character-product", {{"sample", sample}, {"seed", seed}}, bad == 0,
          std::to_string(in.rank() - bad) + "/" + std::to_string(in.rank()) + " characters");
    }
  }

  rep.sort();
  return rep;
}

// Report for a group whose algebra would exceed the dimension bound: every
// requested check is recorded as skipped.
inline Report skipped_report(const std::string& group, const std::string& instance, Suite suite,
                             const std::string& why) {
  Report rep;
  rep.group = group;
  rep.instance = instance;
  for (const auto& id : check_ids(suite))
    rep.checks.push_back(CheckRecord{id, {{"instance", instance}}, true, true, "skipped: " + why});
  rep.sort();
  return rep;
}

} // namespace hopfcat

#endif
