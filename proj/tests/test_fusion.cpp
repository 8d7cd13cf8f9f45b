#include <gtest/gtest.h>

#include <set>

#include "hopfcat/category.hpp"

using namespace hopfcat;

namespace {

// Simple objects of D(kG) counted as sum over class representatives a of
// k(C_G(a)), with k(H) = |{(x,y) in H^2 : xy = yx}| / |H|.
int commuting_pair_count(const Group& g) {
  int total = 0;
  for (const auto& c : conjugacy_classes(g)) {
    std::vector<int> cent;
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(x, c.representative) == g.mul(c.representative, x))
        cent.push_back(x);
    int pairs = 0;
    for (int x : cent)
      for (int y : cent)
        pairs += g.mul(x, y) == g.mul(y, x);
    total += pairs / static_cast<int>(cent.size());
  }
  return total;
}

} // namespace

TEST(Irreps, MonomialRepresentationsOfGroups) {
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4"}) {
    Group g = parse_group_spec(name);
    auto t = character_table(g);
    for (int i = 0; i < t.size(); ++i) {
      auto rho = monomial_representation(t, i);
      for (int x = 0; x < g.order(); ++x) {
        EXPECT_EQ(rho[x].trace(), t.value(i, x)) << name;
        for (int y = 0; y < g.order(); y += 3)
          EXPECT_EQ(rho[x] * rho[y], rho[g.mul(x, y)]) << name;
      }
    }
  }
}

TEST(Irreps, DoubleOfS3) {
  Group g = parse_group_spec("S3");
  QTAlgebra a = build_double(g);
  auto simples = double_irreps(g);
  std::multiset<int> dims;
  for (const auto& s : simples) {
    dims.insert(s.dim);
    EXPECT_TRUE(is_representation(a, s.matrices));
  }
  EXPECT_EQ(dims, (std::multiset<int>{1, 1, 2, 2, 2, 2, 3, 3}));
  EXPECT_EQ(simples[0].dim, 1);
  EXPECT_EQ(simples[0].character, a.counit());
}

TEST(Irreps, CountsAndCharacters) {
  for (const char* name : {"Z1", "Z4", "Z2xZ2", "D4", "Q8", "Z6"}) {
    Group g = parse_group_spec(name);
    QTAlgebra a = build_double(g);
    auto simples = double_irreps(g);
    EXPECT_EQ(static_cast<int>(simples.size()), commuting_pair_count(g)) << name;
    std::vector<Vec> chars;
    for (const auto& s : simples) {
      EXPECT_TRUE(is_representation(a, s.matrices)) << name;
      chars.push_back(s.character);
    }
    // these characters are the ones that make the central idempotents work
    Vec lam = integrals(a).lambda;
    EXPECT_NO_THROW(central_idempotents(a, lam, chars)) << name;
  }
  EXPECT_THROW(double_irreps(parse_group_spec("Z13")), BoundExceeded);
}

TEST(SMatrix, DoubleOfZ2) {
  auto in = analyze_double(parse_group_spec("Z2"));
  ASSERT_EQ(in.rank(), 4u);
  // (a, chi) with a, chi in {0, 1}: s = (-1)^(a chi' + a' chi)
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      int ai = in.simples[i].rep, ci = in.simples[i].char_index;
      int aj = in.simples[j].rep, cj = in.simples[j].char_index;
      EXPECT_EQ(in.s(i, j), CycloNumber((ai * cj + aj * ci) % 2 ? -1 : 1));
    }
}

TEST(SMatrix, SymmetricUnitaryUpToScale) {
  for (const char* name : {"Z3", "S3", "Q8"}) {
    auto in = analyze_double(parse_group_spec(name));
    std::size_t r = in.rank();
    int dim = in.a().dim();
    for (std::size_t i = 0; i < r; ++i) {
      EXPECT_EQ(in.s(i, 0), CycloNumber(in.dims[i]));
      for (std::size_t j = 0; j < r; ++j) {
        EXPECT_EQ(in.s(i, j), in.s(j, i));
        // S S^* = dim(A) I, with s_{ij*} the conjugate of s_ij
        CycloNumber acc;
        for (std::size_t k = 0; k < r; ++k)
          acc += in.s(i, k) * in.s(j, in.dual[k]);
        EXPECT_EQ(acc, CycloNumber(i == j ? dim : 0)) << name;
      }
    }
  }
}

TEST(Fusion, DoubleOfS3Rules) {
  auto in = analyze_double(parse_group_spec("S3"));
  std::size_t r = in.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      int total = 0;
      for (std::size_t k = 0; k < r; ++k) {
        total += in.n[i][j][k] * in.dims[k];
        EXPECT_EQ(in.n[i][j][k], in.n[j][i][k]);
      }
      EXPECT_EQ(total, in.dims[i] * in.dims[j]);
      EXPECT_EQ(in.n[i][j][0], static_cast<int>(in.dual[i]) == static_cast<int>(j) ? 1 : 0);
    }
  // Verlinde: N_ij^k = (1/D) sum_m s_im s_jm conj(s_km) / s_0m
  int dim = in.a().dim();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        CycloNumber acc;
        for (std::size_t m = 0; m < r; ++m)
          acc += in.s(i, m) * in.s(j, m) * in.s(in.dual[k], m) * CycloNumber(Rational(1, in.dims[m]));
        EXPECT_EQ(acc * CycloNumber(Rational(1, dim)), CycloNumber(in.n[i][j][k]));
      }
}

TEST(Subcategories, Counts) {
  const std::vector<std::pair<const char*, std::size_t>> expect{{"Z1", 1}, {"Z2", 5}, {"Z4", 15}, {"Z6", 30}};
  for (const auto& [name, count] : expect) {
    auto in = analyze_double(parse_group_spec(name));
    EXPECT_EQ(in.lattice.size(), count) << name;
    EXPECT_EQ(in.coideals.size(), count) << name;
  }
}

TEST(Subcategories, BruteForceOraclesAgree) {
  for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8", "D4"}) {
    auto in = analyze_double(parse_group_spec(name));
    auto bf = brute_force_subcats(in.n, in.dual);
    if (in.rank() <= 20)
      EXPECT_EQ(bf, subset_search_subcats(in.n, in.dual)) << name;
    else
      EXPECT_THROW(subset_search_subcats(in.n, in.dual), BoundExceeded);
    EXPECT_EQ(bf.size(), in.lattice.size()) << name;
    // lattice closed under meet and join
    for (const auto& x : in.lattice)
      for (const auto& y : in.lattice) {
        EXPECT_GE(in.subcat_index(subcat_meet(x.simples, y.simples)), 0);
        EXPECT_GE(in.subcat_index(subcat_join(in.n, in.dual, x.simples, y.simples)), 0);
      }
    // every subcategory is Rep(A//L) for exactly one coideal in the family
    std::set<std::vector<int>> quotients;
    for (const auto& c : in.coideals)
      quotients.insert(c.quotient);
    EXPECT_EQ(quotients.size(), in.coideals.size()) << name;
    EXPECT_EQ(std::vector<std::vector<int>>(quotients.begin(), quotients.end()), bf) << name;
  }
}

TEST(Subcategories, QuotientReversesInclusion) {
  auto in = analyze_double(parse_group_spec("S3"));
  for (const auto& l : in.coideals)
    for (const auto& m : in.coideals)
      if (l.coideal.space.is_subspace_of(m.coideal.space))
        EXPECT_TRUE(std::includes(l.quotient.begin(), l.quotient.end(), m.quotient.begin(), m.quotient.end()));
}

TEST(Centralizer, ThreeMethodsAgree) {
  for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8"}) {
    auto in = analyze_double(parse_group_spec(name));
    for (const auto& d : in.lattice) {
      auto s = centralizer(in, d.simples, CentralizerMethod::SMatrix);
      auto p = centralizer(in, d.simples, CentralizerMethod::Phi);
      auto c = centralizer(in, d.simples, CentralizerMethod::Classes);
      EXPECT_EQ(s.simples, p.simples) << name;
      EXPECT_EQ(s.simples, c.simples) << name;
      // FPdim(D) FPdim(D') = FPdim(C) for modular C
      EXPECT_EQ(d.fpdim * s.fpdim, in.a().dim()) << name;
      EXPECT_EQ(centralizer(in, s.simples, CentralizerMethod::SMatrix).simples, d.simples);
    }
  }
}

TEST(Centralizer, TriangularIsWholeCategory) {
  for (const char* name : {"S3", "D4"}) {
    auto in = analyze_triangular(parse_group_spec(name));
    EXPECT_FALSE(in.f.factorizable);
    std::vector<int> all(in.rank());
    for (std::size_t i = 0; i < all.size(); ++i)
      all[i] = static_cast<int>(i);
    EXPECT_EQ(in.lattice.size(), in.coideals.size());
    for (const auto& d : in.lattice)
      for (auto m : {CentralizerMethod::SMatrix, CentralizerMethod::Phi, CentralizerMethod::Classes})
        EXPECT_EQ(centralizer(in, d.simples, m).simples, all) << name << " " << method_name(m);
  }
}

TEST(Centralizer, MissingCoidealIsReported) {
  auto in = analyze_double(parse_group_spec("Z2"));
  EXPECT_THROW(centralizer(in, {0, 1, 2}, CentralizerMethod::Phi), MethodPreconditionViolated);
}
