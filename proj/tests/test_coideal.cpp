#include <gtest/gtest.h>

#include <set>

#include "hopfcat/category.hpp"
#include "hopfcat/coideal.hpp"

using namespace hopfcat;

namespace {

Subgroup sub(const Group& g, std::vector<int> gens) { return closure(g, gens); }

// multiplicative in each variable and G-invariant, checked on all elements
bool is_invariant_bicharacter(const Group& g, const Bicharacter& b) {
  for (int x : b.m.members)
    for (int y : b.m.members)
      for (int h : b.h.members)
        if ((b.exponent(x, h) + b.exponent(y, h)) % b.order != b.exponent(g.mul(x, y), h))
          return false;
  for (int x : b.m.members)
    for (int h : b.h.members)
      for (int k : b.h.members)
        if ((b.exponent(x, h) + b.exponent(x, k)) % b.order != b.exponent(x, g.mul(h, k)))
          return false;
  for (int s = 0; s < g.order(); ++s)
    for (int x : b.m.members)
      for (int h : b.h.members)
        if (b.exponent(g.conj(s, x), g.conj(s, h)) != b.exponent(x, h))
          return false;
  return true;
}

// Integral by solving the full system l x = eps(l) x over all of A.
Vec integral_oracle(const QTAlgebra& a, const Subspace& l) {
  const int n = a.dim();
  Echelon eqs(n);
  for (const Vec& y : l.basis())
    for (int coord = 0; coord < n; ++coord) {
      Vec row(n);
      for (int k = 0; k < n; ++k)
        row[k] = a.multiply(y, a.basis(k))[coord];
      row[coord] -= a.epsilon(y);
      if (!is_zero_vec(row))
        eqs.add(row);
    }
  auto ker = eqs.kernel();
  // the integral is the unique solution lying in L
  Subspace sol = intersect(Subspace::span(n, ker), l);
  EXPECT_EQ(sol.dim(), 1u);
  Vec x = sol.basis()[0];
  return scale(x, a.epsilon(x).inverse());
}

} // namespace

TEST(Bicharacter, Counts) {
  Group s3 = parse_group_spec("S3");
  Subgroup a3 = sub(s3, {3});  // a 3-cycle
  ASSERT_EQ(a3.order(), 3);
  EXPECT_EQ(enumerate_invariant_bicharacters(s3, a3, a3).size(), 3u);
  EXPECT_EQ(enumerate_invariant_bicharacters(s3, trivial_subgroup(), whole_group(s3)).size(), 1u);
  EXPECT_THROW(enumerate_invariant_bicharacters(s3, a3, whole_group(s3)), PreconditionViolated);

  // Hom(Z_a (x) Z_b, mu) has gcd(a, b) elements
  Group z4 = parse_group_spec("Z4");
  EXPECT_EQ(enumerate_invariant_bicharacters(z4, whole_group(z4), whole_group(z4)).size(), 4u);
  EXPECT_EQ(enumerate_invariant_bicharacters(z4, whole_group(z4), sub(z4, {2})).size(), 2u);
  Group v4 = parse_group_spec("Z2xZ2");
  EXPECT_EQ(enumerate_invariant_bicharacters(v4, whole_group(v4), whole_group(v4)).size(), 16u);
  Group z6 = parse_group_spec("Z6");
  EXPECT_EQ(enumerate_invariant_bicharacters(z6, sub(z6, {3}), sub(z6, {2})).size(), 1u);
}

TEST(Bicharacter, EnumeratedAreDistinctAndInvariant) {
  for (const char* name : {"Z4", "Z2xZ2", "S3", "D4", "Q8", "Z6"}) {
    Group g = parse_group_spec(name);
    auto normals = normal_subgroups(g);
    for (const Subgroup& m : normals)
      for (const Subgroup& h : normals) {
        if (!commute_elementwise(g, m, h))
          continue;
        auto bis = enumerate_invariant_bicharacters(g, m, h);
        ASSERT_FALSE(bis.empty());
        EXPECT_TRUE(bis[0].is_trivial()) << name;
        for (std::size_t i = 0; i < bis.size(); ++i) {
          EXPECT_TRUE(is_invariant_bicharacter(g, bis[i])) << name;
          for (std::size_t j = i + 1; j < bis.size(); ++j)
            EXPECT_FALSE(bis[i] == bis[j]);
        }
      }
  }
}

TEST(Coideal, ExtremeTriples) {
  Group g = parse_group_spec("S3");
  QTAlgebra a = build_double(g);
  const int n = g.order();
  auto triv = [&](const Subgroup& m, const Subgroup& h) {
    return Triple{m, h, enumerate_invariant_bicharacters(g, m, h)[0], 0};
  };
  Subgroup e = trivial_subgroup(), all = whole_group(g);
  auto unit = build_coideal(a, g, triv(all, e));
  EXPECT_EQ(unit.space, Subspace::span(a.dim(), {a.one()}));
  auto full = build_coideal(a, g, triv(e, all));
  EXPECT_EQ(full.dim(), static_cast<std::size_t>(a.dim()));
  auto fun = build_coideal(a, g, triv(e, e));
  std::vector<Vec> ps;
  for (int x = 0; x < n; ++x)
    ps.push_back(a.basis(x * n));
  EXPECT_EQ(fun.space, Subspace::span(a.dim(), ps));
  EXPECT_THROW(build_coideal(a, g, Triple{all, all, Bicharacter{all, all, 1, std::vector<int>(36, 0)}, 0}),
               PreconditionViolated);
}

TEST(Coideal, DimensionAndInvariants) {
  for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8"}) {
    Group g = parse_group_spec(name);
    QTAlgebra a = build_double(g);
    auto cs = enumerate_coideals(a, g, true);
    for (auto& c : cs) {
      ASSERT_TRUE(c.tag.has_value());
      EXPECT_EQ(c.dim(), static_cast<std::size_t>(c.tag->h.order() * (g.order() / c.tag->m.order())));
      EXPECT_EQ(a.dim() % static_cast<int>(c.dim()), 0) << name;
      EXPECT_TRUE(is_subalgebra(a, c.space));
      EXPECT_TRUE(is_left_coideal(a, c.space));
      EXPECT_TRUE(is_left_normal(a, c.space));
    }
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        EXPECT_FALSE(cs[i].space == cs[j].space);
  }
}

TEST(Coideal, NonNormalSubalgebraRejected) {
  // k^G |x| k<s> for a non-normal transposition is a subalgebra but not normal
  Group g = parse_group_spec("S3");
  QTAlgebra a = build_double(g);
  const int n = g.order();
  Subgroup t = sub(g, {1});
  ASSERT_EQ(t.order(), 2);
  ASSERT_FALSE(is_normal(g, t));
  std::vector<Vec> gens;
  for (int x = 0; x < n; ++x)
    for (int h : t.members)
      gens.push_back(a.basis(x * n + h));
  Subspace l = Subspace::span(a.dim(), gens);
  EXPECT_TRUE(is_subalgebra(a, l));
  EXPECT_TRUE(is_left_coideal(a, l));
  EXPECT_FALSE(is_left_normal(a, l));
}

TEST(Coideal, IntegralsMatchFullSystem) {
  for (const char* name : {"Z2", "Z4", "S3", "Q8"}) {
    Group g = parse_group_spec(name);
    QTAlgebra a = build_double(g);
    auto lam = integrals(a).lambda;
    for (auto& c : enumerate_coideals(a, g, false)) {
      const Vec& x = coideal_integral(a, c);
      EXPECT_EQ(x, integral_oracle(a, c.space)) << name;
      if (c.dim() == 1)
        EXPECT_EQ(x, a.one());
      if (c.dim() == static_cast<std::size_t>(a.dim()))
        EXPECT_EQ(x, lam);
    }
  }
}

TEST(Coideal, TriangularIntegralIsAverage) {
  Group g = parse_group_spec("D4");
  QTAlgebra a = build_triangular(g);
  for (auto& c : enumerate_coideals_triangular(a, g)) {
    Vec avg(a.dim());
    for (int x : c.normal_subgroup->members)
      avg[x] = CycloNumber(Rational(1, c.normal_subgroup->order()));
    EXPECT_EQ(coideal_integral(a, c), avg);
  }
}

TEST(Coideal, QuotientDualTwoWays) {
  for (const char* name : {"Z2", "Z3", "S3"}) {
    Group g = parse_group_spec(name);
    QTAlgebra a = build_double(g);
    for (auto& c : enumerate_coideals(a, g, false)) {
      Subspace q = quotient_dual(a, coideal_integral(a, c));
      EXPECT_EQ(q, quotient_dual_by_equations(a, c.space)) << name;
      EXPECT_EQ(q.dim() * c.dim(), static_cast<std::size_t>(a.dim()));
    }
  }
}

TEST(Coideal, ProductsAndIntersectionsStayInFamily) {
  Group g = parse_group_spec("S3");
  QTAlgebra a = build_double(g);
  auto cs = enumerate_coideals(a, g, false);
  for (const auto& l : cs)
    for (const auto& m : cs) {
      Subspace p = coideal_product(a, l.space, m.space);
      Subspace i = coideal_intersect(l.space, m.space);
      bool pin = false, iin = false;
      for (const auto& c : cs) {
        pin = pin || c.space == p;
        iin = iin || c.space == i;
      }
      EXPECT_TRUE(pin);
      EXPECT_TRUE(iin);
      EXPECT_EQ(p, coideal_product(a, m.space, l.space));
    }
}

TEST(LeftKernel, TrivialAndFaithful) {
  Group g = parse_group_spec("Z2");
  auto in = analyze_double(g);
  const auto& a = in.a();
  std::vector<const std::vector<Matrix>*> triv{&in.simples[0].matrices};
  EXPECT_EQ(left_kernel(a, triv).dim(), static_cast<std::size_t>(a.dim()));
  std::vector<const std::vector<Matrix>*> all;
  for (const auto& s : in.simples)
    all.push_back(&s.matrices);
  EXPECT_EQ(left_kernel(a, all), Subspace::span(a.dim(), {a.one()}));
}

TEST(LeftKernel, SimplesOfDoubleOfS3) {
  Group g = parse_group_spec("S3");
  auto in = analyze_double(g);
  ASSERT_TRUE(in.f.factorizable);
  for (std::size_t i = 0; i < in.rank(); ++i) {
    Subspace lk = left_kernel(in.a(), {&in.simples[i].matrices});
    Subspace acc(in.a().dim());
    for (std::size_t j = 0; j < in.classes.size(); ++j) {
      bool perp = true;
      for (int m : in.f.blocks[j])
        perp = perp && in.s(i, m) == CycloNumber(static_cast<std::int64_t>(in.dims[i]) * in.dims[m]);
      if (perp)
        acc = sum(acc, in.classes[j].space);
    }
    EXPECT_EQ(lk, acc) << "simple " << i;
    // <V> = Rep(A // LKer(V))
    CoidealSubalgebra l;
    l.space = lk;
    EXPECT_EQ(quotient_irreps(in.a(), in.chars, coideal_integral(in.a(), l)),
              fusion_closure(in.n, in.dual, {static_cast<int>(i)}))
        << "simple " << i;
  }
}
