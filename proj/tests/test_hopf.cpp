#include <gtest/gtest.h>

#include "hopfcat/chartable.hpp"
#include "hopfcat/hopf.hpp"

using namespace hopfcat;

namespace {

std::vector<Vec> group_characters(const QTAlgebra& a, const Group& g) {
  auto t = character_table(g);
  std::vector<Vec> out;
  for (int i = 0; i < t.size(); ++i) {
    Vec chi(a.dim());
    for (int x = 0; x < g.order(); ++x)
      chi[x] = t.value(i, x);
    out.push_back(chi);
  }
  return out;
}

} // namespace

TEST(Hopf, TrivialGroup) {
  Group g = parse_group_spec("Z1");
  QTAlgebra d = build_double(g);
  EXPECT_EQ(d.dim(), 1);
  ASSERT_EQ(d.rmatrix().size(), 1u);
  auto in = integrals(d);
  EXPECT_EQ(in.lambda, Vec{1});
  EXPECT_EQ(in.t, d.counit());
  QTAlgebra k = build_triangular(g);
  EXPECT_EQ(k.to_json(), d.to_json().at("name") == k.to_json().at("name") ? k.to_json() : [&] {
    auto j = d.to_json();
    j["name"] = k.name();
    j["labels"] = k.labels();
    return j;
  }());
}

TEST(Hopf, DoubleOfZ2Products) {
  Group g = parse_group_spec("Z2");
  QTAlgebra d = build_double(g);
  EXPECT_EQ(d.dim(), 4);
  // (p_g|h)(p_g'|h') nonzero iff g = h g' h^-1, i.e. g = g' for abelian G
  for (int g1 = 0; g1 < 2; ++g1)
    for (int h1 = 0; h1 < 2; ++h1)
      for (int g2 = 0; g2 < 2; ++g2)
        for (int h2 = 0; h2 < 2; ++h2)
          EXPECT_EQ(d.product(g1 * 2 + h1, g2 * 2 + h2).empty(), g1 != g2);
  EXPECT_TRUE(is_factorizable(d));
  EXPECT_EQ(compute_K_A(d).dim(), 4u);
}

TEST(Hopf, MonodromyOfDoubleMatchesClosedForm) {
  for (const char* name : {"Z2", "S3", "Q8"}) {
    Group g = parse_group_spec(name);
    QTAlgebra d = build_double(g);
    int n = g.order();
    const auto& q = d.monodromy();
    ASSERT_EQ(q.size(), static_cast<std::size_t>(n * n)) << name;
    // Q = sum (p_g|h) (x) (p_{g h g^-1}|g)
    std::set<std::pair<int, int>> expected;
    for (int x = 0; x < n; ++x)
      for (int h = 0; h < n; ++h)
        expected.insert({x * n + h, g.conj(x, h) * n + x});
    for (const auto& t : q) {
      EXPECT_TRUE(t.c.is_one());
      EXPECT_TRUE(expected.count({t.i, t.j}));
    }
  }
}

TEST(Hopf, IntegralsOfDouble) {
  for (const char* name : {"Z2", "S3", "D4"}) {
    Group g = parse_group_spec(name);
    QTAlgebra d = build_double(g);
    int n = g.order();
    auto in = integrals(d);
    // Lambda = p_e |x| (1/|G|) sum_h h
    Vec expect(d.dim());
    for (int h = 0; h < n; ++h)
      expect[h] = CycloNumber(Rational(1, n));
    EXPECT_EQ(in.lambda, expect) << name;
    EXPECT_EQ(d.multiply(in.lambda, in.lambda), in.lambda);
    EXPECT_EQ(dot(in.t, in.lambda), CycloNumber(Rational(1, d.dim())));
    EXPECT_EQ(d.convolve(in.t, in.t), in.t);
  }
}

TEST(Hopf, DrinfeldMap) {
  Group g = parse_group_spec("S3");
  QTAlgebra d = build_double(g);
  EXPECT_EQ(d.drinfeld_map(d.counit()), d.one());
  EXPECT_EQ(compute_K_A(d).dim(), 36u);
  QTAlgebra k = build_triangular(g);
  Vec f(6);
  for (int i = 0; i < 6; ++i)
    f[i] = CycloNumber(i * i - 2);
  EXPECT_EQ(k.drinfeld_map(f), scale(k.one(), dot(f, k.one())));
  EXPECT_EQ(compute_K_A(k).dim(), 1u);
  EXPECT_EQ(compute_K_A(build_triangular(parse_group_spec("Z1"))).dim(), 1u);
}

TEST(Hopf, Harpoons) {
  Group g = parse_group_spec("Z2");
  QTAlgebra d = build_double(g);
  Vec a{1, 2, 3, 4};
  EXPECT_EQ(d.harpoon_left(a, d.counit()), a);
  EXPECT_EQ(d.harpoon_right(d.counit(), a), a);
  QTAlgebra k = build_triangular(parse_group_spec("S3"));
  Vec f{1, 2, 3, 4, 5, 6};
  for (int x = 0; x < 6; ++x)
    EXPECT_EQ(k.harpoon_left(k.basis(x), f), scale(k.basis(x), f[x]));
  // (p_0|h) <- f = sum_{ab=0} f(p_a|h) (p_b|h)
  Vec f4{5, 6, 7, 8};
  for (int h = 0; h < 2; ++h) {
    Vec expect(4);
    for (int x = 0; x < 2; ++x)
      expect[x * 2 + h] += f4[x * 2 + h];  // a = b = x
    EXPECT_EQ(d.harpoon_left(d.basis(h), f4), expect);
  }
}

TEST(Hopf, TriangularIdempotentsAndClasses) {
  Group g = parse_group_spec("S3");
  QTAlgebra k = build_triangular(g);
  auto in = integrals(k);
  Vec expect(6, CycloNumber(Rational(1, 6)));
  EXPECT_EQ(in.lambda, expect);
  auto chars = group_characters(k, g);
  auto e = central_idempotents(k, in.lambda, chars);
  EXPECT_EQ(e.size(), 3u);
  auto f = char_ring_idempotents(k, chars, e, in.t);
  EXPECT_FALSE(f.factorizable);
  ASSERT_EQ(f.f.size(), 3u);
  EXPECT_EQ(f.f[0], in.t);
  EXPECT_EQ(f.blocks[0], (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(f.blocks[1].empty());
}

TEST(HopfProperty, AxiomsHoldOnCatalog) {
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"}) {
    Group g = parse_group_spec(name);
    EXPECT_NO_THROW(build_double(g)) << name;
    EXPECT_NO_THROW(build_triangular(g)) << name;
  }
  EXPECT_THROW(build_double(parse_group_spec("S4")), BoundExceeded);
}
