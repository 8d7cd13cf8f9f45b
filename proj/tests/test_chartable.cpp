#include <gtest/gtest.h>

#include "hopfcat/chartable.hpp"

using namespace hopfcat;

namespace {

CycloNumber z(int n, int e = 1) { return CycloNumber::zeta(n, e); }

// Independent check of irreducibility: the central character of each row must
// satisfy the class-sum relation w_i w_j = sum_k a_ijk w_k exactly, with the
// coefficients counted directly from the multiplication table.
void expect_burnside_relation(const CharacterTable& t) {
  const Group& g = t.group;
  std::size_t r = t.classes.size();
  for (std::size_t row = 0; row < r; ++row) {
    std::vector<CycloNumber> w(r);
    CycloNumber d(t.degrees[row]);
    for (std::size_t k = 0; k < r; ++k)
      w[k] = t.chars[row][k].scaled(t.classes[k].size()) / d;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        CycloNumber rhs;
        for (std::size_t k = 0; k < r; ++k) {
          int count = 0;
          for (int x : t.classes[i].members)
            for (int y : t.classes[j].members)
              if (g.mul(x, y) == t.classes[k].representative)
                ++count;
          rhs += w[k].scaled(count);
        }
        EXPECT_EQ(w[i] * w[j], rhs) << g.name() << " row " << row;
      }
  }
}

} // namespace

TEST(CharacterTable, S3) {
  auto t = character_table(parse_group_spec("S3"));
  ASSERT_EQ(t.size(), 3);
  // classes are e, transpositions, 3-cycles
  EXPECT_EQ(t.chars[0], (std::vector<CycloNumber>{1, 1, 1}));
  EXPECT_EQ(t.chars[1], (std::vector<CycloNumber>{1, -1, 1}));
  EXPECT_EQ(t.chars[2], (std::vector<CycloNumber>{2, 0, -1}));
  expect_burnside_relation(t);
  EXPECT_EQ(character_value(t, 0, 4), CycloNumber(1));
  EXPECT_EQ(character_value(t, 2, t.classes[2].representative), CycloNumber(-1));
}

TEST(CharacterTable, Z2AndZ4) {
  auto t2 = character_table(parse_group_spec("Z2"));
  EXPECT_EQ(t2.chars[0], (std::vector<CycloNumber>{1, 1}));
  EXPECT_EQ(t2.chars[1], (std::vector<CycloNumber>{1, -1}));
  auto t4 = character_table(parse_group_spec("Z4"));
  bool found_faithful = false, found_conj = false;
  for (int i = 0; i < 4; ++i) {
    if (character_value(t4, i, 1) == z(4))
      found_faithful = true;
    if (character_value(t4, i, 1) == z(4, 3))
      found_conj = true;
  }
  EXPECT_TRUE(found_faithful);
  EXPECT_TRUE(found_conj);
}

TEST(CharacterTable, Q8Degrees) {
  auto t = character_table(parse_group_spec("Q8"));
  EXPECT_EQ(t.degrees, (std::vector<int>{1, 1, 1, 1, 2}));
  expect_burnside_relation(t);
}

TEST(CharacterTable, BoundExceeded) {
  EXPECT_THROW(character_table(parse_group_spec("Z30")), BoundExceeded);
  EXPECT_EQ(character_table(parse_group_spec("Z30"), 30).size(), 30);
}

TEST(CharacterTableProperty, OrthogonalityAndIntegrality) {
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z6", "S3", "D4", "Q8", "A4", "S4", "D5", "D6", "Z3xZ3", "Z2xZ4"}) {
    Group g = parse_group_spec(name);
    auto t = character_table(g);
    std::size_t r = t.classes.size();
    ASSERT_EQ(t.chars.size(), r);
    EXPECT_TRUE(t.chars[0] == std::vector<CycloNumber>(r, CycloNumber(1)));
    int sumsq = 0;
    for (int d : t.degrees) {
      sumsq += d * d;
      EXPECT_EQ(g.order() % d, 0) << name;
    }
    EXPECT_EQ(sumsq, g.order());
    int e = g.exponent();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k)
        EXPECT_EQ(e % t.chars[i][k].canonical().order(), 0) << name;
    // row orthogonality
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        CycloNumber s;
        for (std::size_t k = 0; k < r; ++k)
          s += (t.chars[i][k] * t.chars[j][k].conjugate()).scaled(t.classes[k].size());
        EXPECT_EQ(s, CycloNumber(i == j ? g.order() : 0));
      }
    // column orthogonality
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t c2 = 0; c2 < r; ++c2) {
        CycloNumber s;
        for (std::size_t i = 0; i < r; ++i)
          s += t.chars[i][c] * t.chars[i][c2].conjugate();
        int cent = centralizer_subgroup(g, t.classes[c].representative).order();
        EXPECT_EQ(s, CycloNumber(c == c2 ? cent : 0));
      }
    expect_burnside_relation(t);
  }
}

TEST(CharacterTable, JsonRoundTrip) {
  for (const char* name : {"S3", "Z4", "Q8", "Z3xZ3"}) {
    Group g = parse_group_spec(name);
    auto t = character_table(g);
    auto j = chartable_to_json(t);
    auto back = chartable_from_json(g, nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.chars, t.chars);
    EXPECT_EQ(back.degrees, t.degrees);
    EXPECT_EQ(chartable_to_json(back).dump(), j.dump());
  }
}
