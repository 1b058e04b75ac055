#include <gtest/gtest.h>

#include "pcmtk/similarity.hpp"

using namespace pcmtk;

namespace {

// Independent statement of the shared-axiom counts and system sizes.
struct Pair {
  const char* a;
  const char* b;
  double shared;
  double size_a;
  double size_b;
};

constexpr Pair kPairs[] = {
    {"KS", "KU", 1, 3, 4}, {"KS", "BF", 2, 3, 5}, {"KS", "CS", 1, 3, 6},
    {"KU", "BF", 3, 4, 5}, {"KU", "CS", 2, 4, 6}, {"BF", "CS", 1, 5, 6},
};

}  // namespace

TEST(Jaccard, SumOfSizesDenominator) {
  for (const auto& p : kPairs) {
    EXPECT_DOUBLE_EQ(jaccard(p.a, p.b), p.shared / (p.size_a + p.size_b)) << p.a << "-" << p.b;
    EXPECT_DOUBLE_EQ(jaccard(p.b, p.a), jaccard(p.a, p.b));
  }
}

TEST(Jaccard, PublishedRoundedValues) {
  EXPECT_NEAR(jaccard("KS", "KU"), 0.1429, 5e-5);
  EXPECT_NEAR(jaccard("KS", "BF"), 0.25, 5e-5);
  EXPECT_NEAR(jaccard("KS", "CS"), 0.1111, 5e-5);
  EXPECT_NEAR(jaccard("KU", "BF"), 0.3333, 5e-5);
  EXPECT_NEAR(jaccard("KU", "CS"), 0.2, 5e-5);
  EXPECT_NEAR(jaccard("BF", "CS"), 0.0909, 5e-5);
}

TEST(Jaccard, DiagonalIsOne) {
  for (const auto& s : kAxiomSystems) {
    EXPECT_EQ(jaccard(s.name, s.name), 1.0);
    EXPECT_EQ(jaccard_set_union(s.name, s.name), 1.0);
    EXPECT_EQ(shared_axioms(s.name, s.name), s.axiom_count);
  }
}

TEST(Jaccard, SetUnionVariant) {
  for (const auto& p : kPairs)
    EXPECT_DOUBLE_EQ(jaccard_set_union(p.a, p.b), p.shared / (p.size_a + p.size_b - p.shared)) << p.a << "-" << p.b;
  EXPECT_DOUBLE_EQ(jaccard_set_union("KU", "BF"), 0.5);
}

TEST(Jaccard, UnknownSystemThrows) {
  try {
    jaccard("KS", "XX");
    FAIL();
  } catch (const PcmError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSystem);
  }
  EXPECT_THROW(axiom_system("ks"), PcmError);
}

TEST(SimilarityMatrix, SymmetricWithUnitDiagonal) {
  const auto m = similarity_matrix();
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(m[i][i], 1.0);
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(m[i][j], m[j][i]);
      EXPECT_GE(m[i][j], 0.0);
      EXPECT_LE(m[i][j], 1.0);
    }
  }
  EXPECT_EQ(kAxiomSystems[0].name, "KS");
  EXPECT_EQ(kAxiomSystems[3].name, "CS");
}
