#include <gtest/gtest.h>

#include "support.hpp"

using namespace smallcover;

TEST(BitVector, XorDotAndWeight) {
  const BitVector a = BitVector::from_string("1101");
  const BitVector b = BitVector::from_string("0111");
  EXPECT_EQ((a + b).to_string(), "1010");
  EXPECT_EQ((a & b).to_string(), "0101");
  EXPECT_FALSE(dot(a, b));  // two common ones
  EXPECT_TRUE(dot(a, BitVector::from_string("1000")));
  EXPECT_EQ(a.weight(), 3u);
  EXPECT_EQ(BitVector::unit(5, 3).to_string(), "00010");
  EXPECT_THROW(BitVector::from_string("10x"), std::invalid_argument);
}

TEST(BitVector, WideVectorsCrossWordBoundaries) {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.weight(), 3u);
  EXPECT_EQ(v.lowest(), 0u);
  v.flip(0);
  EXPECT_EQ(v.lowest(), 64u);
  EXPECT_EQ(BitVector::from_string(v.to_string()), v);
  EXPECT_EQ(v.resized(65).weight(), 1u);
  EXPECT_EQ(v.concat(BitVector::from_string("1")).size(), 131u);
}

TEST(BitVector, OrderIsLowestDifferingBitFirst) {
  EXPECT_LT(BitVector::from_string("0111"), BitVector::from_string("1000"));
  EXPECT_LT(BitVector::from_string("1000"), BitVector::from_string("1001"));
  EXPECT_LT(BitVector::from_string("11"), BitVector::from_string("000"));
}

TEST(Rref, KnownMatrix) {
  BitMatrix m(4);
  m.push_back(BitVector::from_string("1100"));
  m.push_back(BitVector::from_string("0110"));
  m.push_back(BitVector::from_string("1010"));
  const RrefResult r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.matrix[0].to_string(), "1010");
  EXPECT_EQ(r.matrix[1].to_string(), "0110");
}

TEST(Rref, EmptyAndZero) {
  EXPECT_EQ(rank(BitMatrix(3)), 0u);
  BitMatrix z(3);
  z.push_back(BitVector(3));
  EXPECT_EQ(rank(z), 0u);
  EXPECT_THROW(z.push_back(BitVector(4)), std::invalid_argument);
}

// rref is idempotent, keeps the rank and the row space.
TEST(RrefProperty, IdempotentAndRowSpacePreserving) {
  auto rng = sctest::make_rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 70;
    BitMatrix m(cols);
    for (std::size_t r = 0; r < rows; ++r) m.push_back(sctest::random_vector(rng, cols));
    const RrefResult once = rref(m);
    const RrefResult twice = rref(once.matrix);
    ASSERT_EQ(once.matrix, twice.matrix) << "seed " << sctest::test_seed() << " trial " << trial;
    ASSERT_LE(once.rank, std::min(rows, cols));

    SpanBuilder reduced(cols);
    for (const auto& row : once.matrix.row_list()) reduced.insert(row);
    for (const auto& row : m.row_list()) ASSERT_TRUE(reduced.contains(row));
    SpanBuilder original(cols);
    for (const auto& row : m.row_list()) original.insert(row);
    ASSERT_EQ(original.rank(), once.rank);
    // Random combinations of the input rows stay in the span.
    for (int j = 0; j < 5; ++j) {
      BitVector combo(cols);
      for (const auto& row : m.row_list()) {
        if (rng() & 1U) combo ^= row;
      }
      ASSERT_TRUE(reduced.contains(combo));
    }
  }
}

TEST(SpanBuilder, CoordinatesReconstructVectors) {
  auto rng = sctest::make_rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + rng() % 20;
    SpanBuilder span(dim);
    std::vector<BitVector> inserted;
    for (int i = 0; i < 6; ++i) {
      BitVector v = sctest::random_vector(rng, dim);
      if (span.insert(v)) inserted.push_back(v);
    }
    BitVector target(dim);
    for (const auto& v : inserted) {
      if (rng() & 1U) target ^= v;
    }
    const auto coords = span.coordinates(target);
    ASSERT_TRUE(coords.has_value());
    BitVector rebuilt(dim);
    for (std::size_t i = 0; i < inserted.size(); ++i) {
      if (coords->test(i)) rebuilt ^= inserted[i];
    }
    ASSERT_EQ(rebuilt, target);
  }
}

TEST(SpanBuilder, Independence) {
  EXPECT_TRUE(linearly_independent({BitVector::from_string("100"), BitVector::from_string("110")}, 3));
  EXPECT_FALSE(linearly_independent(
      {BitVector::from_string("100"), BitVector::from_string("010"), BitVector::from_string("110")}, 3));
  EXPECT_FALSE(linearly_independent({BitVector(3)}, 3));
}
