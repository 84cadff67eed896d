#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace smallcover;

namespace {

CohomologyElement random_element(std::mt19937_64& rng, const QuotientPtr& ring, std::size_t d) {
  return CohomologyElement(ring, d, sctest::random_homogeneous(rng, ring->num_generators(), d));
}

}  // namespace

TEST(StiefelWhitney, PentagonCovers) {
  // Connected sum of three projective planes: chi = 4 - 5 = -1.
  const Coloring surface = make_coloring(sctest::pentagon(), {"10", "01", "10", "01", "11"});
  const SWData sw = total_sw(surface);
  EXPECT_FALSE(sw.orientable);
  EXPECT_EQ(sw.e_set, (FacetSet{5}));
  EXPECT_FALSE(sw.w[1].is_zero());
  // w2 of a surface is chi mod 2.
  EXPECT_FALSE(sw.w[2].is_zero());
}

TEST(StiefelWhitney, W1IsTheEvenWeightSum) {
  for (const auto& cls : sctest::dodecahedral_classes()) {
    const SWData sw = total_sw(cls.representative);
    const W1Hypersurface w1 = w1_hypersurface(cls.representative, sw.ring);
    ASSERT_TRUE(w1.element.has_value());
    EXPECT_EQ(*w1.element, sw.w[1]);
    EXPECT_EQ(w1.e_set, sw.e_set);
    EXPECT_EQ(w1.orientable(), sw.orientable);
  }
}

TEST(StiefelWhitney, DodecahedralIdentities) {
  std::size_t w2_nonzero = 0;
  std::set<std::size_t> w2_zero, order3;
  const auto& classes = sctest::dodecahedral_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const SWData sw = total_sw(classes[i].representative);
    EXPECT_EQ(sw.ring->dims(), (std::vector<std::size_t>{1, 9, 9, 1}));
    EXPECT_TRUE(sw.w[3].is_zero());
    EXPECT_EQ(sw.w[2], sw.w[1] * sw.w[1]);
    EXPECT_EQ(sq1(sw.w[2]), sw.w[1] * sw.w[2] + sw.w[3]);
    if (!sw.w[2].is_zero()) {
      ++w2_nonzero;
      EXPECT_FALSE(sw.w[1].is_zero());
    } else {
      w2_zero.insert(i);
    }
    if (classes[i].has_order3_symmetry) order3.insert(i);
  }
  EXPECT_EQ(w2_nonzero, 22u);
  EXPECT_EQ(w2_zero, order3);
}

TEST(StiefelWhitney, RejectsNonSmallCover) {
  const Coloring wide = make_coloring(sctest::pentagon(), {"100", "010", "100", "010", "001"});
  EXPECT_THROW(total_sw(wide), NotSmallCover);
  // The hypersurface formula still applies.
  const W1Hypersurface w1 = w1_hypersurface(wide);
  EXPECT_TRUE(w1.e_set.empty());
  EXPECT_FALSE(w1.element.has_value());
  EXPECT_THROW(w1_hypersurface(make_coloring(sctest::pentagon(), {"10", "10", "01", "10", "01"})), ImproperColoring);
}

TEST(Sq1, DegreeOverflow) {
  const SWData sw = total_sw(sctest::dodecahedral_classes().front().representative);
  EXPECT_THROW(sq1(sw.w[3]), std::out_of_range);
  EXPECT_EQ(sq1(sw.w[0]), CohomologyElement::zero(sw.ring, 1));
}

// Sq1 is additive, satisfies the Cartan rule, and is well defined on classes.
TEST(Sq1Property, DerivationOnRandomPairs) {
  auto rng = sctest::make_rng(13);
  const auto& classes = sctest::dodecahedral_classes();
  for (int trial = 0; trial < 200; ++trial) {
    const auto ring = face_ring(classes[rng() % classes.size()].representative);
    const std::size_t dx = rng() % 3;
    const std::size_t dy = rng() % (3 - dx);  // dx + dy + 1 <= 3
    const CohomologyElement x = random_element(rng, ring, dx);
    const CohomologyElement y = random_element(rng, ring, dy);
    const CohomologyElement x2 = random_element(rng, ring, dx);
    ASSERT_EQ(sq1(x * y), sq1(x) * y + x * sq1(y)) << "seed " << sctest::test_seed() << " trial " << trial;
    ASSERT_EQ(sq1(x + x2), sq1(x) + sq1(x2)) << "trial " << trial;
    // Raw representative versus normal form.
    const Polynomial raw = sctest::random_homogeneous(rng, 12, dx);
    Polynomial raw_sq1(12);
    for (const auto& m : raw.terms()) {
      for (std::size_t j = 0; j < 12; ++j) {
        if (m.exponent(j) % 2 == 1) raw_sq1.toggle(m.times_generator(j));
      }
    }
    ASSERT_EQ(sq1(CohomologyElement(ring, dx, raw)).polynomial(), ring->normal_form(raw_sq1)) << "trial " << trial;
  }
}

TEST(PincObstruction, VerdictsAreOneSided) {
  for (const auto& cls : sctest::dodecahedral_classes()) {
    const SWData sw = total_sw(cls.representative);
    const PincReport r = pinc_obstruction(sw);
    ASSERT_TRUE(r.element.has_value());
    // On a closed 3-manifold w1 w2 + w3 = w1^3 = 0, so nothing is certified.
    EXPECT_TRUE(r.element->is_zero());
    EXPECT_EQ(r.pinc, Verdict::kUndetermined);
    EXPECT_NE(r.pinc, Verdict::kYes);
  }
}

TEST(DualClass, FoundForNonzeroW2AndCheckedByASecondRoute) {
  for (const auto& cls : sctest::dodecahedral_classes()) {
    const SWData sw = total_sw(cls.representative);
    if (sw.w[2].is_zero()) {
      EXPECT_THROW(find_dual_class(sw, 3), NoDualClass);
      continue;
    }
    const DualClass d = find_dual_class(sw, 3);
    EXPECT_EQ(d.c.weight(), 1u);
    const SubstitutedQuotient sub(12, 3, sw.ring->i_generators(), sw.ring->j_generators());
    const Polynomial product = multiply(elementary_symmetric(12, 2), Polynomial::linear_form(12, d.c));
    EXPECT_FALSE(sub.is_zero(product + elementary_symmetric(12, 3)));
    // Earlier generators all fail.
    for (std::size_t i = 0; i < d.c.lowest(); ++i) {
      EXPECT_TRUE(whitney_target(sw, BitVector::unit(12, i), 3).is_zero());
    }
  }
}

TEST(DualClass, PentagonUsesZeroWhenTopClassIsNonzero) {
  const Coloring c = make_coloring(sctest::pentagon(), {"10", "01", "10", "01", "11"});
  const SWData sw = total_sw(c);
  // w2 != 0 and w1 * a_i: the scan returns the first nonzero target.
  const DualClass d = find_dual_class(sw, 2);
  EXPECT_FALSE(whitney_target(sw, d.c, 2).is_zero());
}
