#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace smallcover;

namespace {

RightAngledScheme triangle() { return RightAngledScheme(2, 3, {{1, 2}, {2, 3}, {1, 3}}); }

std::string error_of(const std::string& text) {
  try {
    load_scheme_text(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(LoadScheme, Pentagon) {
  const auto s = load_scheme_text("# pentagon\ndim 2\nfacets 5\n1 2\n2 3\n3 4\n4 5\n5 1  # wraps\n");
  EXPECT_EQ(s.dim(), 2);
  EXPECT_EQ(s.num_facets(), 5);
  EXPECT_EQ(s, pentagon_scheme());
}

TEST(LoadScheme, NamesFirstViolatedInvariant) {
  EXPECT_EQ(error_of("dim 3\nfacets 4\n1 2 3 4\n"), "vertex 1 has 4 facets, expected 3");
  EXPECT_EQ(error_of("dim 2\nfacets 3\n1 2\n2 3\n1 4\n"), "vertex 3 lists facet 4 outside 1..3");
  EXPECT_EQ(error_of("dim 2\nfacets 3\n1 1\n"), "vertex 1 repeats a facet");
  EXPECT_EQ(error_of("dim 2\nfacets 4\n1 2\n2 3\n1 3\n"), "facet 4 lies in no vertex");
  EXPECT_EQ(error_of("dim 2\nfacets 3\n1 2\n2 3\n"), "ridge {1} lies in 1 vertices, expected 2");
  EXPECT_EQ(error_of("dim 2\nfacets 3\n1 2\n2 1\n1 3\n2 3\n"), "vertex 2 duplicates vertex 1");
  EXPECT_EQ(error_of("dim 2\nfacets 6\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n"), "facet adjacency graph is disconnected");
}

TEST(LoadScheme, ParseErrors) {
  EXPECT_THROW(load_scheme_text("dims 2\n"), ParseError);
  EXPECT_THROW(load_scheme_text("dim 2\nfacets 3\n1 x\n"), ParseError);
  EXPECT_THROW(load_scheme_text("dim 2\n"), ParseError);
  EXPECT_THROW(load_scheme_text("dim 2 3\nfacets 3\n"), ParseError);
}

TEST(LoadScheme, SegmentIsAllowed) {
  const auto s = load_scheme_text("dim 1\nfacets 2\n1\n2\n");
  EXPECT_EQ(h_vector(s), (std::vector<std::int64_t>{1, 1}));
}

TEST(Scheme, RoundTripForBuiltins) {
  for (const auto& name : builtin_names()) {
    const auto s = builtin_scheme(name);
    EXPECT_EQ(load_scheme_text(s.serialize()), s) << name;
  }
}

TEST(Scheme, HVectors) {
  EXPECT_EQ(h_vector(pentagon_scheme()), (std::vector<std::int64_t>{1, 3, 1}));
  EXPECT_EQ(h_vector(dodecahedron_scheme()), (std::vector<std::int64_t>{1, 9, 9, 1}));
  EXPECT_EQ(h_vector(triangle()), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(dodecahedron_scheme().face_counts(), (std::vector<std::size_t>{1, 12, 30, 20}));
}

TEST(Scheme, HVectorPalindromic) {
  for (const auto& name : builtin_names()) {
    const auto h = h_vector(builtin_scheme(name));
    EXPECT_TRUE(std::equal(h.begin(), h.end(), h.rbegin())) << name;
  }
}

TEST(MinimalNonfaces, DodecahedronHasOnlyPairs) {
  const auto s = dodecahedron_scheme();
  const auto mnf = minimal_nonfaces(s, 4);
  // 12 facets, each adjacent to 5: C(12,2) - 30 non-adjacent pairs; no larger minimal nonfaces.
  EXPECT_EQ(mnf.size(), 66u - 30u);
  for (const auto& t : mnf) EXPECT_EQ(t.size(), 2u);
}

TEST(MinimalNonfaces, TriangleBoundary) {
  // Triangle: {1,2,3} is the only minimal nonface.
  EXPECT_EQ(minimal_nonfaces(triangle(), 3), (std::vector<FacetSet>{{1, 2, 3}}));
}

// No subset of a vertex is ever reported, and every reported set is minimal.
TEST(MinimalNonfaces, NeverInsideAVertexAndMinimal) {
  for (const auto& name : builtin_names()) {
    const auto s = builtin_scheme(name);
    const auto mnf = minimal_nonfaces(s, static_cast<std::size_t>(s.dim()) + 1);
    for (const auto& t : mnf) {
      ASSERT_FALSE(s.is_face(t)) << name << " " << format_set(t);
      for (std::size_t drop = 0; drop < t.size(); ++drop) {
        FacetSet sub = t;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        ASSERT_TRUE(s.is_face(sub)) << name << " " << format_set(t);
      }
    }
  }
}

TEST(Face, EdgeOfDodecahedronIsASegment) {
  const auto s = dodecahedron_scheme();
  const FaceRef f = face(s, {1, 2});
  EXPECT_EQ(f.scheme.dim(), 1);
  EXPECT_EQ(f.scheme.num_facets(), 2);
  EXPECT_TRUE(f.bijective);
  EXPECT_EQ(f.adj, (FacetSet{3, 4}));
}

TEST(Face, FacetOfDodecahedronIsAPentagon) {
  const auto s = dodecahedron_scheme();
  const FaceRef f = face(s, {1});
  EXPECT_EQ(f.scheme.num_facets(), 5);
  EXPECT_EQ(h_vector(f.scheme), (std::vector<std::int64_t>{1, 3, 1}));
  EXPECT_TRUE(find_isomorphism(f.scheme, pentagon_scheme()).has_value());
}

TEST(Face, VertexAndNonFace) {
  const auto s = dodecahedron_scheme();
  EXPECT_EQ(face(s, {1, 2, 3}).scheme.dim(), 0);
  EXPECT_THROW(face(s, {1, 12}), std::invalid_argument);
}

TEST(Automorphisms, PentagonMatchesBruteForce) {
  const auto s = pentagon_scheme();
  auto fast = automorphisms(s);
  auto brute = sctest::brute_force_automorphisms(s);
  std::sort(fast.begin(), fast.end());
  EXPECT_EQ(brute.size(), 10u);
  EXPECT_EQ(fast, brute);
}

TEST(Automorphisms, DodecahedronGroupIsClosed) {
  const auto s = dodecahedron_scheme();
  const auto group = automorphisms(s);
  ASSERT_EQ(group.size(), 120u);
  const std::set<FacetPermutation> members(group.begin(), group.end());
  auto rng = sctest::make_rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto& a = group[rng() % group.size()];
    const auto& b = group[rng() % group.size()];
    EXPECT_TRUE(members.count(compose(a, b)));
    EXPECT_TRUE(members.count(inverse(a)));
  }
  for (const auto& g : group) EXPECT_EQ(s.relabeled(g), s);
}

TEST(Automorphisms, OrderThreeElementsExist) {
  const auto group = automorphisms(dodecahedron_scheme());
  std::map<std::size_t, std::size_t> orders;
  for (const auto& g : group) ++orders[permutation_order(g)];
  // Icosahedral group with the antipodal map: orders 1, 2, 3, 5, 6, 10.
  EXPECT_EQ(orders[1], 1u);
  EXPECT_EQ(orders[3], 20u);
  EXPECT_EQ(orders[5], 24u);
}

TEST(Isomorphism, RelabeledSchemeIsFound) {
  const auto s = dodecahedron_scheme();
  auto rng = sctest::make_rng(7);
  std::vector<int> perm(12);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto t = s.relabeled(perm);
  const auto iso = find_isomorphism(s, t);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(s.relabeled(*iso), t);
  EXPECT_FALSE(find_isomorphism(s, load_scheme_text("dim 3\nfacets 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n")).has_value());
}

TEST(GoldenNumber, ExactArithmetic) {
  const GoldenNumber phi = GoldenNumber::phi();
  EXPECT_EQ(phi * phi, phi + 1);
  EXPECT_EQ(GoldenNumber::sqrt5() * GoldenNumber::sqrt5(), GoldenNumber(5));
  EXPECT_EQ(phi.inverse(), phi - 1);
  EXPECT_EQ((phi - 1) * (phi - 1), 2 - phi);
  EXPECT_EQ(phi / phi, GoldenNumber(1));
  EXPECT_EQ((phi - 2).sign(), -1);
  EXPECT_EQ((GoldenNumber::sqrt5() - GoldenNumber(GoldenNumber::Rational(447, 200))).sign(), 1);  // sqrt5 > 2.235
  EXPECT_EQ((GoldenNumber::sqrt5() - GoldenNumber(GoldenNumber::Rational(2237, 1000))).sign(), -1);
  EXPECT_LT(GoldenNumber(1), phi);
  EXPECT_NE(GoldenNumber(1), phi);
  EXPECT_NEAR(phi.to_double(), 1.6180339887, 1e-9);
}
