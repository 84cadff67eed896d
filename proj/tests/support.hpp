#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "smallcover/smallcover.hpp"

namespace sctest {

using namespace smallcover;

// SMALLCOVER_TEST_SEED overrides the fixed default so failures can be replayed.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("SMALLCOVER_TEST_SEED"); s != nullptr && *s != '\0') return std::stoull(s);
  return 20261016;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(test_seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline BitVector random_vector(std::mt19937_64& rng, std::size_t m) {
  BitVector v(m);
  for (std::size_t i = 0; i < m; ++i) v.set(i, (rng() & 1U) != 0);
  return v;
}

// Columns of a uniformly random invertible m x m matrix.
inline std::vector<BitVector> random_invertible(std::mt19937_64& rng, std::size_t m) {
  while (true) {
    std::vector<BitVector> cols;
    for (std::size_t i = 0; i < m; ++i) cols.push_back(random_vector(rng, m));
    if (linearly_independent(cols, m)) return cols;
  }
}

inline Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t k, std::size_t d) {
  const auto monos = monomials_of_degree(k, d);
  Polynomial p(k);
  for (const auto& m : monos) {
    if (rng() % 4 == 0) p.toggle(m);
  }
  return p;
}

inline const SchemePtr& dodecahedron() {
  static const SchemePtr s = share(dodecahedron_scheme());
  return s;
}

inline const SchemePtr& pentagon() {
  static const SchemePtr s = share(pentagon_scheme());
  return s;
}

inline const std::vector<ColoringClass>& dodecahedral_classes() {
  static const std::vector<ColoringClass> c = enumerate_small_covers(dodecahedron());
  return c;
}

// Brute-force automorphisms: every permutation of the facets that preserves
// the set of vertices.
inline std::vector<FacetPermutation> brute_force_automorphisms(const RightAngledScheme& s) {
  std::vector<int> perm(static_cast<std::size_t>(s.num_facets()));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i + 1);
  std::vector<FacetPermutation> out;
  do {
    if (s.relabeled(perm) == s) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace sctest
