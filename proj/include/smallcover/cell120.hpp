#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "smallcover/golden.hpp"
#include "smallcover/scheme.hpp"

namespace smallcover {

namespace detail {

using Point4 = std::array<GoldenNumber, 4>;

inline bool is_even_permutation(const std::array<int, 4>& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j] ? 1 : 0;
  }
  return inversions % 2 == 0;
}

enum class Parity { kAll, kEven, kOdd };

// All sign changes of `base`, then coordinate permutations of the given parity.
inline void add_orbit(std::set<Point4>& out, const Point4& base, Parity parity) {
  for (int signs = 0; signs < 16; ++signs) {
    Point4 signed_point = base;
    for (int c = 0; c < 4; ++c) {
      if (signs & (1 << c)) signed_point[c] = -signed_point[c];
    }
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      const bool even = is_even_permutation(perm);
      if ((parity == Parity::kEven && !even) || (parity == Parity::kOdd && even)) continue;
      Point4 p;
      for (int c = 0; c < 4; ++c) p[c] = signed_point[perm[c]];
      out.insert(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

inline GoldenNumber dot4(const Point4& a, const Point4& b) {
  GoldenNumber s;
  for (int c = 0; c < 4; ++c) s += a[c] * b[c];
  return s;
}

}  // namespace detail

// Facet/vertex incidence of the 120-cell from exact coordinates in Q(sqrt 5).
// Vertices are the 600 points of {5,3,3} at circumradius 2*sqrt 2; facet
// normals are the 120 vertices of the dual 600-cell (scaled by 2). A vertex
// lies on a facet iff its inner product with the normal is maximal.
// Facets are labeled in the sorted order of their normals.
inline RightAngledScheme generate_120cell() {
  using detail::Parity;
  using detail::Point4;
  const GoldenNumber phi = GoldenNumber::phi();
  const GoldenNumber inv_phi = phi - 1;       // phi^-1
  const GoldenNumber inv_phi2 = 2 - phi;      // phi^-2
  const GoldenNumber phi2 = phi + 1;          // phi^2
  const GoldenNumber root5 = GoldenNumber::sqrt5();
  const GoldenNumber zero(0);
  const GoldenNumber one(1);
  const GoldenNumber two(2);

  std::set<Point4> vertex_set;
  detail::add_orbit(vertex_set, {zero, zero, two, two}, Parity::kAll);
  detail::add_orbit(vertex_set, {one, one, one, root5}, Parity::kAll);
  detail::add_orbit(vertex_set, {inv_phi2, phi, phi, phi}, Parity::kAll);
  detail::add_orbit(vertex_set, {inv_phi, inv_phi, inv_phi, phi2}, Parity::kAll);
  detail::add_orbit(vertex_set, {zero, inv_phi2, one, phi2}, Parity::kEven);
  detail::add_orbit(vertex_set, {zero, inv_phi, phi, root5}, Parity::kEven);
  detail::add_orbit(vertex_set, {inv_phi, one, phi, two}, Parity::kEven);

  std::set<Point4> normal_set;
  detail::add_orbit(normal_set, {one, one, one, one}, Parity::kAll);
  detail::add_orbit(normal_set, {two, zero, zero, zero}, Parity::kAll);
  detail::add_orbit(normal_set, {phi, one, inv_phi, zero}, Parity::kOdd);

  auto fail = [](const std::string& msg) {
    throw std::logic_error("120-cell generation: internal consistency failure: " + msg);
  };
  if (vertex_set.size() != 600) fail(std::to_string(vertex_set.size()) + " vertices");
  if (normal_set.size() != 120) fail(std::to_string(normal_set.size()) + " facet normals");

  const std::vector<Point4> vertices(vertex_set.begin(), vertex_set.end());
  const std::vector<Point4> normals(normal_set.begin(), normal_set.end());
  std::vector<FacetSet> incidence(vertices.size());
  for (std::size_t f = 0; f < normals.size(); ++f) {
    std::vector<GoldenNumber> values;
    values.reserve(vertices.size());
    for (const auto& v : vertices) values.push_back(detail::dot4(normals[f], v));
    const GoldenNumber support = *std::max_element(values.begin(), values.end());
    std::size_t on_facet = 0;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (values[v] == support) {
        incidence[v].push_back(static_cast<int>(f + 1));
        ++on_facet;
      }
    }
    if (on_facet != 20) fail("facet " + std::to_string(f + 1) + " has " + std::to_string(on_facet) + " vertices");
  }
  for (std::size_t v = 0; v < incidence.size(); ++v) {
    if (incidence[v].size() != 4) fail("vertex " + std::to_string(v + 1) + " lies on " +
                                       std::to_string(incidence[v].size()) + " facets");
  }
  return RightAngledScheme(4, 120, std::move(incidence));
}

}  // namespace smallcover
