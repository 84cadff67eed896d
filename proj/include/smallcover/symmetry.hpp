#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "smallcover/scheme.hpp"

namespace smallcover {

// Facet permutation: perm[i-1] is the image of facet i.
using FacetPermutation = std::vector<int>;

namespace detail {

// Backtracking over facet bijections S -> T that carry the vertex table of S
// onto that of T. Facets of S are visited in breadth-first order from facet 1
// so each one (past the first of its component) has an already mapped
// neighbour, which restricts its candidates to that neighbour's image's
// neighbours. Candidates are tried in increasing order, so the visit order is
// deterministic. `visit` returns false to stop.
inline void search_isomorphisms(const RightAngledScheme& s, const RightAngledScheme& t,
                                const std::function<bool(const FacetPermutation&)>& visit) {
  if (s.dim() != t.dim() || s.num_facets() != t.num_facets() || s.num_vertices() != t.num_vertices()) {
    return;
  }
  const int k = s.num_facets();
  if (k == 0) {
    visit({});
    return;
  }

  std::vector<int> order;
  std::vector<int> parent(static_cast<std::size_t>(k) + 1, 0);
  {
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (int root = 1; root <= k; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::size_t head = order.size();
      order.push_back(root);
      while (head < order.size()) {
        const int f = order[head++];
        for (int g : s.neighbors(f)) {
          if (!seen[g]) {
            seen[g] = true;
            parent[g] = f;
            order.push_back(g);
          }
        }
      }
    }
  }

  const std::set<FacetSet> t_vertices(t.vertices().begin(), t.vertices().end());
  FacetPermutation image(static_cast<std::size_t>(k), 0);
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
  std::vector<int> position(static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);

  auto consistent = [&](std::size_t depth, int f, int g) {
    if (s.neighbors(f).size() != t.neighbors(g).size()) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const int h = order[i];
      if (s.adjacent(f, h) != t.adjacent(g, image[h - 1])) return false;
    }
    // Vertices through f whose facets are now all mapped.
    const BitVector& mask = s.vertex_mask(f);
    for (std::size_t v = 0; v < s.num_vertices(); ++v) {
      if (!mask.test(v)) continue;
      const FacetSet& vert = s.vertices()[v];
      FacetSet mapped;
      bool complete = true;
      for (int h : vert) {
        if (h == f) {
          mapped.push_back(g);
        } else if (static_cast<std::size_t>(position[h]) < depth) {
          mapped.push_back(image[h - 1]);
        } else {
          complete = false;
          break;
        }
      }
      if (!complete) continue;
      std::sort(mapped.begin(), mapped.end());
      if (!t_vertices.count(mapped)) return false;
    }
    return true;
  };

  bool keep_going = true;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (!keep_going) return;
    if (depth == order.size()) {
      keep_going = visit(image);
      return;
    }
    const int f = order[depth];
    std::vector<int> candidates;
    if (parent[f] != 0) {
      candidates = t.neighbors(image[parent[f] - 1]);
    } else {
      candidates.resize(static_cast<std::size_t>(k));
      std::iota(candidates.begin(), candidates.end(), 1);
    }
    for (int g : candidates) {
      if (used[g] || !consistent(depth, f, g)) continue;
      used[g] = true;
      image[f - 1] = g;
      rec(depth + 1);
      used[g] = false;
      image[f - 1] = 0;
      if (!keep_going) return;
    }
  };
  rec(0);
}

}  // namespace detail

// All facet permutations preserving the vertex table, in search order.
inline std::vector<FacetPermutation> automorphisms(const RightAngledScheme& s) {
  std::vector<FacetPermutation> out;
  detail::search_isomorphisms(s, s, [&](const FacetPermutation& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// First isomorphism S -> T found by the deterministic search, if any.
inline std::optional<FacetPermutation> find_isomorphism(const RightAngledScheme& s,
                                                        const RightAngledScheme& t) {
  std::optional<FacetPermutation> out;
  detail::search_isomorphisms(s, t, [&](const FacetPermutation& p) {
    out = p;
    return false;
  });
  return out;
}

inline FacetPermutation compose(const FacetPermutation& outer, const FacetPermutation& inner) {
  FacetPermutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i] - 1];
  return out;
}

inline FacetPermutation inverse(const FacetPermutation& p) {
  FacetPermutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<int>(i + 1);
  return out;
}

// Order of the permutation in the symmetric group.
inline std::size_t permutation_order(const FacetPermutation& p) {
  std::size_t result = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

}  // namespace smallcover
