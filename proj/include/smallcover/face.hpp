#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "smallcover/scheme.hpp"

namespace smallcover {

// A face F of a scheme, given by supp(F) (the facets containing it), with its
// own scheme and the natural map from its facets onto adj(F).
struct FaceRef {
  FacetSet supp;
  RightAngledScheme scheme;
  // to_ambient[j-1] is the facet of the ambient scheme whose intersection with
  // F is face facet j.
  std::vector<int> to_ambient;
  FacetSet adj;
  // Whether Fac(F) -> adj(F) is injective (it is always onto).
  bool bijective = true;
};

inline FaceRef face(const RightAngledScheme& s, FacetSet supp) {
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  for (int f : supp) s.check_facet(f);
  const BitVector containing = s.vertices_containing(supp);
  if (containing.none()) throw std::invalid_argument("facet set " + format_set(supp) + " is not a face");

  FaceRef out;
  out.supp = supp;
  const std::size_t d = static_cast<std::size_t>(s.dim()) - supp.size();

  std::vector<FacetSet> reduced;
  for (std::size_t v = 0; v < s.num_vertices(); ++v) {
    if (!containing.test(v)) continue;
    FacetSet r;
    std::set_difference(s.vertices()[v].begin(), s.vertices()[v].end(), supp.begin(), supp.end(),
                        std::back_inserter(r));
    reduced.push_back(std::move(r));
  }
  if (d == 0) {
    out.scheme = RightAngledScheme(0, 0, {FacetSet{}});
    return out;
  }

  std::map<int, std::vector<std::size_t>> by_facet;
  for (std::size_t v = 0; v < reduced.size(); ++v) {
    for (int j : reduced[v]) by_facet[j].push_back(v);
  }

  // Components of F ∩ F_j: vertices joined when they share an edge of it.
  std::map<std::pair<int, std::size_t>, int> label;  // (j, vertex) -> face facet label
  int next_label = 0;
  for (const auto& [j, verts] : by_facet) {
    out.adj.push_back(j);
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        FacetSet common;
        std::set_intersection(reduced[verts[a]].begin(), reduced[verts[a]].end(), reduced[verts[b]].begin(),
                              reduced[verts[b]].end(), std::back_inserter(common));
        if (common.size() + 1 == d) parent[find(a)] = find(b);
      }
    }
    std::map<std::size_t, int> root_label;
    for (std::size_t a = 0; a < verts.size(); ++a) {
      auto [it, inserted] = root_label.emplace(find(a), next_label + 1);
      if (inserted) {
        ++next_label;
        out.to_ambient.push_back(j);
      }
      label[{j, verts[a]}] = it->second;
    }
    if (root_label.size() > 1) out.bijective = false;
  }

  std::vector<FacetSet> face_vertices;
  for (std::size_t v = 0; v < reduced.size(); ++v) {
    FacetSet fv;
    for (int j : reduced[v]) fv.push_back(label.at({j, v}));
    face_vertices.push_back(std::move(fv));
  }
  out.scheme = RightAngledScheme(static_cast<int>(d), next_label, std::move(face_vertices));
  return out;
}

}  // namespace smallcover
