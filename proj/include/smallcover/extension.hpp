#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "smallcover/coloring.hpp"
#include "smallcover/face.hpp"
#include "smallcover/symmetry.hpp"

namespace smallcover {

// Coefficients c_i of a class c = sum_i c_i [M_i], one bit per facet.
using HypersurfaceClassVector = BitVector;

// Facet -> color for a subset of the facets.
using PartialColoring = std::map<int, BitVector>;

class ImproperColoring : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Completes a partial coloring into V + V', giving each unassigned facet (in
// increasing label order) its own fresh basis vector of V'.
inline Coloring extend_partial(const SchemePtr& s, const PartialColoring& partial, std::size_t m) {
  for (const auto& [f, color] : partial) {
    s->check_facet(f);
    if (color.size() != m) throw std::invalid_argument("partial color of facet " + std::to_string(f) + " has wrong length");
    if (color.none()) throw ImproperColoring("partial coloring assigns zero to facet " + std::to_string(f));
  }
  for (const auto& vert : s->vertices()) {
    SpanBuilder span(m);
    for (int f : vert) {
      auto it = partial.find(f);
      if (it != partial.end() && !span.insert(it->second)) {
        throw ImproperColoring("partial coloring is improper at vertex " + format_set(vert));
      }
    }
  }
  const std::size_t fresh = static_cast<std::size_t>(s->num_facets()) - partial.size();
  const std::size_t total = m + fresh;
  std::vector<BitVector> colors;
  std::size_t next = m;
  for (int f = 1; f <= s->num_facets(); ++f) {
    auto it = partial.find(f);
    if (it != partial.end()) {
      colors.push_back(it->second.resized(total));
    } else {
      colors.push_back(BitVector::unit(total, next++));
    }
  }
  return Coloring(s, total, std::move(colors));
}

struct InducedColoring {
  Coloring coloring;  // on face.scheme, in V / span(colors of supp)
  ComponentInfo components;
};

// Colors of adj(F) pushed into V / <lambda(i) : i in supp(F)>. Quotient
// coordinates are the non-pivot columns of the reduced basis of that span.
inline InducedColoring induced_coloring(const Coloring& lambda, const FaceRef& f) {
  const auto& s = lambda.scheme();
  if (!s.is_face(f.supp)) throw std::invalid_argument("face support " + format_set(f.supp) + " is not a face");
  for (int j : f.to_ambient) s.check_facet(j);

  BitMatrix span_rows(lambda.m());
  for (int i : f.supp) span_rows.push_back(lambda.color(i));
  const RrefResult span = rref(std::move(span_rows));
  std::vector<bool> is_pivot(lambda.m(), false);
  for (auto p : span.pivots) is_pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < lambda.m(); ++c) {
    if (!is_pivot[c]) keep.push_back(c);
  }

  std::vector<BitVector> colors;
  for (int j : f.to_ambient) {
    BitVector v = lambda.color(j);
    for (std::size_t r = 0; r < span.rank; ++r) {
      if (v.test(span.pivots[r])) v ^= span.matrix[r];
    }
    BitVector q(keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) q.set(c, v.test(keep[c]));
    colors.push_back(std::move(q));
  }
  InducedColoring out{Coloring(share(f.scheme), keep.size(), std::move(colors)), {}};
  out.components = components(out.coloring);
  return out;
}

// First isomorphism P -> face(Q, facet_q), expressed as P facet -> Q facet.
inline std::optional<std::vector<int>> find_matching(const RightAngledScheme& p, const RightAngledScheme& q,
                                                     int facet_q) {
  const FaceRef f = face(q, {facet_q});
  if (!f.bijective) return std::nullopt;
  auto iso = find_isomorphism(p, f.scheme);
  if (!iso) return std::nullopt;
  std::vector<int> out;
  for (int j : *iso) out.push_back(f.to_ambient[static_cast<std::size_t>(j - 1)]);
  return out;
}

// Throws unless `p_to_q` carries the vertices of P onto the vertices of the
// facet facet_q of Q (with facet_q removed).
inline void check_matching(const RightAngledScheme& p, const RightAngledScheme& q, int facet_q,
                           const std::vector<int>& p_to_q) {
  q.check_facet(facet_q);
  const FaceRef f = face(q, {facet_q});
  if (!f.bijective) {
    throw std::invalid_argument("facet " + std::to_string(facet_q) + ": Fac(F) -> adj(F) is not a bijection");
  }
  if (p_to_q.size() != static_cast<std::size_t>(p.num_facets()) ||
      f.scheme.num_facets() != p.num_facets() || f.scheme.num_vertices() != p.num_vertices() ||
      f.scheme.dim() != p.dim()) {
    throw std::invalid_argument("matching is not an isomorphism: sizes differ");
  }
  const std::set<int> adj(f.adj.begin(), f.adj.end());
  std::set<int> images;
  for (int j : p_to_q) {
    if (!adj.count(j)) throw std::invalid_argument("matching is not an isomorphism: facet " + std::to_string(j) + " not adjacent to " + std::to_string(facet_q));
    images.insert(j);
  }
  if (images.size() != p_to_q.size()) throw std::invalid_argument("matching is not an isomorphism: not injective");
  for (const auto& v : p.vertices()) {
    FacetSet mapped{facet_q};
    for (int i : v) mapped.push_back(p_to_q[static_cast<std::size_t>(i - 1)]);
    if (!q.is_face(mapped)) {
      throw std::invalid_argument("matching is not an isomorphism: vertex " + format_set(v) + " has no image");
    }
  }
}

// Colors Q so that the facet facet_q carries a copy of X = M(P, lambda) whose
// normal bundle has w1 = c: matched facets get (lambda(i), c_i), facet_q gets
// (0, 1), and every other facet a fresh basis vector.
inline Coloring extend_with_class(const Coloring& lambda, const HypersurfaceClassVector& c, const SchemePtr& q,
                                  int facet_q, const std::vector<int>& p_to_q) {
  check_matching(lambda.scheme(), *q, facet_q, p_to_q);
  if (c.size() != lambda.num_facets()) throw std::invalid_argument("class vector has wrong length");
  const std::size_t m = lambda.m() + 1;
  PartialColoring partial;
  partial[facet_q] = BitVector::unit(m, lambda.m());
  for (std::size_t i = 0; i < p_to_q.size(); ++i) {
    BitVector color = lambda.colors()[i].resized(m);
    color.set(lambda.m(), c.test(i));
    partial[p_to_q[i]] = std::move(color);
  }
  Coloring out = extend_partial(q, partial, m);
  if (!is_proper(out)) throw std::logic_error("extension produced an improper coloring");
  return out;
}

// w1 of the normal bundle of the copy of X over facet_q: the coefficient of a
// face facet is the dot product of its ambient color with the color of facet_q.
inline HypersurfaceClassVector normal_bundle_w1(const Coloring& y, int facet_q) {
  y.scheme().check_facet(facet_q);
  const FaceRef f = face(y.scheme(), {facet_q});
  if (!f.bijective) throw std::invalid_argument("facet " + std::to_string(facet_q) + " lacks the Fac -> adj bijection");
  HypersurfaceClassVector out(f.to_ambient.size());
  for (std::size_t j = 0; j < f.to_ambient.size(); ++j) out.set(j, dot(y.color(f.to_ambient[j]), y.color(facet_q)));
  return out;
}

// Same, with facets labeled as in P through the matching.
inline HypersurfaceClassVector normal_bundle_w1(const Coloring& y, int facet_q, const std::vector<int>& p_to_q) {
  y.scheme().check_facet(facet_q);
  HypersurfaceClassVector out(p_to_q.size());
  for (std::size_t i = 0; i < p_to_q.size(); ++i) out.set(i, dot(y.color(p_to_q[i]), y.color(facet_q)));
  return out;
}

// Pulls a coloring of face(Q, facet_q) (face labels) back to P's labels.
inline Coloring pull_back_to_base(const InducedColoring& induced, const FaceRef& f, const SchemePtr& p,
                                  const std::vector<int>& p_to_q) {
  std::map<int, std::size_t> face_label;
  for (std::size_t j = 0; j < f.to_ambient.size(); ++j) face_label[f.to_ambient[j]] = j;
  std::vector<BitVector> colors;
  for (int qf : p_to_q) colors.push_back(induced.coloring.colors().at(face_label.at(qf)));
  return Coloring(p, induced.coloring.m(), std::move(colors));
}

}  // namespace smallcover
