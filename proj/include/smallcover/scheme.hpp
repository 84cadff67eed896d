#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smallcover/gf2.hpp"

namespace smallcover {

// Sorted list of 1-based facet labels.
using FacetSet = std::vector<int>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string format_set(const FacetSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// Combinatorial right-angled polytope (or manifold with right-angled corners):
// facets 1..k and the vertex table, each vertex being the set of the n facets
// through it. Immutable once constructed; every constructor path validates.
class RightAngledScheme {
 public:
  RightAngledScheme() = default;

  // Validates and canonicalizes (vertices sorted lexicographically). Vertex
  // numbers in error messages refer to the input order, 1-based.
  RightAngledScheme(int dim, int num_facets, std::vector<FacetSet> vertices)
      : dim_(dim), k_(num_facets), vertices_(std::move(vertices)) {
    validate_and_index();
  }

  int dim() const { return dim_; }
  int num_facets() const { return k_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<FacetSet>& vertices() const { return vertices_; }

  bool adjacent(int i, int j) const { return adjacency_[i - 1].test(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& neighbors(int i) const { return neighbors_[i - 1]; }
  // Vertex indices (0-based, canonical order) of the vertices on facet i.
  const BitVector& vertex_mask(int i) const { return facet_vertices_[i - 1]; }

  // Vertices containing every facet of s, as a mask over vertex indices.
  BitVector vertices_containing(const FacetSet& s) const {
    BitVector mask(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) mask.set(v);
    for (int f : s) {
      check_facet(f);
      mask &= facet_vertices_[f - 1];
    }
    return mask;
  }

  // A facet set has nonempty common intersection iff it lies in some vertex.
  bool is_face(const FacetSet& s) const { return vertices_containing(s).any(); }

  // f[s] = number of nonempty-intersection facet sets of size s, s = 0..n.
  std::vector<std::size_t> face_counts() const {
    std::vector<std::set<FacetSet>> faces(static_cast<std::size_t>(dim_) + 1);
    for (const auto& v : vertices_) {
      for (std::uint32_t mask = 0; mask < (1U << v.size()); ++mask) {
        FacetSet sub;
        for (std::size_t b = 0; b < v.size(); ++b) {
          if (mask & (1U << b)) sub.push_back(v[b]);
        }
        faces[sub.size()].insert(std::move(sub));
      }
    }
    std::vector<std::size_t> out;
    for (const auto& f : faces) out.push_back(f.size());
    return out;
  }

  // Adjacency degrees of all facets, deduplicated.
  std::set<std::size_t> adjacency_degrees() const {
    std::set<std::size_t> out;
    for (const auto& n : neighbors_) out.insert(n.size());
    return out;
  }

  std::string serialize() const {
    std::ostringstream os;
    os << "dim " << dim_ << "\n"
       << "facets " << k_ << "\n";
    for (const auto& v : vertices_) {
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
      os << "\n";
    }
    return os.str();
  }

  // Applies a facet relabeling (perm[i-1] is the new label of facet i).
  RightAngledScheme relabeled(const std::vector<int>& perm) const {
    std::vector<FacetSet> verts;
    for (const auto& v : vertices_) {
      FacetSet image;
      for (int f : v) image.push_back(perm.at(static_cast<std::size_t>(f - 1)));
      verts.push_back(std::move(image));
    }
    return RightAngledScheme(dim_, k_, std::move(verts));
  }

  friend bool operator==(const RightAngledScheme& a, const RightAngledScheme& b) {
    return a.dim_ == b.dim_ && a.k_ == b.k_ && a.vertices_ == b.vertices_;
  }

  void check_facet(int f) const {
    if (f < 1 || f > k_) {
      throw std::out_of_range("facet " + std::to_string(f) + " outside 1.." + std::to_string(k_));
    }
  }

 private:
  void fail(const std::string& msg) const { throw ValidationError(msg); }

  void validate_and_index() {
    if (dim_ < 0) fail("dimension must be nonnegative");
    if (dim_ == 0) {
      // A point: no facets, one empty vertex.
      if (k_ != 0 || vertices_.size() != 1 || !vertices_[0].empty()) {
        fail("a 0-dimensional scheme has no facets and exactly one empty vertex");
      }
      adjacency_.clear();
      neighbors_.clear();
      facet_vertices_.clear();
      return;
    }
    if (k_ < 1) fail("facet count must be positive");
    if (vertices_.empty()) fail("scheme has no vertices");

    const auto n = static_cast<std::size_t>(dim_);
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      auto& vert = vertices_[v];
      const std::string name = "vertex " + std::to_string(v + 1);
      if (vert.size() != n) {
        fail(name + " has " + std::to_string(vert.size()) + " facets, expected " + std::to_string(n));
      }
      for (int f : vert) {
        if (f < 1 || f > k_) {
          fail(name + " lists facet " + std::to_string(f) + " outside 1.." + std::to_string(k_));
        }
      }
      std::sort(vert.begin(), vert.end());
      if (std::adjacent_find(vert.begin(), vert.end()) != vert.end()) {
        fail(name + " repeats a facet");
      }
    }
    {
      std::map<FacetSet, std::size_t> first_seen;
      for (std::size_t v = 0; v < vertices_.size(); ++v) {
        auto [it, inserted] = first_seen.emplace(vertices_[v], v);
        if (!inserted) {
          fail("vertex " + std::to_string(v + 1) + " duplicates vertex " + std::to_string(it->second + 1));
        }
      }
    }
    std::sort(vertices_.begin(), vertices_.end());

    const auto k = static_cast<std::size_t>(k_);
    facet_vertices_.assign(k, BitVector(vertices_.size()));
    adjacency_.assign(k, BitVector(k));
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      for (int f : vertices_[v]) {
        facet_vertices_[f - 1].set(v);
        for (int g : vertices_[v]) {
          if (g != f) adjacency_[f - 1].set(static_cast<std::size_t>(g - 1));
        }
      }
    }
    for (std::size_t f = 0; f < k; ++f) {
      if (facet_vertices_[f].none()) fail("facet " + std::to_string(f + 1) + " lies in no vertex");
    }

    // Each (n-1)-subset of a vertex must lie in exactly two vertices.
    std::map<FacetSet, std::size_t> ridge_count;
    for (const auto& vert : vertices_) {
      for (std::size_t drop = 0; drop < vert.size(); ++drop) {
        FacetSet ridge;
        for (std::size_t i = 0; i < vert.size(); ++i) {
          if (i != drop) ridge.push_back(vert[i]);
        }
        ++ridge_count[ridge];
      }
    }
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 2) {
        fail("ridge " + format_set(ridge) + " lies in " + std::to_string(count) + " vertices, expected 2");
      }
    }

    neighbors_.assign(k, {});
    for (std::size_t f = 0; f < k; ++f) {
      for (std::size_t g = 0; g < k; ++g) {
        if (adjacency_[f].test(g)) neighbors_[f].push_back(static_cast<int>(g + 1));
      }
    }

    // A segment's two endpoints never meet, so connectivity applies from n = 2.
    if (dim_ >= 2) {
      std::vector<bool> seen(k, false);
      std::vector<int> stack{1};
      seen[0] = true;
      std::size_t reached = 1;
      while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        for (int g : neighbors_[f - 1]) {
          if (!seen[g - 1]) {
            seen[g - 1] = true;
            ++reached;
            stack.push_back(g);
          }
        }
      }
      if (reached != k) fail("facet adjacency graph is disconnected");
    }
  }

  int dim_ = 0;
  int k_ = 0;
  std::vector<FacetSet> vertices_;
  std::vector<BitVector> adjacency_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<BitVector> facet_vertices_;
};

// Line-oriented scheme text: `dim n`, `facets k`, then one vertex per line.
// `#` starts a comment; blank lines are ignored.
inline RightAngledScheme load_scheme(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int dim = -1;
  int k = -1;
  std::vector<FacetSet> vertices;
  auto parse_error = [&](const std::string& msg) {
    return ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    std::string extra;
    if (dim < 0) {
      if (first != "dim" || !(fields >> dim) || dim < 1 || (fields >> extra)) {
        throw parse_error("expected 'dim <n>' with n >= 1");
      }
    } else if (k < 0) {
      if (first != "facets" || !(fields >> k) || k < 1 || (fields >> extra)) {
        throw parse_error("expected 'facets <k>' with k >= 1");
      }
    } else {
      FacetSet vert;
      std::istringstream all(line);
      std::string tok;
      while (all >> tok) {
        std::size_t used = 0;
        int value = 0;
        try {
          value = std::stoi(tok, &used);
        } catch (const std::exception&) {
          throw parse_error("facet index '" + tok + "' is not an integer");
        }
        if (used != tok.size()) throw parse_error("facet index '" + tok + "' is not an integer");
        vert.push_back(value);
      }
      vertices.push_back(std::move(vert));
    }
  }
  if (dim < 0) throw ParseError("missing 'dim' header");
  if (k < 0) throw ParseError("missing 'facets' header");
  return RightAngledScheme(dim, k, std::move(vertices));
}

inline RightAngledScheme load_scheme_text(const std::string& text) {
  std::istringstream in(text);
  return load_scheme(in);
}

// Inclusion-minimal facet sets T, 2 <= |T| <= max_size, contained in no
// vertex while all proper subsets are. Sorted by size, then lexicographically.
inline std::vector<FacetSet> minimal_nonfaces(const RightAngledScheme& s, std::size_t max_size) {
  if (max_size < 2) throw std::invalid_argument("minimal_nonfaces: max_size must be at least 2");
  std::vector<FacetSet> out;
  const int k = s.num_facets();
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      if (!s.adjacent(i, j)) out.push_back({i, j});
    }
  }
  // Larger candidates: a face of size t-1 extended by a facet beyond its
  // maximum that is adjacent to all of it.
  std::set<FacetSet> faces;
  for (const auto& v : s.vertices()) {
    for (std::uint32_t mask = 0; mask < (1U << v.size()); ++mask) {
      if (std::popcount(mask) < 2) continue;
      FacetSet sub;
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (mask & (1U << b)) sub.push_back(v[b]);
      }
      faces.insert(std::move(sub));
    }
  }
  for (std::size_t t = 3; t <= max_size; ++t) {
    for (const auto& base : faces) {
      if (base.size() != t - 1) continue;
      for (int j = base.back() + 1; j <= k; ++j) {
        bool clique = true;
        for (int f : base) clique = clique && s.adjacent(f, j);
        if (!clique) continue;
        FacetSet cand = base;
        cand.push_back(j);
        if (faces.count(cand)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && minimal; ++drop) {
          FacetSet sub;
          for (std::size_t i = 0; i < cand.size(); ++i) {
            if (i != drop) sub.push_back(cand[i]);
          }
          minimal = faces.count(sub) != 0;
        }
        if (minimal) out.push_back(std::move(cand));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FacetSet& a, const FacetSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// h-vector of the nerve (the simplicial sphere of co-vertexed facet sets).
inline std::vector<std::int64_t> h_vector(const RightAngledScheme& s) {
  const auto f = s.face_counts();  // f[i] = faces with i facets = f_{i-1}
  const std::int64_t n = s.dim();
  std::vector<std::int64_t> h;
  for (std::int64_t j = 0; j <= n; ++j) {
    std::int64_t total = 0;
    for (std::int64_t i = 0; i <= j; ++i) {
      const std::int64_t sign = ((j - i) % 2 == 0) ? 1 : -1;
      total += sign * binomial(n - i, j - i) * static_cast<std::int64_t>(f[static_cast<std::size_t>(i)]);
    }
    h.push_back(total);
  }
  return h;
}

}  // namespace smallcover
