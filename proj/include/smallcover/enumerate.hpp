#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "smallcover/coloring.hpp"
#include "smallcover/symmetry.hpp"

namespace smallcover {

class SearchBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One equivalence class of small covers under facet symmetry and recoloring.
struct ColoringClass {
  Coloring representative;  // canonical form
  std::size_t stabilizer_order = 0;
  // Colorings with the first vertex pinned to the standard basis that fell in
  // this class during enumeration.
  std::size_t pinned_count = 0;
  bool has_order3_symmetry = false;
};

struct EnumerateOptions {
  int max_facets = 16;
  bool allow_large = false;
  unsigned threads = 1;
  // Facet exploration order (a permutation of 1..k); empty means the first
  // vertex's facets, then breadth-first.
  std::vector<int> facet_order;
};

inline bool has_element_of_order(const std::vector<FacetPermutation>& group, std::size_t order) {
  return std::any_of(group.begin(), group.end(),
                     [&](const FacetPermutation& p) { return permutation_order(p) == order; });
}

namespace detail {

inline bool masks_independent(const std::uint32_t* v, std::size_t count) {
  std::uint32_t rows[32];
  std::uint32_t pivots[32];
  std::size_t r = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t x = v[i];
    for (std::size_t j = 0; j < r; ++j) {
      if (x & pivots[j]) x ^= rows[j];
    }
    if (x == 0) return false;
    pivots[r] = std::uint32_t{1} << (std::bit_width(x) - 1);
    rows[r++] = x;
  }
  return true;
}

// All proper colorings into GF(2)^n with the pinned vertex sent to e1..en,
// as color masks indexed by facet - 1.
inline std::vector<std::vector<std::uint32_t>> pinned_colorings(const RightAngledScheme& s,
                                                                const std::vector<int>& order) {
  const auto n = static_cast<std::size_t>(s.dim());
  const auto k = static_cast<std::size_t>(s.num_facets());
  // Pinned vertex: the lexicographically first vertex through order[0].
  FacetSet pinned;
  for (const auto& v : s.vertices()) {
    if (std::find(v.begin(), v.end(), order[0]) != v.end()) {
      pinned = v;
      break;
    }
  }
  std::vector<std::uint32_t> colors(k, 0);
  for (std::size_t i = 0; i < n; ++i) colors[static_cast<std::size_t>(pinned[i] - 1)] = 1U << i;
  std::vector<int> rest;
  for (int f : order) {
    if (std::find(pinned.begin(), pinned.end(), f) == pinned.end()) rest.push_back(f);
  }

  // Every vertex's facets, for the incremental independence check.
  std::vector<std::vector<std::size_t>> vertices_of(k);
  for (std::size_t v = 0; v < s.num_vertices(); ++v) {
    for (int f : s.vertices()[v]) vertices_of[static_cast<std::size_t>(f - 1)].push_back(v);
  }
  auto locally_proper = [&](int f) {
    std::uint32_t buf[32];
    for (std::size_t v : vertices_of[static_cast<std::size_t>(f - 1)]) {
      std::size_t count = 0;
      for (int g : s.vertices()[v]) {
        if (colors[static_cast<std::size_t>(g - 1)] != 0) buf[count++] = colors[static_cast<std::size_t>(g - 1)];
      }
      if (!masks_independent(buf, count)) return false;
    }
    return true;
  };

  for (int f : pinned) {
    if (!locally_proper(f)) return {};
  }
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint32_t top = 1U << n;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == rest.size()) {
      out.push_back(colors);
      return;
    }
    const auto f = static_cast<std::size_t>(rest[depth] - 1);
    for (std::uint32_t c = 1; c < top; ++c) {
      colors[f] = c;
      if (locally_proper(rest[depth])) rec(depth + 1);
    }
    colors[f] = 0;
  };
  rec(0);
  return out;
}

inline std::vector<int> default_facet_order(const RightAngledScheme& s) {
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(s.num_facets()) + 1, false);
  for (int f : s.vertices().front()) {
    order.push_back(f);
    seen[f] = true;
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int g : s.neighbors(order[head])) {
      if (!seen[g]) {
        seen[g] = true;
        order.push_back(g);
      }
    }
  }
  for (int f = 1; f <= s.num_facets(); ++f) {
    if (!seen[f]) order.push_back(f);
  }
  return order;
}

}  // namespace detail

// Classes of small covers of `s` under Aut(S) x GL(n, 2), sorted by canonical form.
inline std::vector<ColoringClass> enumerate_small_covers(const SchemePtr& s, const EnumerateOptions& options = {}) {
  const int k = s->num_facets();
  const int n = s->dim();
  if (!options.allow_large && k > options.max_facets) {
    throw SearchBoundExceeded("scheme has " + std::to_string(k) + " facets; enumeration is limited to " +
                              std::to_string(options.max_facets) + " without an override");
  }
  if (n < 1 || n > 31) throw std::invalid_argument("enumeration needs 1 <= n <= 31");

  std::vector<int> order = options.facet_order.empty() ? detail::default_facet_order(*s) : options.facet_order;
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i) {
      if (sorted.size() != static_cast<std::size_t>(k) || sorted[static_cast<std::size_t>(i)] != i + 1) {
        throw std::invalid_argument("facet_order is not a permutation of the facets");
      }
    }
  }

  const auto raw = detail::pinned_colorings(*s, order);
  const auto autos = automorphisms(*s);

  // Canonical forms, computed in contiguous chunks; merge order is fixed.
  std::vector<std::vector<std::uint64_t>> keys(raw.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint64_t> permuted(static_cast<std::size_t>(k));
    for (std::size_t i = begin; i < end; ++i) {
      const std::vector<std::uint64_t> masks(raw[i].begin(), raw[i].end());
      std::vector<std::uint64_t> best;
      for (const auto& sigma : autos) {
        for (std::size_t f = 0; f < masks.size(); ++f) permuted[static_cast<std::size_t>(sigma[f] - 1)] = masks[f];
        auto coords = detail::basis_coordinates(permuted);
        if (best.empty() || detail::masks_less(coords, best)) best = std::move(coords);
      }
      keys[i] = std::move(best);
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(options.threads, raw.size()));
  if (threads <= 1) {
    work(0, raw.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (raw.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(raw.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  auto key_less = [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    return detail::masks_less(a, b);
  };
  std::map<std::vector<std::uint64_t>, std::size_t, decltype(key_less)> counts(key_less);
  for (const auto& key : keys) ++counts[key];

  std::vector<ColoringClass> out;
  for (const auto& [key, count] : counts) {
    ColoringClass cls;
    Coloring rep(s, static_cast<std::size_t>(n), detail::from_masks(key, static_cast<std::size_t>(n)));
    CanonicalData data = canonical_data(rep, autos);
    cls.representative = std::move(data.form);
    cls.stabilizer_order = data.stabilizer_order;
    cls.has_order3_symmetry = has_element_of_order(data.stabilizer, 3);
    cls.pinned_count = count;
    out.push_back(std::move(cls));
  }
  return out;
}

// Class list text: `class <ordinal> stabilizer <order>` followed by a coloring block.
inline void write_class_list(std::ostream& os, const std::vector<ColoringClass>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    os << "class " << (i + 1) << " stabilizer " << classes[i].stabilizer_order << "\n";
    write_coloring(os, classes[i].representative);
  }
}

// Reads a class list; stabilizer data is recomputed from the scheme.
inline std::vector<ColoringClass> read_class_list(std::istream& in, const SchemePtr& s) {
  std::vector<ColoringClass> out;
  const auto autos = automorphisms(*s);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key) || key[0] == '#') continue;
    std::size_t ordinal = 0, stab = 0;
    std::string word;
    if (key != "class" || !(fields >> ordinal >> word >> stab) || word != "stabilizer") {
      throw ParseError("expected 'class <ordinal> stabilizer <order>', got '" + line + "'");
    }
    if (ordinal != out.size() + 1) throw ParseError("class ordinals must be consecutive from 1");
    ColoringClass cls;
    const Coloring c = read_coloring(in, s);
    CanonicalData data = canonical_data(c, autos);
    if (data.stabilizer_order != stab) {
      throw ParseError("class " + std::to_string(ordinal) + ": recorded stabilizer " + std::to_string(stab) +
                       " but recomputed " + std::to_string(data.stabilizer_order));
    }
    cls.representative = std::move(data.form);
    cls.stabilizer_order = stab;
    cls.has_order3_symmetry = has_element_of_order(data.stabilizer, 3);
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace smallcover
