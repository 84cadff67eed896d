#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/scheme.hpp"
#include "smallcover/symmetry.hpp"

namespace smallcover {

using SchemePtr = std::shared_ptr<const RightAngledScheme>;

inline SchemePtr share(RightAngledScheme s) { return std::make_shared<const RightAngledScheme>(std::move(s)); }

// Assignment of a vector in GF(2)^m to every facet of a scheme.
class Coloring {
 public:
  Coloring() = default;
  Coloring(SchemePtr scheme, std::size_t m, std::vector<BitVector> colors)
      : scheme_(std::move(scheme)), m_(m), colors_(std::move(colors)) {
    if (!scheme_) throw std::invalid_argument("coloring needs a scheme");
    if (colors_.size() != static_cast<std::size_t>(scheme_->num_facets())) {
      throw std::invalid_argument("coloring has " + std::to_string(colors_.size()) + " colors for " +
                                  std::to_string(scheme_->num_facets()) + " facets");
    }
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      if (colors_[i].size() != m_) {
        throw std::invalid_argument("color of facet " + std::to_string(i + 1) + " has length " +
                                    std::to_string(colors_[i].size()) + ", expected " + std::to_string(m_));
      }
    }
  }

  const RightAngledScheme& scheme() const { return *scheme_; }
  const SchemePtr& scheme_ptr() const { return scheme_; }
  std::size_t m() const { return m_; }
  std::size_t num_facets() const { return colors_.size(); }
  const BitVector& color(int facet) const { return colors_.at(static_cast<std::size_t>(facet - 1)); }
  const std::vector<BitVector>& colors() const { return colors_; }

  // Same scheme, facet i recolored to the color of facet perm^-1(i).
  Coloring permuted(const FacetPermutation& perm) const {
    std::vector<BitVector> out(colors_.size());
    for (std::size_t i = 0; i < colors_.size(); ++i) out[static_cast<std::size_t>(perm[i] - 1)] = colors_[i];
    return Coloring(scheme_, m_, std::move(out));
  }

  // Applies the linear map whose images of the standard basis are `columns`.
  Coloring recolored(const std::vector<BitVector>& columns) const {
    if (columns.size() != m_) throw std::invalid_argument("recoloring matrix has wrong width");
    const std::size_t target = columns.empty() ? 0 : columns[0].size();
    std::vector<BitVector> out;
    for (const auto& c : colors_) {
      BitVector image(target);
      for (std::size_t b = 0; b < m_; ++b) {
        if (c.test(b)) image ^= columns[b];
      }
      out.push_back(std::move(image));
    }
    return Coloring(scheme_, target, std::move(out));
  }

  // Equality of colors and color dimension; schemes are compared by value.
  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.m_ == b.m_ && a.colors_ == b.colors_ &&
           (a.scheme_ == b.scheme_ || (a.scheme_ && b.scheme_ && *a.scheme_ == *b.scheme_));
  }

 private:
  SchemePtr scheme_;
  std::size_t m_ = 0;
  std::vector<BitVector> colors_;
};

struct ProperCheck {
  bool proper = true;
  // First offending vertex (index into scheme().vertices()) when not proper.
  std::optional<std::size_t> witness;
  explicit operator bool() const { return proper; }
};

// Colors at every vertex must be linearly independent.
inline ProperCheck is_proper(const Coloring& c) {
  const auto& verts = c.scheme().vertices();
  for (std::size_t v = 0; v < verts.size(); ++v) {
    SpanBuilder span(c.m());
    for (int f : verts[v]) {
      if (!span.insert(c.color(f))) return {false, v};
    }
  }
  return {true, std::nullopt};
}

struct ComponentInfo {
  std::size_t span_rank = 0;
  std::size_t codim = 0;  // m - rank; there are 2^codim components
  std::vector<BitVector> span_basis;

  std::uint64_t count() const {
    if (codim >= 64) throw std::overflow_error("component count 2^" + std::to_string(codim) + " overflows");
    return std::uint64_t{1} << codim;
  }
};

inline ComponentInfo components(const Coloring& c) {
  SpanBuilder span(c.m());
  for (const auto& col : c.colors()) span.insert(col);
  ComponentInfo out;
  out.span_rank = span.rank();
  out.codim = c.m() - span.rank();
  out.span_basis = span.basis();
  return out;
}

inline bool is_small_cover(const Coloring& c) {
  const auto n = static_cast<std::size_t>(c.scheme().dim());
  return c.m() == n && is_proper(c) && components(c).codim == 0;
}

namespace detail {

// Order on masks agreeing with BitVector's: first differing low bit decides.
inline bool mask_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

inline bool masks_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return mask_less(a[i], b[i]);
  }
  return false;
}

// Coordinates of each color in the basis of first-seen independent colors
// (facet order). Works on masks of rank <= 64.
inline std::vector<std::uint64_t> basis_coordinates(const std::vector<std::uint64_t>& colors) {
  std::vector<std::uint64_t> rows, combos, out;
  std::size_t rank = 0;
  out.reserve(colors.size());
  for (std::uint64_t v : colors) {
    std::uint64_t coeff = 0;
    std::uint64_t residue = v;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t pivot = rows[r] & (~rows[r] + 1);
      if (residue & pivot) {
        residue ^= rows[r];
        coeff ^= combos[r];
      }
    }
    if (residue != 0) {
      const std::uint64_t fresh = std::uint64_t{1} << rank;
      ++rank;
      // Keep earlier rows free of the new pivot so reduction order is valid.
      const std::uint64_t pivot = residue & (~residue + 1);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] & pivot) {
          rows[r] ^= residue;
          combos[r] ^= coeff ^ fresh;
        }
      }
      rows.push_back(residue);
      combos.push_back(coeff ^ fresh);
      coeff = fresh;
    }
    out.push_back(coeff);
  }
  return out;
}

inline std::vector<BitVector> basis_coordinates(const std::vector<BitVector>& colors, std::size_t m) {
  SpanBuilder span(m);
  for (const auto& c : colors) span.insert(c);
  SpanBuilder ordered(m);
  std::vector<BitVector> out;
  for (const auto& c : colors) {
    ordered.insert(c);
    out.push_back(ordered.coordinates(c)->resized(span.rank()));
  }
  return out;
}

inline std::vector<std::uint64_t> to_masks(const std::vector<BitVector>& colors) {
  std::vector<std::uint64_t> out;
  for (const auto& c : colors) out.push_back(c.words().empty() ? 0 : c.words()[0]);
  return out;
}

inline std::vector<BitVector> from_masks(const std::vector<std::uint64_t>& masks, std::size_t m) {
  std::vector<BitVector> out;
  for (auto mask : masks) {
    BitVector v(m);
    for (std::size_t b = 0; b < m; ++b) v.set(b, (mask >> b) & 1U);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// Replaces V by span(image), with coordinates in the basis of first-seen
// independent colors. Invariant under invertible recoloring.
inline Coloring restrict_to_span(const Coloring& c) {
  auto coords = detail::basis_coordinates(c.colors(), c.m());
  const std::size_t r = components(c).span_rank;
  return Coloring(c.scheme_ptr(), r, std::move(coords));
}

// Canonical representative under Aut(S) x GL(V) plus stabilizer data.
struct CanonicalData {
  Coloring form;
  std::size_t stabilizer_order = 0;
  std::vector<FacetPermutation> stabilizer;
};

inline CanonicalData canonical_data(const Coloring& c, const std::vector<FacetPermutation>& automorphisms) {
  const Coloring base = restrict_to_span(c);
  const std::size_t r = base.m();
  CanonicalData out;
  if (r <= 64) {
    const std::vector<std::uint64_t> masks = detail::to_masks(base.colors());
    const std::vector<std::uint64_t> own = detail::basis_coordinates(masks);
    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> permuted(masks.size());
    for (const auto& sigma : automorphisms) {
      for (std::size_t i = 0; i < masks.size(); ++i) permuted[static_cast<std::size_t>(sigma[i] - 1)] = masks[i];
      auto coords = detail::basis_coordinates(permuted);
      if (coords == own) out.stabilizer.push_back(sigma);
      if (best.empty() || detail::masks_less(coords, best)) best = std::move(coords);
    }
    out.form = Coloring(c.scheme_ptr(), r, detail::from_masks(best, r));
  } else {
    std::optional<std::vector<BitVector>> best;
    for (const auto& sigma : automorphisms) {
      auto coords = detail::basis_coordinates(base.permuted(sigma).colors(), r);
      if (coords == base.colors()) out.stabilizer.push_back(sigma);
      if (!best || coords < *best) best = std::move(coords);
    }
    out.form = Coloring(c.scheme_ptr(), r, std::move(*best));
  }
  out.stabilizer_order = out.stabilizer.size();
  return out;
}

inline Coloring canonical_form(const Coloring& c, const std::vector<FacetPermutation>& automorphisms) {
  return canonical_data(c, automorphisms).form;
}

inline Coloring canonical_form(const Coloring& c) { return canonical_form(c, automorphisms(c.scheme())); }

// Coloring text: `m <int>` then `facet <i>: <bits>` for every facet.
inline void write_coloring(std::ostream& os, const Coloring& c) {
  os << "m " << c.m() << "\n";
  for (std::size_t i = 0; i < c.num_facets(); ++i) {
    os << "facet " << (i + 1) << ": " << c.colors()[i].to_string() << "\n";
  }
}

inline std::string coloring_to_string(const Coloring& c) {
  std::ostringstream os;
  write_coloring(os, c);
  return os.str();
}

// Reads one coloring block for `scheme`; stops after the last facet line.
inline Coloring read_coloring(std::istream& in, SchemePtr scheme) {
  std::string line;
  std::optional<std::size_t> m;
  const auto k = static_cast<std::size_t>(scheme->num_facets());
  std::vector<std::optional<BitVector>> colors(k);
  std::size_t seen = 0;
  while (seen < k && std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    if (!m) {
      std::size_t value = 0;
      if (key != "m" || !(fields >> value)) throw ParseError("expected 'm <int>', got '" + line + "'");
      m = value;
      continue;
    }
    std::string label, bits;
    if (key != "facet" || !(fields >> label >> bits) || label.empty() || label.back() != ':') {
      throw ParseError("expected 'facet <i>: <bits>', got '" + line + "'");
    }
    const std::size_t facet = std::stoul(label.substr(0, label.size() - 1));
    if (facet < 1 || facet > k) throw ParseError("facet index " + std::to_string(facet) + " out of range");
    if (bits.size() != *m) throw ParseError("facet " + std::to_string(facet) + ": bitstring length != m");
    if (colors[facet - 1]) throw ParseError("facet " + std::to_string(facet) + " colored twice");
    try {
      colors[facet - 1] = BitVector::from_string(bits);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    ++seen;
  }
  if (!m || seen < k) throw ParseError("coloring block incomplete");
  std::vector<BitVector> out;
  for (auto& c : colors) out.push_back(std::move(*c));
  return Coloring(std::move(scheme), *m, std::move(out));
}

inline Coloring coloring_from_string(const std::string& text, SchemePtr scheme) {
  std::istringstream in(text);
  return read_coloring(in, std::move(scheme));
}

// Convenience: colors given as bitstrings, facet order.
inline Coloring make_coloring(SchemePtr scheme, const std::vector<std::string>& bits) {
  std::vector<BitVector> colors;
  for (const auto& b : bits) colors.push_back(BitVector::from_string(b));
  const std::size_t m = colors.empty() ? 0 : colors[0].size();
  return Coloring(std::move(scheme), m, std::move(colors));
}

}  // namespace smallcover
