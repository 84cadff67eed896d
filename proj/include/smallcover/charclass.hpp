#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smallcover/coloring.hpp"
#include "smallcover/extension.hpp"
#include "smallcover/quotient.hpp"
#include "smallcover/scheme.hpp"

namespace smallcover {

class NotSmallCover : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoDualClass : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using QuotientPtr = std::shared_ptr<const GradedQuotient>;

// Homogeneous class in H^*(M; Z2), stored in normal form.
class CohomologyElement {
 public:
  CohomologyElement(QuotientPtr ring, std::size_t degree, const Polynomial& p)
      : ring_(std::move(ring)), degree_(degree), poly_(ring_->normal_form(p)) {
    if (degree_ > ring_->top_degree()) throw std::out_of_range("degree exceeds the top degree");
    for (const auto& m : poly_.terms()) {
      if (m.degree() != degree_) throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(degree_));
    }
  }

  static CohomologyElement zero(QuotientPtr ring, std::size_t degree) {
    const std::size_t k = ring->num_generators();
    return CohomologyElement(std::move(ring), degree, Polynomial(k));
  }

  const QuotientPtr& ring() const { return ring_; }
  std::size_t degree() const { return degree_; }
  const Polynomial& polynomial() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  std::string to_string() const { return poly_.to_string(); }

  friend CohomologyElement operator+(const CohomologyElement& a, const CohomologyElement& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("adding classes of different degree");
    return CohomologyElement(a.ring_, a.degree_, a.poly_ + b.poly_);
  }
  friend CohomologyElement operator*(const CohomologyElement& a, const CohomologyElement& b) {
    return CohomologyElement(a.ring_, a.degree_ + b.degree_, multiply(a.poly_, b.poly_));
  }
  friend bool operator==(const CohomologyElement& a, const CohomologyElement& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  QuotientPtr ring_;
  std::size_t degree_;
  Polynomial poly_;
};

// Stanley-Reisner ideal I of the scheme, one squarefree monomial per minimal non-face.
inline std::vector<Polynomial> face_ideal(const RightAngledScheme& s) {
  const auto k = static_cast<std::size_t>(s.num_facets());
  std::vector<Polynomial> out;
  for (const auto& t : minimal_nonfaces(s, static_cast<std::size_t>(s.dim()) + 1)) {
    std::vector<std::size_t> idx;
    for (int f : t) idx.push_back(static_cast<std::size_t>(f - 1));
    out.emplace_back(Monomial::squarefree(k, idx));
  }
  return out;
}

// Linear ideal J: the j-th generator is sum_i lambda(i)_j a_i.
inline std::vector<Polynomial> coloring_ideal(const Coloring& lambda) {
  const auto k = lambda.num_facets();
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < lambda.m(); ++j) {
    Polynomial p(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (lambda.colors()[i].test(j)) p.toggle(Monomial::generator(k, i));
    }
    out.push_back(std::move(p));
  }
  return out;
}

// H^*(M(P, lambda); Z2) = Z2[a1..ak] / (I + J) for a small cover.
inline QuotientPtr face_ring(const Coloring& lambda) {
  if (!is_small_cover(lambda)) throw NotSmallCover("not a small cover");
  const auto n = static_cast<std::size_t>(lambda.scheme().dim());
  auto ring = std::make_shared<const GradedQuotient>(lambda.num_facets(), n, face_ideal(lambda.scheme()),
                                                     coloring_ideal(lambda));
  if (ring->piece(n).dim() != 1) {
    throw std::runtime_error("top-degree cohomology has dimension " + std::to_string(ring->piece(n).dim()) +
                             ", expected 1");
  }
  return ring;
}

// Facets whose color has even weight.
inline FacetSet even_facets(const Coloring& lambda) {
  FacetSet out;
  for (std::size_t i = 0; i < lambda.num_facets(); ++i) {
    if (lambda.colors()[i].weight() % 2 == 0) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

struct W1Hypersurface {
  FacetSet e_set;
  HypersurfaceClassVector coefficients;
  std::optional<CohomologyElement> element;  // when a ring is given
  bool orientable() const { return e_set.empty() || (element && element->is_zero()); }
};

// w1 as the sum of the hypersurfaces over even-weight colors. Valid for any
// proper coloring; reduced in the ring when one is supplied.
inline W1Hypersurface w1_hypersurface(const Coloring& lambda, const QuotientPtr& ring = nullptr) {
  if (!is_proper(lambda)) throw ImproperColoring("w1_hypersurface needs a proper coloring");
  W1Hypersurface out;
  out.e_set = even_facets(lambda);
  out.coefficients = HypersurfaceClassVector(lambda.num_facets());
  for (int f : out.e_set) out.coefficients.set(static_cast<std::size_t>(f - 1));
  if (ring) {
    out.element = CohomologyElement(ring, 1, Polynomial::linear_form(lambda.num_facets(), out.coefficients));
  }
  return out;
}

// Sq1 is the derivation with Sq1(a_i) = a_i^2: on a monomial it adds a_j times
// the monomial for every odd exponent e_j.
inline CohomologyElement sq1(const CohomologyElement& x) {
  if (x.degree() + 1 > x.ring()->top_degree()) {
    throw std::out_of_range("sq1: degree " + std::to_string(x.degree() + 1) + " exceeds top degree");
  }
  const std::size_t k = x.ring()->num_generators();
  Polynomial out(k);
  for (const auto& m : x.polynomial().terms()) {
    for (std::size_t j = 0; j < k; ++j) {
      if (m.exponent(j) % 2 == 1) out.toggle(m.times_generator(j));
    }
  }
  return CohomologyElement(x.ring(), x.degree() + 1, out);
}

enum class Verdict { kYes, kNo, kUndetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    default: return "undetermined";
  }
}

struct SWData {
  QuotientPtr ring;
  std::vector<CohomologyElement> w;  // w[0..n]
  FacetSet e_set;
  bool orientable = false;
  bool spin = false;
  // w1 w2 + w3 (mod-2 reduction of W3) when n >= 3.
  std::optional<CohomologyElement> pinc_obstruction;

  const CohomologyElement& operator[](std::size_t i) const { return w.at(i); }
};

// Total Stiefel-Whitney class prod (1 + a_i); degree d is the elementary
// symmetric polynomial e_d(a_1..a_k).
inline SWData total_sw(const Coloring& lambda, QuotientPtr ring = nullptr) {
  if (!ring) ring = face_ring(lambda);
  const std::size_t n = ring->top_degree();
  const std::size_t k = ring->num_generators();
  SWData out;
  out.ring = ring;
  for (std::size_t d = 0; d <= n; ++d) out.w.emplace_back(ring, d, elementary_symmetric(k, d));
  out.e_set = even_facets(lambda);
  out.orientable = out.w[1].is_zero();
  out.spin = out.orientable && (n < 2 || out.w[2].is_zero());
  if (n >= 3) out.pinc_obstruction = out.w[1] * out.w[2] + out.w[3];
  return out;
}

struct PincReport {
  std::optional<CohomologyElement> element;
  Verdict pinc = Verdict::kUndetermined;
  Verdict spinc = Verdict::kUndetermined;
};

// A nonzero w1 w2 + w3 certifies W3 != 0, hence not pin^c; zero certifies nothing.
inline PincReport pinc_obstruction(const SWData& sw) {
  PincReport out;
  out.element = sw.pinc_obstruction;
  const bool obstructed = out.element && !out.element->is_zero();
  out.pinc = obstructed ? Verdict::kNo : Verdict::kUndetermined;
  out.spinc = (obstructed || !sw.orientable) ? Verdict::kNo : Verdict::kUndetermined;
  return out;
}

inline PincReport pinc_obstruction(const Coloring& lambda) { return pinc_obstruction(total_sw(lambda)); }

struct DualClass {
  HypersurfaceClassVector c;
  Polynomial product;  // normal form of w_d + w_{d-1} c
};

// w_d + w_{d-1} * c for a facet coefficient vector c, in normal form.
inline CohomologyElement whitney_target(const SWData& sw, const HypersurfaceClassVector& c, std::size_t degree) {
  const std::size_t k = sw.ring->num_generators();
  const CohomologyElement cls(sw.ring, 1, Polynomial::linear_form(k, c));
  return sw.w.at(degree) + sw.w.at(degree - 1) * cls;
}

// First facet generator a_i (in index order) with w_d + w_{d-1} a_i != 0 in
// H^d, falling back to c = 0 when w_d alone is nonzero.
inline DualClass find_dual_class(const SWData& sw, std::size_t degree) {
  const std::size_t k = sw.ring->num_generators();
  if (degree < 1 || degree > sw.ring->top_degree()) throw std::out_of_range("find_dual_class: bad degree");
  for (std::size_t i = 0; i < k; ++i) {
    const HypersurfaceClassVector c = BitVector::unit(k, i);
    const CohomologyElement t = whitney_target(sw, c, degree);
    if (!t.is_zero()) return {c, t.polynomial()};
  }
  if (!sw.w[degree].is_zero()) return {HypersurfaceClassVector(k), sw.w[degree].polynomial()};
  throw NoDualClass("w" + std::to_string(degree - 1) + " and w" + std::to_string(degree) +
                    " both vanish; no class c has w_d + w_{d-1} c != 0");
}

inline DualClass find_dual_class(const Coloring& lambda) {
  const SWData sw = total_sw(lambda);
  return find_dual_class(sw, sw.ring->top_degree());
}

}  // namespace smallcover
