#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/polynomial.hpp"

namespace smallcover {

// Degree-d monomials with a lookup from monomial to column.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(std::size_t k, std::size_t d) : monomials_(monomials_of_degree(k, d)) {
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  std::size_t column(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("monomial " + m.to_string() + " not in basis");
    return it->second;
  }

  BitVector coordinates(const Polynomial& p) const {
    BitVector v(monomials_.size());
    for (const auto& m : p.terms()) v.flip(column(m));
    return v;
  }

  Polynomial polynomial(const BitVector& v, std::size_t k) const {
    Polynomial p(k);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v.test(i)) p.toggle(monomials_[i]);
    }
    return p;
  }

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// Reduced echelon basis of the degree-d part of the ideal generated by
// `generators` (homogeneous), over the degree-d monomials of `basis`.
inline RrefResult degree_span(const std::vector<Polynomial>& generators, std::size_t d,
                              std::size_t k, const MonomialBasis& basis) {
  BitMatrix rows(basis.size());
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const auto gd = g.homogeneous_degree();
    if (!gd) throw std::invalid_argument("ideal generator is not homogeneous: " + g.to_string());
    if (*gd > d) continue;
    for (const auto& m : monomials_of_degree(k, d - *gd)) {
      rows.push_back(basis.coordinates(multiply(Polynomial(m), g)));
    }
  }
  return rref(std::move(rows));
}

// Echelon basis of (I + J)_d over the degree-d monomials in k generators.
inline RrefResult ideal_degree_span(const std::vector<Polynomial>& i_gens,
                                    const std::vector<Polynomial>& j_gens, std::size_t d,
                                    std::size_t k) {
  std::vector<Polynomial> all = i_gens;
  all.insert(all.end(), j_gens.begin(), j_gens.end());
  return degree_span(all, d, k, MonomialBasis(k, d));
}

// Z2[a1..ak]/(I + J) truncated at degree n, one echelon basis per degree.
class GradedQuotient {
 public:
  struct Piece {
    MonomialBasis basis;
    RrefResult relations;
    std::size_t dim() const { return basis.size() - relations.rank; }
  };

  GradedQuotient(std::size_t k, std::size_t top_degree, std::vector<Polynomial> i_gens,
                 std::vector<Polynomial> j_gens)
      : k_(k), top_(top_degree), i_gens_(std::move(i_gens)), j_gens_(std::move(j_gens)) {
    std::vector<Polynomial> all = i_gens_;
    all.insert(all.end(), j_gens_.begin(), j_gens_.end());
    pieces_.reserve(top_ + 1);
    for (std::size_t d = 0; d <= top_; ++d) {
      Piece piece;
      piece.basis = MonomialBasis(k_, d);
      piece.relations = degree_span(all, d, k_, piece.basis);
      pieces_.push_back(std::move(piece));
    }
  }

  std::size_t num_generators() const { return k_; }
  std::size_t top_degree() const { return top_; }
  const std::vector<Polynomial>& i_generators() const { return i_gens_; }
  const std::vector<Polynomial>& j_generators() const { return j_gens_; }

  const Piece& piece(std::size_t d) const {
    if (d > top_) throw std::out_of_range("degree " + std::to_string(d) + " exceeds " + std::to_string(top_));
    return pieces_[d];
  }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& p : pieces_) out.push_back(p.dim());
    return out;
  }

  // Unique representative modulo I + J, reduced degree by degree.
  Polynomial normal_form(const Polynomial& p) const {
    if (p.num_generators() != k_) throw std::invalid_argument("normal_form: wrong ring");
    Polynomial out(k_);
    std::vector<bool> seen(top_ + 1, false);
    for (const auto& m : p.terms()) {
      const auto d = m.degree();
      if (d > top_) {
        throw std::out_of_range("normal_form: degree " + std::to_string(d) + " exceeds " +
                                std::to_string(top_));
      }
      if (seen[d]) continue;
      seen[d] = true;
      const Piece& piece = pieces_[d];
      BitVector v = piece.basis.coordinates(p.part(d));
      const auto& rows = piece.relations;
      for (std::size_t r = 0; r < rows.rank; ++r) {
        if (v.test(rows.pivots[r])) v ^= rows.matrix[r];
      }
      out += piece.basis.polynomial(v, k_);
    }
    return out;
  }

  bool is_zero(const Polynomial& p) const { return normal_form(p).is_zero(); }

  Polynomial product(const Polynomial& p, const Polynomial& q) const {
    return normal_form(multiply(p, q));
  }

 private:
  std::size_t k_;
  std::size_t top_;
  std::vector<Polynomial> i_gens_;
  std::vector<Polynomial> j_gens_;
  std::vector<Piece> pieces_;
};

// Second route to the same quotient: the linear relations J are solved for
// their pivot generators, which are substituted away, leaving
// Z2[free generators] / (substituted I).
class SubstitutedQuotient {
 public:
  SubstitutedQuotient(std::size_t k, std::size_t top_degree, const std::vector<Polynomial>& i_gens,
                      const std::vector<Polynomial>& j_gens)
      : k_(k), top_(top_degree) {
    BitMatrix linear(k);
    for (const auto& g : j_gens) {
      BitVector row(k);
      for (const auto& m : g.terms()) {
        if (m.degree() != 1) throw std::invalid_argument("J generator is not linear: " + g.to_string());
        for (std::size_t i = 0; i < k; ++i) {
          if (m.exponent(i)) row.flip(i);
        }
      }
      linear.push_back(std::move(row));
    }
    const RrefResult solved = rref(std::move(linear));
    std::vector<bool> is_pivot(k, false);
    for (auto p : solved.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_index(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (!is_pivot[i]) free_index[i] = free_count_++;
    }
    if (free_count_ == 0) throw std::invalid_argument("J leaves no free generators");

    images_.assign(k, Polynomial(free_count_));
    for (std::size_t i = 0; i < k; ++i) {
      if (!is_pivot[i]) images_[i] = Polynomial::generator(free_count_, free_index[i]);
    }
    // Row r reads a_p + sum_f row[f] a_f = 0, so a_p = sum_f row[f] a_f.
    for (std::size_t r = 0; r < solved.rank; ++r) {
      Polynomial image(free_count_);
      for (std::size_t i = 0; i < k; ++i) {
        if (i != solved.pivots[r] && solved.matrix[r].test(i)) {
          image.toggle(Monomial::generator(free_count_, free_index[i]));
        }
      }
      images_[solved.pivots[r]] = std::move(image);
    }

    std::vector<Polynomial> reduced;
    for (const auto& g : i_gens) reduced.push_back(substitute(g));
    for (std::size_t d = 0; d <= top_; ++d) {
      bases_.emplace_back(free_count_, d);
      spans_.push_back(degree_span(reduced, d, free_count_, bases_.back()));
    }
  }

  std::size_t free_generators() const { return free_count_; }

  Polynomial substitute(const Polynomial& p) const {
    Polynomial out(free_count_);
    for (const auto& m : p.terms()) {
      Polynomial term = Polynomial::one(free_count_);
      for (std::size_t i = 0; i < k_; ++i) {
        for (std::size_t e = 0; e < m.exponent(i); ++e) term = multiply(term, images_[i]);
      }
      out += term;
    }
    return out;
  }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d <= top_; ++d) out.push_back(bases_[d].size() - spans_[d].rank);
    return out;
  }

  bool is_zero(const Polynomial& p) const {
    const Polynomial s = substitute(p);
    for (std::size_t d = 0; d <= top_; ++d) {
      const Polynomial part = s.part(d);
      if (part.is_zero()) continue;
      BitVector v = bases_[d].coordinates(part);
      const auto& rows = spans_[d];
      for (std::size_t r = 0; r < rows.rank; ++r) {
        if (v.test(rows.pivots[r])) v ^= rows.matrix[r];
      }
      if (v.any()) return false;
    }
    return true;
  }

 private:
  std::size_t k_;
  std::size_t top_;
  std::size_t free_count_ = 0;
  std::vector<Polynomial> images_;
  std::vector<MonomialBasis> bases_;
  std::vector<RrefResult> spans_;
};

}  // namespace smallcover
