#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace smallcover {

// Packed vector over GF(2). Bit i lives in word i / 64 at position i % 64;
// bits past size() are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  // Parses a string of '0'/'1' characters, bit 0 first.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("bitstring contains '" +
                                    std::string(1, bits[i]) + "'");
      }
    }
    return v;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  bool any() const { return !none(); }

  std::size_t weight() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  // Index of the lowest set bit, or size() when zero.
  std::size_t lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return size_;
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  BitVector& operator&=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator+(BitVector a, const BitVector& b) { return a ^= b; }

  // Parity of the bitwise AND.
  friend bool dot(const BitVector& a, const BitVector& b) {
    a.check_same_size(b);
    Word acc = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) acc ^= a.words_[w] & b.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  // Concatenation: this vector's bits first.
  BitVector concat(const BitVector& tail) const {
    BitVector out(size_ + tail.size_);
    for (std::size_t i = 0; i < size_; ++i) out.set(i, test(i));
    for (std::size_t i = 0; i < tail.size_; ++i) out.set(size_ + i, tail.test(i));
    return out;
  }

  // Same bits, zero-padded or truncated to `size`.
  BitVector resized(std::size_t size) const {
    BitVector out(size);
    for (std::size_t i = 0; i < std::min(size, size_); ++i) out.set(i, test(i));
    return out;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  // Lexicographic on bit indices 0..size-1 with 0 < 1; shorter vectors first.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const Word diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        const Word low = diff & (~diff + 1);
        return (a.words_[w] & low) ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  const std::vector<Word>& words() const { return words_; }

 private:
  void check_same_size(const BitVector& other) const {
    if (size_ != other.size_) {
      throw std::invalid_argument("BitVector size mismatch: " + std::to_string(size_) +
                                  " vs " + std::to_string(other.size_));
    }
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}

  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols) {
    BitMatrix m(cols);
    for (auto& r : rows) m.push_back(std::move(r));
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  void push_back(BitVector row) {
    if (row.size() != cols_) throw std::invalid_argument("BitMatrix row has wrong length");
    rows_.push_back(std::move(row));
  }

  BitVector& operator[](std::size_t r) { return rows_[r]; }
  const BitVector& operator[](std::size_t r) const { return rows_[r]; }
  const std::vector<BitVector>& row_list() const { return rows_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (rows_[r].test(c)) t.set(c, r);
      }
    }
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix matrix;  // nonzero rows only, in pivot order
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination, pivots chosen left to right. Zero rows are
// dropped, so the result is the unique reduced echelon basis of the row space.
inline RrefResult rref(BitMatrix m) {
  std::vector<BitVector> rows = m.row_list();
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < m.cols() && top < rows.size(); ++col) {
    std::size_t found = top;
    while (found < rows.size() && !rows[found].test(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[top], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != top && rows[r].test(col)) rows[r] ^= rows[top];
    }
    pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  RrefResult out;
  out.matrix = BitMatrix::from_rows(std::move(rows), m.cols());
  out.rank = top;
  out.pivots = std::move(pivots);
  return out;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

// Incremental echelon basis. Tracks, for every stored row, which of the
// inserted basis vectors it is a combination of, so members of the span can
// be written in coordinates of the insertion-ordered basis.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<BitVector>& basis() const { return basis_; }

  // Coordinates of v in the basis when v is in the span.
  std::optional<BitVector> coordinates(const BitVector& v) const {
    auto [residue, coeffs] = reduce(v);
    if (residue.any()) return std::nullopt;
    return coeffs;
  }

  bool contains(const BitVector& v) const { return reduce(v).first.none(); }

  // Adds v to the basis if independent; returns whether it was.
  bool insert(const BitVector& v) {
    auto [residue, coeffs] = reduce(v);
    if (residue.none()) return false;
    const std::size_t index = basis_.size();
    basis_.push_back(v);
    for (auto& c : combos_) c = c.resized(index + 1);
    coeffs = coeffs.resized(index + 1);
    coeffs.set(index);
    pivots_.push_back(residue.lowest());
    rows_.push_back(std::move(residue));
    combos_.push_back(std::move(coeffs));
    return true;
  }

 private:
  std::pair<BitVector, BitVector> reduce(BitVector v) const {
    BitVector coeffs(basis_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v.test(pivots_[r])) {
        v ^= rows_[r];
        coeffs ^= combos_[r];
      }
    }
    return {std::move(v), std::move(coeffs)};
  }

  std::size_t dim_;
  std::vector<BitVector> basis_;
  std::vector<BitVector> rows_;
  std::vector<BitVector> combos_;
  std::vector<std::size_t> pivots_;
};

inline bool linearly_independent(const std::vector<BitVector>& vectors, std::size_t dim) {
  SpanBuilder span(dim);
  for (const auto& v : vectors) {
    if (!span.insert(v)) return false;
  }
  return true;
}

}  // namespace smallcover
