#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smallcover {

// Monomial in generators a1..ak, stored as an exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t k) : exps_(k, 0) {}
  explicit Monomial(std::vector<std::uint8_t> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t k) { return Monomial(k); }
  // The generator a_{index+1}.
  static Monomial generator(std::size_t k, std::size_t index) {
    Monomial m(k);
    m.exps_.at(index) = 1;
    return m;
  }
  // Product of the given generators (0-based), each to the first power.
  static Monomial squarefree(std::size_t k, const std::vector<std::size_t>& indices) {
    Monomial m(k);
    for (auto i : indices) m.exps_.at(i) += 1;
    return m;
  }

  std::size_t num_generators() const { return exps_.size(); }
  std::uint8_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint8_t>& exponents() const { return exps_; }

  std::size_t degree() const {
    std::size_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  Monomial operator*(const Monomial& other) const {
    if (other.exps_.size() != exps_.size()) {
      throw std::invalid_argument("monomials over different generator counts");
    }
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      const unsigned e = unsigned{out.exps_[i]} + other.exps_[i];
      if (e > 255) throw std::overflow_error("monomial exponent overflow");
      out.exps_[i] = static_cast<std::uint8_t>(e);
    }
    return out;
  }

  // Multiplies by a_{index+1}.
  Monomial times_generator(std::size_t index) const {
    Monomial out(*this);
    out.exps_.at(index) += 1;
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded order: lower degree first; within a degree, larger exponent of a1
  // first, then of a2, and so on (a1^2 < a1*a2 < a2^2).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da <=> db;
    return b.exps_ <=> a.exps_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'a' + std::to_string(i + 1);
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<std::uint8_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

// All monomials of degree d in k generators, in the graded order above.
inline std::vector<Monomial> monomials_of_degree(std::size_t k, std::size_t d) {
  if (k == 0) throw std::invalid_argument("monomials_of_degree: k must be positive");
  std::vector<Monomial> out;
  std::vector<std::uint8_t> exps(k, 0);
  // Emits exponent vectors in descending lexicographic order.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == k) {
      exps[pos] = static_cast<std::uint8_t>(left);
      out.emplace_back(exps);
      return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
      exps[pos] = static_cast<std::uint8_t>(e);
      rec(pos + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

// Polynomial over GF(2): a set of monomials, addition toggles membership.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t k) : k_(k) {}
  explicit Polynomial(const Monomial& m) : k_(m.num_generators()) { terms_.insert(m); }

  static Polynomial one(std::size_t k) { return Polynomial(Monomial::one(k)); }
  static Polynomial generator(std::size_t k, std::size_t index) {
    return Polynomial(Monomial::generator(k, index));
  }
  // Sum of generators a_{i+1} over the set bits of `coeffs` (indexed by i).
  template <typename Bits>
  static Polynomial linear_form(std::size_t k, const Bits& coeffs) {
    Polynomial p(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (coeffs.test(i)) p.toggle(Monomial::generator(k, i));
    }
    return p;
  }

  std::size_t num_generators() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::set<Monomial>& terms() const { return terms_; }

  bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

  void toggle(const Monomial& m) {
    if (m.num_generators() != k_) {
      throw std::invalid_argument("monomial has " + std::to_string(m.num_generators()) +
                                  " generators, polynomial has " + std::to_string(k_));
    }
    auto [it, inserted] = terms_.insert(m);
    if (!inserted) terms_.erase(it);
  }

  // Homogeneous degree, or nullopt for zero/inhomogeneous.
  std::optional<std::size_t> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto d = terms_.begin()->degree();
    for (const auto& m : terms_) {
      if (m.degree() != d) return std::nullopt;
    }
    return d;
  }

  // Terms of exactly degree d.
  Polynomial part(std::size_t d) const {
    Polynomial out(k_);
    for (const auto& m : terms_) {
      if (m.degree() == d) out.terms_.insert(m);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& other) {
    check_same_ring(other);
    for (const auto& m : other.terms_) toggle(m);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& m : terms_) {
      if (!out.empty()) out += " + ";
      out += m.to_string();
    }
    return out;
  }

  // Parses the to_string() format, e.g. "a1*a3 + a2^2", "1", "0".
  static Polynomial parse(std::string_view text, std::size_t k) {
    Polynomial p(k);
    std::string s(text);
    std::size_t pos = 0;
    auto trim = [](std::string t) {
      const auto b = t.find_first_not_of(" \t");
      const auto e = t.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    while (pos <= s.size()) {
      auto next = s.find('+', pos);
      if (next == std::string::npos) next = s.size();
      const std::string term = trim(s.substr(pos, next - pos));
      pos = next + 1;
      if (term.empty()) throw std::invalid_argument("empty term in polynomial '" + s + "'");
      if (term == "0") continue;
      Monomial m(k);
      if (term != "1") {
        std::stringstream factors(term);
        std::string factor;
        while (std::getline(factors, factor, '*')) {
          factor = trim(factor);
          if (factor.size() < 2 || factor[0] != 'a') {
            throw std::invalid_argument("bad factor '" + factor + "'");
          }
          const auto caret = factor.find('^');
          const std::size_t idx = std::stoul(factor.substr(1, caret - 1));
          const std::size_t e = caret == std::string::npos ? 1 : std::stoul(factor.substr(caret + 1));
          if (idx == 0 || idx > k) throw std::invalid_argument("generator index out of range");
          for (std::size_t r = 0; r < e; ++r) m = m.times_generator(idx - 1);
        }
      }
      p.toggle(m);
    }
    return p;
  }

 private:
  void check_same_ring(const Polynomial& other) const {
    if (other.k_ != k_) throw std::invalid_argument("polynomials over different rings");
  }

  std::size_t k_ = 0;
  std::set<Monomial> terms_;
};

// GF(2) product: XOR of all pairwise monomial products.
inline Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  if (p.num_generators() != q.num_generators()) {
    throw std::invalid_argument("multiply: polynomials over different rings");
  }
  Polynomial out(p.num_generators());
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) out.toggle(a * b);
  }
  return out;
}

// Elementary symmetric polynomial: sum of all products of d distinct generators.
inline Polynomial elementary_symmetric(std::size_t k, std::size_t d) {
  Polynomial out(k);
  if (d > k) return out;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    out.toggle(Monomial::squarefree(k, idx));
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == k - d + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace smallcover
