#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <boost/rational.hpp>

namespace smallcover {

// Exact element a + b*phi of Q(sqrt 5), phi = (1 + sqrt 5) / 2, phi^2 = phi + 1.
class GoldenNumber {
 public:
  using Rational = boost::rational<std::int64_t>;

  GoldenNumber() = default;
  GoldenNumber(Rational a, Rational b = 0) : a_(a), b_(b) {}
  GoldenNumber(std::int64_t a) : a_(a), b_(0) {}

  static GoldenNumber phi() { return {0, 1}; }
  static GoldenNumber sqrt5() { return {-1, 2}; }  // 2*phi - 1

  const Rational& rational_part() const { return a_; }
  const Rational& phi_part() const { return b_; }

  GoldenNumber operator-() const { return {-a_, -b_}; }
  friend GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
  friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
    const Rational bd = x.b_ * y.b_;
    return {x.a_ * y.a_ + bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
  }
  // Inverse via the conjugate phi -> 1 - phi; norm is a^2 + ab - b^2.
  GoldenNumber inverse() const {
    const Rational norm = a_ * a_ + a_ * b_ - b_ * b_;
    // Rational(0): comparing with a plain int recurses in boost 1.74 under C++20.
    if (norm == Rational(0)) throw std::domain_error("GoldenNumber: division by zero");
    return {(a_ + b_) / norm, -b_ / norm};
  }
  friend GoldenNumber operator/(const GoldenNumber& x, const GoldenNumber& y) {
    return x * y.inverse();
  }
  GoldenNumber& operator+=(const GoldenNumber& y) { return *this = *this + y; }

  // Sign of a + b phi = (2a + b)/2 + (b/2) sqrt 5, decided exactly.
  int sign() const {
    const Rational x = 2 * a_ + b_;
    const Rational& y = b_;
    const int sx = x > 0 ? 1 : (x < 0 ? -1 : 0);
    const int sy = y > 0 ? 1 : (y < 0 ? -1 : 0);
    if (sx == 0) return sy;
    if (sy == 0 || sx == sy) return sx;
    // Opposite signs: compare x^2 with 5 y^2.
    const Rational lhs = x * x;
    const Rational rhs = 5 * y * y;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sx : sy;
  }

  double to_double() const {
    return boost::rational_cast<double>(a_) + boost::rational_cast<double>(b_) * 1.6180339887498949;
  }

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const GoldenNumber& x) {
    return os << x.a_ << " + " << x.b_ << "*phi";
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

}  // namespace smallcover
