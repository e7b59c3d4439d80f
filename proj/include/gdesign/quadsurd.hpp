#pragma once

#include <string>
#include <utility>

#include "gdesign/rational.hpp"

namespace gdesign {

/**
 * Element a + b*sqrt(5) of the real quadratic field Q[sqrt(5)].
 * Multiplication follows (sqrt 5)^2 = 5; equality is componentwise.
 */
class QuadSurd {
 public:
  QuadSurd() : a_(0), b_(0) {}
  QuadSurd(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  QuadSurd(long long a) : a_(a), b_(0) {}

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Galois conjugate a - b*sqrt(5).
  QuadSurd conjugate() const { return QuadSurd(a_, -b_); }

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    return QuadSurd(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) {
    return QuadSurd(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    return QuadSurd(x.a_ * y.a_ + Rational(5) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  QuadSurd operator-() const { return QuadSurd(-a_, -b_); }
  QuadSurd& operator+=(const QuadSurd& y) { a_ += y.a_; b_ += y.b_; return *this; }
  QuadSurd& operator-=(const QuadSurd& y) { a_ -= y.a_; b_ -= y.b_; return *this; }
  QuadSurd& operator*=(const QuadSurd& y) { *this = *this * y; return *this; }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadSurd& x, const QuadSurd& y) { return !(x == y); }

  double to_double() const;
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

QuadSurd quad_add(const QuadSurd& x, const QuadSurd& y);
QuadSurd quad_mul(const QuadSurd& x, const QuadSurd& y);

/// The two roots of x^2 - x - 1: ((1+sqrt5)/2, (1-sqrt5)/2).
std::pair<QuadSurd, QuadSurd> golden_ratio();

}  // namespace gdesign
