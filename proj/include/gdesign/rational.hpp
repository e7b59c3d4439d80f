#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace gdesign {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Arbitrary-precision rational, always in lowest terms with positive
 * denominator. Thin wrapper over boost::multiprecision::cpp_rational with a
 * controlled conversion surface so it can serve as an Eigen scalar.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}
  Rational(int n) : v_(n) {}
  Rational(long long num, long long den) : v_(num) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ /= den;
  }
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num) {
    if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    v_ /= den;
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.v_ + y.v_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.v_ - y.v_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.v_ * y.v_); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(x.v_ / y.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
  Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

  double to_double() const { return v_.convert_to<double>(); }

  /// Renders as "num" or "num/den"; parseable back by parse().
  std::string to_string() const { return v_.str(); }
  static Rational parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

Rational abs(const Rational& x);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// binomial() narrowed to long long; throws if the value does not fit.
long long binomial_ll(int n, int k);

}  // namespace gdesign

namespace Eigen {

template <>
struct NumTraits<gdesign::Rational> : GenericNumTraits<gdesign::Rational> {
  using Real = gdesign::Rational;
  using NonInteger = gdesign::Rational;
  using Nested = gdesign::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return gdesign::Rational(0); }
  static inline Real dummy_precision() { return gdesign::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
