#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gdesign/rational.hpp"

namespace gdesign {

int euler_phi(int q);

/**
 * Monic q-th cyclotomic polynomial, coefficients ascending by degree
 * (length euler_phi(q) + 1). Computed by exact division of X^q - 1 by the
 * product of all lower cyclotomic polynomials over divisors of q.
 */
std::vector<BigInt> cyclotomic_polynomial(int q);

/**
 * Integer combination of powers of a primitive q-th root of unity, kept
 * reduced modulo the q-th cyclotomic polynomial so that equality of values
 * is equality of coefficient vectors.
 */
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int q);  // zero element

  static CyclotomicInt root_power(int q, long long k);  // omega^k

  int modulus() const { return q_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CyclotomicInt& operator+=(const CyclotomicInt& y);
  CyclotomicInt& operator-=(const CyclotomicInt& y);
  friend CyclotomicInt operator+(CyclotomicInt x, const CyclotomicInt& y) { return x += y; }
  friend CyclotomicInt operator-(CyclotomicInt x, const CyclotomicInt& y) { return x -= y; }
  friend CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y);
  CyclotomicInt operator-() const;
  friend bool operator==(const CyclotomicInt& x, const CyclotomicInt& y) {
    return x.q_ == y.q_ && x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const CyclotomicInt& x, const CyclotomicInt& y) { return !(x == y); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  int q_;
  std::vector<BigInt> coeffs_;  // length euler_phi(q_)
  friend CyclotomicInt cyclo_from_power_sums(int q, const std::vector<BigInt>& counts);
};

/**
 * Reduction of sum_j counts[j] * omega^j modulo the q-th cyclotomic
 * polynomial; the result is zero exactly when the character sum vanishes.
 */
CyclotomicInt cyclo_from_power_sums(int q, const std::vector<BigInt>& counts);

}  // namespace gdesign
