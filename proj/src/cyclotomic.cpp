#include "gdesign/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gdesign {

int euler_phi(int q) {
  if (q < 1) throw std::domain_error("euler_phi: q must be positive");
  int result = q;
  int m = q;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Quotient of exact polynomial division (ascending coefficients, monic
// divisor); remainder is checked to be zero.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  if (den.back() != 1) throw std::logic_error("divide_exact: divisor not monic");
  std::vector<BigInt> quot(dn - dd + 1, BigInt(0));
  for (int k = dn - dd; k >= 0; --k) {
    BigInt c = num[k + dd];
    quot[k] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const BigInt& c : num)
    if (!c.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int q) {
  if (q < 1) throw std::domain_error("cyclotomic_polynomial: q must be positive");
  static std::map<int, std::vector<BigInt>> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  // Fill the cache along divisors of q in ascending order: Phi_d is
  // (X^d - 1) divided by the product of Phi_e over proper divisors e of d.
  for (int d = 1; d <= q; ++d) {
    if (q % d != 0 || cache.count(d)) continue;
    std::vector<BigInt> num(d + 1, BigInt(0));
    num[0] = -1;
    num[d] = 1;
    std::vector<BigInt> den{BigInt(1)};
    for (int e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      const auto& phi_e = cache.at(e);
      std::vector<BigInt> prod(den.size() + phi_e.size() - 1, BigInt(0));
      for (size_t i = 0; i < den.size(); ++i)
        for (size_t j = 0; j < phi_e.size(); ++j) prod[i + j] += den[i] * phi_e[j];
      den = std::move(prod);
    }
    cache.emplace(d, divide_exact(std::move(num), den));
  }
  return cache.at(q);
}

CyclotomicInt::CyclotomicInt(int q) : q_(q), coeffs_(euler_phi(q), BigInt(0)) {
  if (q < 1) throw std::domain_error("CyclotomicInt: q must be positive");
}

CyclotomicInt CyclotomicInt::root_power(int q, long long k) {
  std::vector<BigInt> counts(q, BigInt(0));
  long long r = ((k % q) + q) % q;
  counts[static_cast<size_t>(r)] = 1;
  return cyclo_from_power_sums(q, counts);
}

bool CyclotomicInt::is_zero() const {
  for (const BigInt& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& y) {
  if (q_ != y.q_) throw std::invalid_argument("CyclotomicInt: mixed moduli");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += y.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& y) {
  if (q_ != y.q_) throw std::invalid_argument("CyclotomicInt: mixed moduli");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= y.coeffs_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r(*this);
  for (BigInt& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y) {
  if (x.modulus() != y.modulus()) throw std::invalid_argument("CyclotomicInt: mixed moduli");
  int q = x.modulus();
  size_t d = x.coeffs().size();
  if (d == 0) return CyclotomicInt(q);
  std::vector<BigInt> conv(2 * d - 1, BigInt(0));
  for (size_t i = 0; i < d; ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    for (size_t j = 0; j < d; ++j) conv[i + j] += x.coeffs()[i] * y.coeffs()[j];
  }
  // Reduce the convolution modulo Phi_q by long division.
  auto phi = cyclotomic_polynomial(q);
  for (int k = static_cast<int>(conv.size()) - 1; k >= static_cast<int>(d); --k) {
    BigInt c = conv[k];
    if (c.is_zero()) continue;
    conv[k] = 0;
    for (size_t j = 0; j < phi.size() - 1; ++j) conv[k - (phi.size() - 1) + j] -= c * phi[j];
  }
  CyclotomicInt r(q);
  for (size_t i = 0; i < d; ++i) r.coeffs_[i] = conv[i];
  return r;
}

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> sum(0.0, 0.0);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / q_;
    sum += coeffs_[j].convert_to<double>() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  os << "[q=" << q_;
  for (const BigInt& c : coeffs_) os << " " << c;
  os << "]";
  return os.str();
}

CyclotomicInt cyclo_from_power_sums(int q, const std::vector<BigInt>& counts) {
  if (static_cast<int>(counts.size()) != q)
    throw std::invalid_argument("cyclo_from_power_sums: counts must have length q");
  auto phi = cyclotomic_polynomial(q);
  size_t d = phi.size() - 1;  // euler_phi(q)
  std::vector<BigInt> work(counts);
  for (int k = q - 1; k >= static_cast<int>(d); --k) {
    BigInt c = work[k];
    if (c.is_zero()) continue;
    work[k] = 0;
    for (size_t j = 0; j < d; ++j) work[k - d + j] -= c * phi[j];
  }
  CyclotomicInt r(q);
  for (size_t i = 0; i < d; ++i) r.coeffs_[i] = work[i];
  return r;
}

}  // namespace gdesign
