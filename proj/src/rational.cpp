#include "gdesign/rational.hpp"

#include <limits>
#include <ostream>

namespace gdesign {

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

long long binomial_ll(int n, int k) {
  BigInt b = binomial(n, k);
  if (b > std::numeric_limits<long long>::max())
    throw std::overflow_error("binomial_ll: value exceeds long long");
  return b.convert_to<long long>();
}

}  // namespace gdesign
