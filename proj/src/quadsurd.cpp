#include "gdesign/quadsurd.hpp"

#include <cmath>
#include <sstream>

namespace gdesign {

double QuadSurd::to_double() const {
  return rational_part().to_double() + surd_part().to_double() * std::sqrt(5.0);
}

std::string QuadSurd::to_string() const {
  std::ostringstream os;
  if (surd_part().is_zero()) {
    os << rational_part();
  } else if (rational_part().is_zero()) {
    os << surd_part() << "*sqrt5";
  } else {
    os << rational_part() << (surd_part().sign() < 0 ? " - " : " + ") << abs(surd_part())
       << "*sqrt5";
  }
  return os.str();
}

QuadSurd quad_add(const QuadSurd& x, const QuadSurd& y) { return x + y; }

QuadSurd quad_mul(const QuadSurd& x, const QuadSurd& y) { return x * y; }

std::pair<QuadSurd, QuadSurd> golden_ratio() {
  return {QuadSurd(Rational(1, 2), Rational(1, 2)), QuadSurd(Rational(1, 2), Rational(-1, 2))};
}

}  // namespace gdesign
