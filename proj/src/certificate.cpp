#include "gdesign/certificate.hpp"

#include <cstdio>
#include <sstream>

namespace gdesign {

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "certificate-version: 1\n";
  os << "selector: " << selector_ << "\n";
  os << "verdict: " << (verdict_ ? "true" : "false") << "\n";
  for (const auto& [name, value] : residuals_) os << "residual " << name << ": " << value << "\n";
  for (const auto& [name, value] : facts_) os << "fact " << name << ": " << value << "\n";
  if (counterexample_) os << "counterexample: " << *counterexample_ << "\n";
  return os.str();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace gdesign
