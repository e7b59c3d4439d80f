#pragma once

#include <stdexcept>
#include <string>

namespace gdesign {

/// Thrown when an exhaustive operation would exceed its iteration budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultSubsetBudget = 1LL << 24;

}  // namespace gdesign
