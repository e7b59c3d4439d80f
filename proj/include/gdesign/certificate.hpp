#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gdesign {

/**
 * Machine-checkable verdict record. Field order is fixed (selector, verdict,
 * residuals in insertion order, facts in insertion order, counterexample) so
 * that rendered certificates are byte-stable across runs.
 */
class Certificate {
 public:
  explicit Certificate(std::string selector) : selector_(std::move(selector)) {}

  void set_verdict(bool v) { verdict_ = v; }
  bool verdict() const { return verdict_; }

  void add_residual(const std::string& eigenspace, const std::string& value) {
    residuals_.emplace_back(eigenspace, value);
  }
  void add_fact(const std::string& name, const std::string& value) {
    facts_.emplace_back(name, value);
  }
  void set_counterexample(std::string witness) { counterexample_ = std::move(witness); }

  const std::string& selector() const { return selector_; }
  const std::vector<std::pair<std::string, std::string>>& residuals() const { return residuals_; }
  const std::vector<std::pair<std::string, std::string>>& facts() const { return facts_; }
  const std::optional<std::string>& counterexample() const { return counterexample_; }

  std::string to_text() const;

 private:
  std::string selector_;
  bool verdict_ = false;
  std::vector<std::pair<std::string, std::string>> residuals_;
  std::vector<std::pair<std::string, std::string>> facts_;
  std::optional<std::string> counterexample_;
};

/// Deterministic, locale-independent rendering used everywhere a float
/// reaches a certificate.
std::string format_double(double x);

}  // namespace gdesign
