#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace smartmine {

/// One invariant violation found while checking a scenario.
struct Violation {
  std::string code;     // stable machine-readable tag, e.g. "duplicate_id"
  std::string message;  // human-readable detail
};

/// Scenario or configuration is malformed. Carries every violation found.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(std::vector<Violation> violations);
  ConfigError(std::string code, std::string message);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
  std::vector<Violation> violations_;
};

/// An argument lies outside the domain of a closed-form formula.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Total active power dropped to zero, so the epoch never completes.
class StalledEpochError : public std::runtime_error {
public:
  explicit StalledEpochError(std::size_t epoch);

  std::size_t epoch() const noexcept { return epoch_; }

private:
  std::size_t epoch_;
};

}  // namespace smartmine
