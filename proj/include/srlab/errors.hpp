#pragma once

#include <stdexcept>
#include <string>

namespace srlab {

/// A computation would exceed a configured size bound. `flag` names the override.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, std::string flag)
      : std::runtime_error(what + " (override with " + flag + ")"), flag_(std::move(flag)) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

/// Ring-level operations are undefined on the void complex (its ideal is the unit ideal).
class VoidComplexError : public std::domain_error {
 public:
  explicit VoidComplexError(const std::string& op)
      : std::domain_error(op + ": the void complex has no Stanley-Reisner ring") {}
};

}  // namespace srlab
