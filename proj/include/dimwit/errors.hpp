#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dimwit {

// Malformed input data: shapes, normalization, positivity, Hermiticity.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration or allocation would exceed the caller's guard.
class SizeError : public std::runtime_error {
 public:
  SizeError(std::uint64_t count, std::uint64_t cap, const std::string& what)
      : std::runtime_error(what + ": " + std::to_string(count) + " > " + std::to_string(cap)),
        count_(count),
        cap_(cap) {}

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

}  // namespace dimwit
