#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobkit {

using Int = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPositiveError : public Error {
 public:
  NonPositiveError(Int a, Int b)
      : Error("denominations must be positive (got a=" + std::to_string(a) +
              ", b=" + std::to_string(b) + ")") {}
};

class NotCoprimeError : public Error {
 public:
  explicit NotCoprimeError(Int gcd)
      : Error("not coprime (gcd " + std::to_string(gcd) + ")"), gcd_(gcd) {}
  Int gcd() const { return gcd_; }

 private:
  Int gcd_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class BothZeroError : public Error {
 public:
  BothZeroError() : Error("gcd(0, 0) is undefined") {}
};

class TrivialDenominationError : public Error {
 public:
  TrivialDenominationError()
      : Error("minimal unit expressions require a > 1 and b > 1") {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NegativeTargetError : public Error {
 public:
  explicit NegativeTargetError(Int d)
      : Error("target value must be nonnegative (got " + std::to_string(d) +
              ")") {}
};

class SizeGuardError : public Error {
 public:
  SizeGuardError(Int required, Int budget)
      : Error("enumeration over " + std::to_string(required) +
              " values exceeds the budget of " + std::to_string(budget) +
              " (set FROBKIT_MAX_ENUM to raise it)") {}
};

class DepthExceededError : public Error {
 public:
  DepthExceededError(Int depth, Int bound)
      : Error("tree depth " + std::to_string(depth) + " exceeds the bound " +
              std::to_string(bound) + " (set FROBKIT_MAX_ENUM to raise it)") {}
};

}  // namespace frobkit
