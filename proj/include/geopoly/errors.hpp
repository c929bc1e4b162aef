#pragma once

#include <stdexcept>
#include <string>

namespace geopoly {

// Base of every error the library reports. The CLI maps UsageError and
// DomainError to exit code 2 and everything else to 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public DomainError {
 public:
  explicit InvalidOrder(const std::string& what) : DomainError("invalid order: " + what) {}
};

class NotPrime : public DomainError {
 public:
  explicit NotPrime(const std::string& what) : DomainError("modulus is not prime: " + what) {}
};

class DenominatorDivisibleByQ : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivergentInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnknownIdentity : public DomainError {
 public:
  explicit UnknownIdentity(const std::string& id) : DomainError("unknown identity: " + id) {}
};

class ParameterOutOfDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

// Series summation hit the term cap before certifying the tolerance.
class TolNotReached : public Error {
 public:
  using Error::Error;
};

}  // namespace geopoly
