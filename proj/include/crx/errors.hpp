#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crx {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class NotTwoConnected : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search hit its node budget before it could answer exactly.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes) : Error(what), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// A constructor produced a colouring its own verifier rejected.
class ConstructionRejected : public Error {
 public:
  using Error::Error;
};

class AttemptsExhausted : public Error {
 public:
  AttemptsExhausted(const std::string& what, int attempts) : Error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

/// Parameters outside every regime a construction covers.
class RegimeUnsupported : public Error {
 public:
  using Error::Error;
};

class BaseWalkNotFound : public Error {
 public:
  using Error::Error;
};

class IsCycle : public Error {
 public:
  using Error::Error;
};

class NotInF1 : public Error {
 public:
  using Error::Error;
};

class MinimallyTwoConnected : public Error {
 public:
  using Error::Error;
};

/// Some k-set of vertices lies on no cycle at all.
class NotInFk : public Error {
 public:
  using Error::Error;
};

class SpreadTooSmall : public Error {
 public:
  using Error::Error;
};

/// The exact solver refuses instances outside its desk-scale envelope unless forced.
class ScopeExceeded : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace crx
