#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace capitulation {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class CosetLimitExceeded : public Error {
 public:
  explicit CosetLimitExceeded(std::size_t reached)
      : Error("coset limit exceeded after " + std::to_string(reached) +
              " live cosets (presentation may be infinite or too large)"),
        reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  NotNormal() : Error("subgroup is not normal") {}
};

class NotAbelian : public Error {
 public:
  NotAbelian() : Error("group is not abelian") {}
};

class NotSubgroup : public Error {
 public:
  NotSubgroup() : Error("element set is not a subgroup of the parent group") {}
};

class NotTwoGroup : public Error {
 public:
  NotTwoGroup() : Error("operation requires a 2-group") {}
};

class OrderTooLarge : public Error {
 public:
  explicit OrderTooLarge(std::size_t order)
      : Error("group order " + std::to_string(order) + " exceeds 4096") {}
};

class IndexNotTwo : public Error {
 public:
  IndexNotTwo() : Error("Taussky letter requires a subgroup of index 2") {}
};

class OutsideHypothesis : public Error {
 public:
  OutsideHypothesis() : Error("abelianization is not of type (2,4)") {}
};

/// Raised when two independent computations that must agree do not.
/// Always indicates a bug, never a property of the input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class FrattiniMismatch : public ConsistencyError {
 public:
  FrattiniMismatch()
      : ConsistencyError(
            "Frattini subgroup: intersection of maximal subgroups differs "
            "from the subgroup generated by squares") {}
};

class UndefinedSymbol : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace capitulation
