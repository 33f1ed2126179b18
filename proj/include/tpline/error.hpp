#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpline {

enum class ErrorKind {
  Dimension,           // shape mismatch between operands
  Singular,            // inverse of a matrix with zero determinant
  Context,             // quadratic-field operands with different radicands
  Arithmetic,          // division by zero
  Input,               // malformed or out-of-contract input
  Domain,              // parameter outside its mathematical domain
  HypothesisViolation, // total positivity assumption fails
  Degenerate,          // configuration is degenerate (coincident data, double roots)
  NotTotallyPositive,  // factorization met a zero or negative parameter
  NoRealSolution,      // negative discriminant
  SearchFailure,       // epsilon search exhausted its iteration cap
  Internal             // a certified postcondition failed
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace tpline
