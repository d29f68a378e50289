#pragma once

#include <stdexcept>
#include <string>

namespace nvg {

// Estimated or actual work exceeded the configured budget.  k() names the
// first expansion step that does not fit.
class BudgetError : public std::runtime_error {
public:
  BudgetError(int k, const std::string& what) : std::runtime_error(what), k_(k) {}
  int k() const { return k_; }

private:
  int k_;
};

// Two floating-point orbit points landed in the [tol, 2*tol) dead zone where
// neither "same point" nor "distinct points" is a safe conclusion.
class TolAmbiguityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exact-arithmetic consistency check failed.  Always a bug, never input.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace nvg
