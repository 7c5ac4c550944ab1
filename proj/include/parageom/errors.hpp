#pragma once

#include <stdexcept>
#include <string>

namespace parageom {

/// An operation that needs numeric entries received a symbolic one.
struct ParametricError : std::domain_error {
  explicit ParametricError(const std::string& what) : std::domain_error("parametric matrix: " + what) {}
};

/// A configured computation cap (Gröbner basis size, degree, term count) was hit.
struct ResourceError : std::runtime_error {
  ResourceError(std::string cap_name, const std::string& what)
      : std::runtime_error("resource cap '" + cap_name + "' exceeded: " + what), cap(std::move(cap_name)) {}
  std::string cap;
};

/// A mathematical precondition does not hold (not semisimple, J not invariant, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace parageom
