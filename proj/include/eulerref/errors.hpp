#pragma once

#include <stdexcept>
#include <string>

namespace eulerref {

// Argument outside the documented domain of an operation.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured size cap would be exceeded (enumeration, tower depth, ...).
struct ResourceLimit : std::runtime_error {
  ResourceLimit(std::string cap_name, long cap_value, const std::string& what)
      : std::runtime_error(what), cap(std::move(cap_name)), value(cap_value) {}
  std::string cap;
  long value;
};

// Conditioning on an event of probability zero.
struct UndefinedDistribution : std::domain_error {
  using std::domain_error::domain_error;
};

// Numeric evaluation would cross a singularity or exceed its error budget.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Two independent routes disagreed. Always indicates a bug.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace eulerref
