#pragma once

#include <stdexcept>
#include <string>

namespace cobcat {

/// Invalid input: malformed data, mismatched interfaces, unknown ids.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured ceiling (cell count, search space) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cobcat
