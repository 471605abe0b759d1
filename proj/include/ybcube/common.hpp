#pragma once

#include <stdexcept>
#include <string>

namespace ybcube {

// Library-wide error type for precondition and construction failures.
// Verification failures are not errors; they come back as CheckReport values.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ybcube
