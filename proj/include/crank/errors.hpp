#pragma once

#include <stdexcept>
#include <string>

namespace crank {

/// Input data problems: parse failures, dimension mismatches, bad files.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failures: LP cycling guard, non-finite values.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crank
