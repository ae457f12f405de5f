#pragma once

#include <stdexcept>
#include <string>

namespace torustat {

/// Malformed or unusable input data (unreadable file, bad cells, empty series).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric routine failed to converge or produced an unusable result.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace torustat
