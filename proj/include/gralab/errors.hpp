#pragma once

#include <stdexcept>
#include <string>

namespace gralab {

// Structure or config fails a validation check (CLI exit code 2).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (CLI exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gralab
