#pragma once

#include <stdexcept>
#include <string>

namespace kneadgen {

// Raised when a mathematically guaranteed property fails to hold at runtime.
// Seeing one of these means the engine itself is broken, not the input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kneadgen
