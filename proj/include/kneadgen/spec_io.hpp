#pragma once

#include <stdexcept>
#include <string>

#include "kneadgen/recurrence.hpp"

namespace kneadgen {

class SpecParseError : public std::runtime_error {
 public:
  explicit SpecParseError(const std::string& what) : std::runtime_error(what) {}
};

// Reads {"p": 2, "s": 1, "matrices": [[["1","2"],["3","4"]]]} with every
// entry an "a" or "a/b" string. Throws SpecParseError with the position for
// malformed JSON and with the offending matrix named for shape errors.
RecurrenceSpec parse_spec_json(const std::string& text);

RecurrenceSpec load_spec_file(const std::string& path);

// Inverse of parse_spec_json: parse_spec_json(spec_to_json(s)) == s.
std::string spec_to_json(const RecurrenceSpec& spec);

}  // namespace kneadgen
