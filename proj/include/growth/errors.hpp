#pragma once

#include <stdexcept>
#include <string>

namespace growth {

// Raised when an internal consistency guarantee fails (a proven bound violated,
// a step limit blown). Distinct from std::invalid_argument, which flags bad
// caller input; the CLI maps the two to different exit codes.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace growth
