#pragma once

#include <stdexcept>
#include <string>

namespace tricolor {

/// Input-format violation. The message names the 1-based line it came from.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Internal signal thrown when a cooperative node budget runs out. The engine
// catches it and rethrows a ResourceLimitError carrying the stats gathered so
// far; it never escapes the library.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("node budget exhausted") {}
};

}  // namespace tricolor
