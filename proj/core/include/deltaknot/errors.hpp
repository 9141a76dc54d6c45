#pragma once

#include <stdexcept>
#include <string>

namespace dk {

/// Codec syntax error with a character position into the source text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  size_t position() const { return pos_; }

private:
  size_t pos_;
};

/// Structural violation: bad arc counts, disconnected map, and the like.
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Computation exceeded its crossing budget.
class BudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dk
