#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosetgeom {

/// Raised for malformed presentation text or cycle notation.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a search or enumeration runs past its configured budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cosetgeom
