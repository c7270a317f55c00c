#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cmreg/polynomial.hpp"

namespace cmreg {

// Parse failure with the 0-based character offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: signed sum of terms; term := [coefficient] ('*' factor)*, where
// factor := variable ['^' positive-int] and coefficient := int or int/int.
// Whitespace is ignored. Homogeneity is not checked here.
Polynomial parse_polynomial(std::string_view text, const PolyRing& ring);

}  // namespace cmreg
