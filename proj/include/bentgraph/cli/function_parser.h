#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "bentgraph/boolean_function.h"

namespace bentgraph::cli {

// Malformed function spec. position is a 0-based offset into the spec text.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t position, const std::string& message)
      : InvalidInput("position " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Accepted forms:
//   b:0001            truth table, entry i = f(b(i)), length 2^n
//   h:1               hex digits, 4 table entries per digit, first entry in
//                     the most significant bit of the digit
//   a:n=4: x1*x2 + x3*x4
//                     algebraic normal form over x1..xn with * (AND),
//                     + (XOR) and the constants 0 and 1
// When expected_arity is given the parsed arity must agree with it.
BooleanFunction parse_function(std::string_view spec,
                               std::optional<int> expected_arity = std::nullopt);

}  // namespace bentgraph::cli
