#ifndef ITERID_WORD_PARSER_HPP
#define ITERID_WORD_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "iterid/word.hpp"

namespace iterid {

/// Syntax error in a word, element or descriptor literal. `position` is the
/// 0-based byte offset into the input where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// Parses the word DSL:
///
///   word   := factor { factor }
///   factor := atom [ "^" ( int | atom ) ]      a^b means b^-1 a b
///   atom   := "x" posint | "e" | "(" word ")" | "[" word { "," word } "]"
///
/// Brackets are left-normed commutators and need at least two entries.
/// With arity 0 the arity is the largest variable index used; otherwise an
/// index above `arity` is an error.
Word parse_word(std::string_view text, int arity = 0);

}  // namespace iterid

#endif  // ITERID_WORD_PARSER_HPP
