#include "iterid/word_parser.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace iterid {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      detail_(message),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int arity) : text_(text), arity_(arity) {}

  Word parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty word", pos_);
    Word w = word();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    const int arity = arity_ > 0 ? arity_ : std::max(1, w.max_variable());
    return w.with_arity(arity);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool starts_atom() const {
    const char c = peek();
    return c == 'x' || c == 'e' || c == '(' || c == '[';
  }

  Word word() {
    Word acc = factor();
    skip_ws();
    while (starts_atom()) {
      acc = acc * factor();
      skip_ws();
    }
    return acc;
  }

  Word factor() {
    Word base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const std::int64_t k = integer();
      if (k == 0) throw ParseError("zero exponent", at);
      return power(base, k);
    }
    if (!starts_atom()) throw ParseError("expected exponent or conjugating atom", pos_);
    return conjugate(base, atom());
  }

  Word atom() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected variable index", pos_);
      const std::int64_t idx = positive();
      if (idx < 1) throw ParseError("variable index must be positive", at + 1);
      if (arity_ > 0 && idx > arity_) {
        throw ParseError("variable x" + std::to_string(idx) + " exceeds arity " + std::to_string(arity_), at);
      }
      if (idx > (1 << 20)) throw ParseError("variable index too large", at + 1);
      return Word::generator(static_cast<int>(idx));
    }
    if (c == 'e') {
      ++pos_;
      return Word::identity();
    }
    if (c == '(') {
      ++pos_;
      skip_ws();
      Word w = word();
      skip_ws();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Word> parts;
      skip_ws();
      parts.push_back(word());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        skip_ws();
        parts.push_back(word());
        skip_ws();
      }
      if (parts.size() < 2) throw ParseError("commutator needs at least two entries", at);
      expect(']');
      return commutator(parts);
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  void expect(char c) {
    if (peek() != c) {
      if (at_end()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::int64_t integer() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", pos_);
    const std::int64_t v = positive();
    return negative ? -v : v;
  }

  std::int64_t positive() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) throw ParseError("integer out of range", start);
    return v;
  }

  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int arity) {
  if (arity < 0) throw std::invalid_argument("arity must be nonnegative");
  return Parser(text, arity).parse();
}

}  // namespace iterid
