#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace refcalc::dsl {

enum class TokenKind { Identifier, Integer, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Tokenizer shared by the index, subset, family, and model grammars.
/// '#' starts a comment running to end of line. Integers may carry a leading '-'.
class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek() const noexcept { return current_; }
  Token next();
  bool at_end() const noexcept { return current_.kind == TokenKind::End; }

  bool accept(std::string_view punct_or_word);
  void expect(std::string_view punct_or_word, std::string_view what);
  std::string expect_identifier(std::string_view what);
  std::int64_t expect_integer(std::string_view what);

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& token, const std::string& message) const;
  // "type error: <message>" at the token, for well-formed text with mismatched parts.
  [[noreturn]] void type_error_at(const Token& token, const std::string& message) const;

 private:
  Token scan();
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

}  // namespace refcalc::dsl
