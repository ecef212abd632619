#include "refcalc/dsl.hpp"

#include <cctype>
#include <limits>

#include "refcalc/errors.hpp"

namespace refcalc::dsl {

Lexer::Lexer(std::string_view text) : text_(text) { current_ = scan(); }

Token Lexer::next() {
  Token t = current_;
  current_ = scan();
  return t;
}

Token Lexer::scan() {
  for (;;) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
    if (pos_ < text_.size() && text_[pos_] == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') {
        ++pos_;
        ++column_;
      }
      continue;
    }
    break;
  }
  Token t;
  t.line = line_;
  t.column = column_;
  if (pos_ >= text_.size()) return t;
  const char c = text_[pos_];
  auto advance = [&] {
    t.text += text_[pos_++];
    ++column_;
  };
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    t.kind = TokenKind::Identifier;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
  } else if (std::isdigit(static_cast<unsigned char>(c)) ||
             (c == '-' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
    t.kind = TokenKind::Integer;
    advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
  } else {
    t.kind = TokenKind::Punct;
    advance();
  }
  return t;
}

bool Lexer::accept(std::string_view word) {
  if (current_.kind != TokenKind::End && current_.kind != TokenKind::Integer && current_.text == word) {
    next();
    return true;
  }
  return false;
}

void Lexer::expect(std::string_view word, std::string_view what) {
  if (!accept(word)) fail("expected " + std::string(what));
}

std::string Lexer::expect_identifier(std::string_view what) {
  if (current_.kind != TokenKind::Identifier) fail("expected " + std::string(what));
  return next().text;
}

std::int64_t Lexer::expect_integer(std::string_view what) {
  if (current_.kind != TokenKind::Integer) fail("expected " + std::string(what));
  const Token t = next();
  try {
    return std::stoll(t.text);
  } catch (const std::out_of_range&) {
    fail_at(t, "integer out of range");
  }
}

void Lexer::fail(const std::string& message) const { fail_at(current_, message); }

void Lexer::fail_at(const Token& token, const std::string& message) const {
  std::string found = token.kind == TokenKind::End ? "end of input" : "'" + token.text + "'";
  throw ParseError("syntax error: " + message + ", found " + found, token.line, token.column);
}

void Lexer::type_error_at(const Token& token, const std::string& message) const {
  throw ParseError("type error: " + message, token.line, token.column);
}

}  // namespace refcalc::dsl
