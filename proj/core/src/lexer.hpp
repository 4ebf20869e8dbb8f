#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "xasp/error.hpp"

namespace xasp::detail {

enum class TokenKind {
  Identifier,  // lowercase-initial
  Variable,    // uppercase-initial or '_'-initial
  Number,
  Punct,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;

  bool is(TokenKind k) const { return kind == k; }
  bool is_punct(std::string_view p) const { return kind == TokenKind::Punct && text == p; }
  bool is_word(std::string_view w) const { return kind == TokenKind::Identifier && text == w; }
};

/// Tokenizer for the policy, request, domain, property and logic-program
/// formats. Newlines are whitespace; `comment` starts a line comment.
class Lexer {
 public:
  Lexer(std::string_view source, char comment, std::size_t first_line = 1)
      : src_(source), comment_(comment), line_(first_line) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool at_end() const { return current_.kind == TokenKind::End; }

  bool accept_punct(std::string_view p) {
    if (!current_.is_punct(p)) return false;
    advance();
    return true;
  }

  Token expect_punct(std::string_view p) {
    if (!current_.is_punct(p)) fail("expected '" + std::string(p) + "'");
    return next();
  }

  Token expect(TokenKind kind, std::string_view what) {
    if (current_.kind != kind) fail("expected " + std::string(what));
    return next();
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = current_.kind == TokenKind::End ? "end of input" : "'" + current_.text + "'";
    throw ParseError(message + ", found " + found, current_.line, current_.column);
  }

 private:
  static bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  char at(std::size_t i) const { return i < src_.size() ? src_[i] : '\0'; }

  void advance() {
    for (;;) {
      while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                    src_[pos_] == '\r' || src_[pos_] == '\n')) {
        bump();
      }
      if (pos_ < src_.size() && src_[pos_] == comment_) {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
        continue;
      }
      break;
    }
    current_ = Token{};
    current_.line = line_;
    current_.column = pos_ - line_start_ + 1;
    if (pos_ >= src_.size()) {
      current_.kind = TokenKind::End;
      return;
    }
    const char c = src_[pos_];
    std::size_t start = pos_;
    if (is_word_char(c)) {
      while (pos_ < src_.size() && is_word_char(src_[pos_])) bump();
      current_.text = std::string(src_.substr(start, pos_ - start));
      if (c >= '0' && c <= '9') {
        for (char d : current_.text) {
          if (d < '0' || d > '9') {
            throw ParseError("malformed number '" + current_.text + "'", current_.line,
                             current_.column);
          }
        }
        current_.kind = TokenKind::Number;
      } else if (c >= 'a' && c <= 'z') {
        current_.kind = TokenKind::Identifier;
      } else {
        current_.kind = TokenKind::Variable;
      }
      return;
    }
    current_.kind = TokenKind::Punct;
    if ((c == ':' && at(pos_ + 1) == '-') || (c == '!' && at(pos_ + 1) == '=')) {
      current_.text = std::string(src_.substr(pos_, 2));
      bump();
      bump();
      return;
    }
    switch (c) {
      case '(': case ')': case ',': case '.': case ':': case '=': case '{': case '}':
      case '[': case ']': case '|': case '&':
        current_.text = std::string(1, c);
        bump();
        return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", current_.line,
                         current_.column);
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  std::string_view src_;
  char comment_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t line_start_ = 0;
  Token current_;
};

}  // namespace xasp::detail
