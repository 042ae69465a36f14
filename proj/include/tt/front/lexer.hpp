// lexer.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tt/error.hpp"

namespace tt::front {

struct Span {
  std::size_t start = 0;  // byte offsets
  std::size_t end = 0;
  std::size_t line = 1;  // 1-based
  std::size_t col = 1;
};

class ParseError : public Error {
 public:
  ParseError(Span span, const std::string& message, std::string kind = "ParseError")
      : Error(Category::Parse, std::move(kind), message), span_(span) {}

  const Span& span() const { return span_; }

 private:
  Span span_;
};

enum class Tok {
  Ident,
  Backslash,  // \ .
  BigLambda,  // /\ .
  Dot,
  Colon,
  Comma,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Star,
  Arrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

std::vector<Token> lex(std::string_view src);

}  // namespace tt::front
