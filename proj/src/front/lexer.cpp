// lexer.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/front/lexer.hpp"

#include <cctype>

namespace tt::front {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back(Token{kind, std::string(src.substr(i, len)), Span{i, i + len, line, col}});
    advance(len);
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t len = 1;
      while (i + len < src.size() && ident_cont(src[i + len])) ++len;
      push(Tok::Ident, len);
      continue;
    }
    switch (c) {
      case '\\':
        push(Tok::Backslash, 1);
        continue;
      case '/':
        if (i + 1 < src.size() && src[i + 1] == '\\') {
          push(Tok::BigLambda, 2);
          continue;
        }
        throw ParseError(Span{i, i + 1, line, col}, "expected /\\");
      case '.':
        push(Tok::Dot, 1);
        continue;
      case ':':
        push(Tok::Colon, 1);
        continue;
      case ',':
        push(Tok::Comma, 1);
        continue;
      case '(':
        push(Tok::LParen, 1);
        continue;
      case ')':
        push(Tok::RParen, 1);
        continue;
      case '[':
        push(Tok::LBracket, 1);
        continue;
      case ']':
        push(Tok::RBracket, 1);
        continue;
      case '*':
        push(Tok::Star, 1);
        continue;
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          push(Tok::Arrow, 2);
          continue;
        }
        throw ParseError(Span{i, i + 1, line, col}, "expected ->");
      default:
        throw ParseError(Span{i, i + 1, line, col},
                         std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::End, "", Span{i, i, line, col}});
  return out;
}

}  // namespace tt::front
