// parse.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/front/parse.hpp"

#include <algorithm>
#include <optional>

namespace tt::front {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view text) const {
    return at(Tok::Ident) && peek().text == text;
  }
  bool eat(Tok kind) {
    if (!at(kind)) return false;
    next();
    return true;
  }
  Token expect(Tok kind, const std::string& what) {
    if (!at(kind)) fail("expected " + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(peek().span, message + ", got " + describe(peek()));
  }
  void expect_end() {
    if (!at(Tok::End)) fail("expected end of input");
  }

  std::size_t save() const { return pos_; }
  void restore(std::size_t pos) { pos_ = pos; }

  // Binder-name stacks, innermost last.
  std::optional<std::size_t> resolve(const std::vector<std::string>& scope,
                                     const std::string& name) const {
    for (std::size_t i = 0; i < scope.size(); ++i)
      if (scope[scope.size() - 1 - i] == name) return i;
    return std::nullopt;
  }
  [[noreturn]] void unbound(const Token& tok) const {
    throw ParseError(tok.span, "unbound name '" + tok.text + "'", "UnboundName");
  }

 private:
  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// STLC
// ---------------------------------------------------------------------------

class StlcParser : public Parser {
 public:
  using Parser::Parser;

  stlc::TypePtr type() {  // right-assoc ->, * binds tighter
    stlc::TypePtr left = prod_type();
    if (eat(Tok::Arrow)) return stlc::fun(left, type());
    return left;
  }

  stlc::TermPtr term() {
    if (at(Tok::Backslash)) return lambda();
    return app_seq();
  }

  std::vector<std::string> names;

 private:
  stlc::TypePtr prod_type() {
    stlc::TypePtr left = atom_type();
    if (eat(Tok::Star)) return stlc::prod(left, prod_type());
    return left;
  }

  stlc::TypePtr atom_type() {
    if (at_ident("Ans")) {
      next();
      return stlc::ans();
    }
    if (at_ident("Unit")) {
      next();
      return stlc::unit();
    }
    if (eat(Tok::LParen)) {
      stlc::TypePtr t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a type");
  }

  stlc::TermPtr lambda() {
    expect(Tok::Backslash, "'\\'");
    Token name = expect(Tok::Ident, "a binder name");
    if (!eat(Tok::Colon)) fail("expected ':' (stlc lambdas carry a type annotation)");
    stlc::TypePtr ann = type();
    expect(Tok::Dot, "'.'");
    names.push_back(name.text);
    stlc::TermPtr body = term();
    names.pop_back();
    return stlc::lam(ann, body);
  }

  stlc::TermPtr app_seq() {
    stlc::TermPtr head = prefix();
    while (at(Tok::Ident) || at(Tok::LParen) || at(Tok::Backslash)) {
      if (at(Tok::Backslash)) {
        head = stlc::app(head, lambda());
        break;
      }
      head = stlc::app(head, prefix());
    }
    return head;
  }

  stlc::TermPtr prefix() {
    if (at_ident("fst")) {
      next();
      return stlc::fst(prefix());
    }
    if (at_ident("snd")) {
      next();
      return stlc::snd(prefix());
    }
    return atom();
  }

  stlc::TermPtr atom() {
    if (at(Tok::Ident)) {
      Token tok = next();
      if (tok.text == "yes") return stlc::yes();
      if (tok.text == "no") return stlc::no();
      if (auto i = resolve(names, tok.text)) return stlc::var(*i);
      unbound(tok);
    }
    if (eat(Tok::LParen)) {
      if (eat(Tok::RParen)) return stlc::star();
      stlc::TermPtr t = term();
      if (eat(Tok::Comma)) {
        stlc::TermPtr s = term();
        expect(Tok::RParen, "')'");
        return stlc::pair(t, s);
      }
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a term");
  }
};

// ---------------------------------------------------------------------------
// MLTT
// ---------------------------------------------------------------------------

class MlttParser : public Parser {
 public:
  using Parser::Parser;

  // term := lambda | arrow [':' term]
  mltt::TermPtr term() {
    if (at(Tok::Backslash)) return lambda();
    mltt::TermPtr t = arrow();
    if (eat(Tok::Colon)) return mltt::ascribe(t, term());
    return t;
  }

  std::vector<std::string> names;

 private:
  struct Binder {
    std::string name;
    mltt::TermPtr type;
  };

  // '(' ident ':' term ')' when followed by -> or *.
  std::optional<Binder> try_binder(Tok follow) {
    if (!(at(Tok::LParen) && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon))
      return std::nullopt;
    std::size_t mark = save();
    next();  // (
    Token name = next();
    next();  // :
    mltt::TermPtr ty = term();
    if (!eat(Tok::RParen) || !at(follow)) {
      restore(mark);
      return std::nullopt;
    }
    next();  // the follow token
    return Binder{name.text, ty};
  }

  mltt::TermPtr arrow() {
    if (auto b = try_binder(Tok::Arrow)) {
      names.push_back(b->name);
      mltt::TermPtr cod = arrow();
      names.pop_back();
      return mltt::pi(b->type, cod);
    }
    mltt::TermPtr left = star_level();
    if (eat(Tok::Arrow)) return mltt::pi(left, mltt::shift(arrow(), 1));
    return left;
  }

  mltt::TermPtr star_level() {
    if (auto b = try_binder(Tok::Star)) {
      names.push_back(b->name);
      mltt::TermPtr cod = star_level();
      names.pop_back();
      return mltt::sigma(b->type, cod);
    }
    mltt::TermPtr left = app_seq();
    if (eat(Tok::Star)) return mltt::sigma(left, mltt::shift(star_level(), 1));
    return left;
  }

  mltt::TermPtr lambda() {
    expect(Tok::Backslash, "'\\'");
    std::vector<std::string> binders;
    binders.push_back(expect(Tok::Ident, "a binder name").text);
    if (eat(Tok::Colon)) {
      term();  // optional annotation, erased: Lam is check-only
    } else {
      while (at(Tok::Ident)) binders.push_back(next().text);
    }
    expect(Tok::Dot, "'.'");
    for (const std::string& n : binders) names.push_back(n);
    mltt::TermPtr body = term();
    for (std::size_t i = 0; i < binders.size(); ++i) {
      names.pop_back();
      body = mltt::lam(body);
    }
    return body;
  }

  mltt::TermPtr app_seq() {
    mltt::TermPtr head = prefix();
    while (at(Tok::Ident) || at(Tok::LParen) || at(Tok::Backslash)) {
      if (at(Tok::Backslash)) {
        head = mltt::app(head, lambda());
        break;
      }
      head = mltt::app(head, prefix());
    }
    return head;
  }

  mltt::TermPtr prefix() {
    if (at_ident("fst")) {
      next();
      return mltt::fst(prefix());
    }
    if (at_ident("snd")) {
      next();
      return mltt::snd(prefix());
    }
    if (at_ident("El")) {
      next();
      return mltt::el(prefix());
    }
    if (at_ident("pi")) {
      next();
      mltt::TermPtr dom = atom();
      return mltt::code_pi(dom, atom_or_lambda());
    }
    if (at_ident("sigma")) {
      next();
      mltt::TermPtr dom = atom();
      return mltt::code_sigma(dom, atom_or_lambda());
    }
    return atom();
  }

  mltt::TermPtr atom_or_lambda() {
    if (at(Tok::Backslash)) return lambda();
    return atom();
  }

  mltt::TermPtr atom() {
    if (at(Tok::Ident)) {
      Token tok = next();
      if (tok.text == "yes") return mltt::yes();
      if (tok.text == "no") return mltt::no();
      if (tok.text == "Ans") return mltt::ans_ty();
      if (tok.text == "U") return mltt::u_ty();
      if (tok.text == "ans") return mltt::code_ans();
      if (auto i = resolve(names, tok.text)) return mltt::var(*i);
      unbound(tok);
    }
    if (eat(Tok::LParen)) {
      mltt::TermPtr t = term();
      if (eat(Tok::Comma)) {
        mltt::TermPtr s = term();
        expect(Tok::RParen, "')'");
        return mltt::pair(t, s);
      }
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a term");
  }
};

// ---------------------------------------------------------------------------
// System F
// ---------------------------------------------------------------------------

class SysfParser : public Parser {
 public:
  using Parser::Parser;

  sysf::TypePtr type() {
    if (at_ident("forall")) {
      next();
      Token name = expect(Tok::Ident, "a type-variable name");
      expect(Tok::Dot, "'.'");
      ty_names.push_back(name.text);
      sysf::TypePtr body = type();
      ty_names.pop_back();
      return sysf::forall(body);
    }
    sysf::TypePtr left = atom_type();
    if (eat(Tok::Arrow)) return sysf::fun(left, type());
    return left;
  }

  sysf::TermPtr term() {
    if (at(Tok::Backslash)) return lambda();
    if (at(Tok::BigLambda)) return ty_lambda();
    return app_seq();
  }

  std::vector<std::string> names;
  std::vector<std::string> ty_names;

 private:
  sysf::TypePtr atom_type() {
    if (at(Tok::Ident) && !at_ident("forall")) {
      Token tok = next();
      if (auto i = resolve(ty_names, tok.text)) return sysf::tvar(*i);
      unbound(tok);
    }
    if (eat(Tok::LParen)) {
      sysf::TypePtr t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a type");
  }

  sysf::TermPtr lambda() {
    expect(Tok::Backslash, "'\\'");
    Token name = expect(Tok::Ident, "a binder name");
    expect(Tok::Colon, "':' (System F lambdas carry a type annotation)");
    sysf::TypePtr ann = type();
    expect(Tok::Dot, "'.'");
    names.push_back(name.text);
    sysf::TermPtr body = term();
    names.pop_back();
    return sysf::lam(ann, body);
  }

  sysf::TermPtr ty_lambda() {
    expect(Tok::BigLambda, "'/\\'");
    Token name = expect(Tok::Ident, "a type-variable name");
    expect(Tok::Dot, "'.'");
    ty_names.push_back(name.text);
    sysf::TermPtr body = term();
    ty_names.pop_back();
    return sysf::tylam(body);
  }

  sysf::TermPtr app_seq() {
    sysf::TermPtr head = atom();
    for (;;) {
      if (at(Tok::Ident) || at(Tok::LParen)) {
        head = sysf::app(head, atom());
      } else if (at(Tok::Backslash)) {
        head = sysf::app(head, lambda());
        break;
      } else if (at(Tok::BigLambda)) {
        head = sysf::app(head, ty_lambda());
        break;
      } else if (eat(Tok::LBracket)) {
        sysf::TypePtr arg = type();
        expect(Tok::RBracket, "']'");
        head = sysf::tyapp(head, arg);
      } else {
        break;
      }
    }
    return head;
  }

  sysf::TermPtr atom() {
    if (at(Tok::Ident)) {
      Token tok = next();
      if (auto i = resolve(names, tok.text)) return sysf::var(*i);
      unbound(tok);
    }
    if (eat(Tok::LParen)) {
      sysf::TermPtr t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a term");
  }
};

}  // namespace

stlc::TermPtr parse_stlc_term(std::string_view src) {
  StlcParser p(src);
  stlc::TermPtr t = p.term();
  p.expect_end();
  return t;
}

stlc::TypePtr parse_stlc_type(std::string_view src) {
  StlcParser p(src);
  stlc::TypePtr t = p.type();
  p.expect_end();
  return t;
}

mltt::TermPtr parse_mltt_term(std::string_view src) {
  MlttParser p(src);
  mltt::TermPtr t = p.term();
  p.expect_end();
  return t;
}

sysf::TermPtr parse_sysf_term(std::string_view src) {
  SysfParser p(src);
  sysf::TermPtr t = p.term();
  p.expect_end();
  return t;
}

sysf::TypePtr parse_sysf_type(std::string_view src,
                              const std::vector<std::string>& ty_scope) {
  SysfParser p(src);
  p.ty_names = ty_scope;
  sysf::TypePtr t = p.type();
  p.expect_end();
  return t;
}

}  // namespace tt::front
