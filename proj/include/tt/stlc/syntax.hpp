// syntax.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tt/error.hpp"

namespace tt::stlc {

// ---------------------------------------------------------------------------
// Types: Ans | Unit | A * B | A -> B
//
// Finite trees; structural equality is the only type equality.
// ---------------------------------------------------------------------------

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct TAns {};
struct TUnit {};
struct TProd {
  TypePtr left, right;
};
struct TFun {
  TypePtr dom, cod;
};

struct Type {
  std::variant<TAns, TUnit, TProd, TFun> node;
};

TypePtr ans();
TypePtr unit();
TypePtr prod(TypePtr left, TypePtr right);
TypePtr fun(TypePtr dom, TypePtr cod);

bool type_equal(const TypePtr& a, const TypePtr& b);
// Total order; used to keep type palettes canonically sorted.
int type_compare(const TypePtr& a, const TypePtr& b);
std::string show(const TypePtr& ty);

// ---------------------------------------------------------------------------
// Terms, de Bruijn indexed (Var 0 is the innermost binder).
// Binders are annotated so inference is syntax-directed.
// Immutable after construction.
// ---------------------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  std::size_t index;
};
struct Yes {};
struct No {};
struct Star {};
struct Pair {
  TermPtr first, second;
};
struct Fst {
  TermPtr pair;
};
struct Snd {
  TermPtr pair;
};
struct Lam {
  TypePtr ann;
  TermPtr body;
};
struct App {
  TermPtr fn, arg;
};

struct Term {
  std::variant<Var, Yes, No, Star, Pair, Fst, Snd, Lam, App> node;
};

TermPtr var(std::size_t index);
TermPtr yes();
TermPtr no();
TermPtr star();
TermPtr pair(TermPtr first, TermPtr second);
TermPtr fst(TermPtr p);
TermPtr snd(TermPtr p);
TermPtr lam(TypePtr ann, TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);

template <class T>
const T* as(const TermPtr& t) {
  return std::get_if<T>(&t->node);
}
template <class T>
const T* as(const TypePtr& t) {
  return std::get_if<T>(&t->node);
}

bool term_equal(const TermPtr& a, const TermPtr& b);
std::size_t term_size(const TermPtr& t);  // AST node count, annotations not counted
bool well_scoped(const TermPtr& t, std::size_t ctx_len);
// 1 + the largest free index of t (0 if closed).
std::size_t free_var_bound(const TermPtr& t);
std::string show(const TermPtr& t);

// Contexts are lists of types, innermost binding last; Var 0 refers to the
// last entry.
using Context = std::vector<TypePtr>;

// ---------------------------------------------------------------------------
// Renamings and simultaneous substitutions.
//
// A renaming maps every source index to a target index; it is a context
// morphism target_ctx -> source_ctx.  Arbitrary variable-to-variable maps are
// allowed, including non-injective ones.
// ---------------------------------------------------------------------------

struct Renaming {
  std::size_t target_length = 0;
  std::vector<std::size_t> mapping;  // source index -> target index

  static Renaming identity(std::size_t n);
  // ctx -> ctx extended by one inner binding: i -> i + 1.
  static Renaming weaken(std::size_t n);
  // rename(rename(t, first), second) == rename(t, compose(second, first)).
  static Renaming compose(const Renaming& second, const Renaming& first);
};

TermPtr rename(const TermPtr& t, const Renaming& r);

struct Substitution {
  std::vector<TermPtr> entries;  // entries[i] replaces Var i
  Context target;                // context the entries live in (may be empty for untyped use)

  static Substitution identity(const Context& ctx);
};

TermPtr subst(const TermPtr& t, const Substitution& s);
// Single-variable substitution, derived from the simultaneous one:
// body lives under one extra binder; the result replaces Var 0 with arg.
TermPtr subst_head(const TermPtr& body, const TermPtr& arg);

// ---------------------------------------------------------------------------
// Type inference.  Syntax-directed; the unique type or an error.
// Error kinds: UnboundVariable, NotAFunction, NotAProduct, ArgumentMismatch.
// ---------------------------------------------------------------------------
TypePtr infer(const Context& ctx, const TermPtr& t);

}  // namespace tt::stlc
