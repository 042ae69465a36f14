// systemf.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tt/error.hpp"

namespace tt::sysf {

// ---------------------------------------------------------------------------
// System F syntax: separate de Bruijn indices for term and type variables.
// ---------------------------------------------------------------------------

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct TVar {
  std::size_t index;
};
struct Fun {
  TypePtr dom, cod;
};
struct Forall {
  TypePtr body;  // binds one type variable
};

struct Type {
  std::variant<TVar, Fun, Forall> node;
};

TypePtr tvar(std::size_t index);
TypePtr fun(TypePtr dom, TypePtr cod);
TypePtr forall(TypePtr body);

template <class T>
const T* as(const TypePtr& t) {
  return std::get_if<T>(&t->node);
}

bool type_equal(const TypePtr& a, const TypePtr& b);
bool type_closed(const TypePtr& t, std::size_t tctx = 0);
TypePtr shift_ty(const TypePtr& t, std::size_t delta, std::size_t cutoff = 0);
// body[j := arg], removing the binder at type index j.
TypePtr subst_ty(const TypePtr& body, std::size_t j, const TypePtr& arg);
std::string show(const TypePtr& t);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  std::size_t index;
};
struct Lam {
  TypePtr ann;
  TermPtr body;  // binds one term variable
};
struct App {
  TermPtr fn, arg;
};
struct TyLam {
  TermPtr body;  // binds one type variable
};
struct TyApp {
  TermPtr fn;
  TypePtr arg;
};

struct Term {
  std::variant<Var, Lam, App, TyLam, TyApp> node;
};

TermPtr var(std::size_t index);
TermPtr lam(TypePtr ann, TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr tylam(TermPtr body);
TermPtr tyapp(TermPtr fn, TypePtr arg);

template <class T>
const T* as(const TermPtr& t) {
  return std::get_if<T>(&t->node);
}

bool term_equal(const TermPtr& a, const TermPtr& b);
std::size_t term_size(const TermPtr& t);
std::string show(const TermPtr& t);

// ---------------------------------------------------------------------------
// Typing and normalization.
// ---------------------------------------------------------------------------

// tctx counts type binders in scope; ctx holds the term variables' types
// (innermost last).  Errors: UnboundVariable, NotAFunction, NotAForall,
// ArgumentMismatch.
TypePtr f_infer(std::size_t tctx, const std::vector<TypePtr>& ctx, const TermPtr& t);

inline constexpr std::size_t kDefaultFuel = 10000;

// Leftmost-outermost reduction with both beta rules ((\x. b) a and
// (/\X. b) [T]); no eta.  Errors: FuelExhausted.
TermPtr f_normalize(const TermPtr& t, std::size_t fuel = kDefaultFuel);

// ---------------------------------------------------------------------------
// Binary relational (parametricity) checking.
//
// A RelInstance assigns a type variable two closed types and a finite
// relation of closed beta-normal term pairs.  Function-type domains draw
// their candidate pairs from explicit FnCandidates entries; relations over
// all closed terms are not enumerable, so the checker verifies supplied
// instances, not the universally quantified statement.
// ---------------------------------------------------------------------------

using TermPair = std::pair<TermPtr, TermPtr>;

struct RelInstance {
  TypePtr left_type;
  TypePtr right_type;
  std::vector<TermPair> pairs;
};

struct FnCandidates {
  TypePtr domain;  // open type over the instantiated variables, e.g. X -> X
  std::vector<TermPair> pairs;
};

struct RelEnv {
  std::vector<RelInstance> instances;  // one per type variable, innermost last
  std::vector<FnCandidates> fn_candidates;

  const RelInstance& instance(std::size_t index) const;  // de Bruijn index
};

// Instantiates the free type variables of ty with the instances' left
// (resp. right) types.
TypePtr left_instantiation(const TypePtr& ty, const RelEnv& env);
TypePtr right_instantiation(const TypePtr& ty, const RelEnv& env);

// Membership of (left, right) in the relational interpretation of ty.
//   TVar      — normalize both sides and test membership in the finite set.
//   Fun(A, B) — every related candidate pair at A must map to related
//               applications at B.
//   Forall    — rejected; use free_theorem_check with instantiations.
// Errors: UnsupportedQuantifier, IllTyped, FuelExhausted.
bool rel_member(const TypePtr& ty, const RelEnv& env, const TermPtr& left,
                const TermPtr& right, std::size_t fuel = kDefaultFuel);

struct Instantiation {
  RelInstance instance;
  std::vector<FnCandidates> fn_candidates;
};

struct Witness {
  TypePtr at;  // the type variable whose relation rejected the pair
  TermPtr left, right;
};

struct Verdict {
  bool pass = false;
  std::optional<Witness> witness;  // the first violating pair on Fail
};

// Peels the leading Forall binders of ty against the supplied
// instantiations, pairing type applications t[A_left] / t[A_right], then
// checks relational membership of the remaining type.
// Errors: InstantiationArity, IllTyped, FuelExhausted.
Verdict free_theorem_check(const TermPtr& t, const TypePtr& ty,
                           const std::vector<Instantiation>& instantiations,
                           std::size_t fuel = kDefaultFuel);

// Renders the binary relational statement of ty for a term named term_name.
// Deterministic formatting.
std::string free_theorem_print(const TypePtr& ty, const std::string& term_name = "t");

// All closed beta-normal eta-long inhabitants of a closed type with AST node
// count <= max_size.  Desk-scale enumeration for testing free theorems.
std::vector<TermPtr> enumerate_normal_inhabitants(const TypePtr& ty, std::size_t max_size);

}  // namespace tt::sysf
