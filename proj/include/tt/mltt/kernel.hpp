// kernel.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tt/error.hpp"

namespace tt::mltt {

// ---------------------------------------------------------------------------
// The dependent fragment: Pi, Sigma, Ans, and one Tarski universe U with
// codes ans / pi / sigma decoded by El.  Types and terms share one AST
// because types compute.  Binders (Lam, and the second argument of Pi and
// Sigma) scope one de Bruijn variable.  Lam is unannotated and check-only;
// Ascribe supplies types where inference needs them.
// ---------------------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  std::size_t index;
};
struct Yes {};
struct No {};
struct Ans {};
struct U {};
struct El {
  TermPtr code;
};
struct Pi {
  TermPtr dom;
  TermPtr cod;  // binds one variable
};
struct Sigma {
  TermPtr dom;
  TermPtr cod;  // binds one variable
};
struct Lam {
  TermPtr body;  // binds one variable
};
struct App {
  TermPtr fn, arg;
};
struct Pair {
  TermPtr first, second;
};
struct Fst {
  TermPtr pair;
};
struct Snd {
  TermPtr pair;
};
struct CodeAns {};
struct CodePi {
  TermPtr dom;     // a code
  TermPtr family;  // a function from El(el dom) to codes
};
struct CodeSigma {
  TermPtr dom;
  TermPtr family;
};
struct Ascribe {
  TermPtr term;
  TermPtr type;
};

struct Term {
  std::variant<Var, Yes, No, Ans, U, El, Pi, Sigma, Lam, App, Pair, Fst, Snd, CodeAns,
               CodePi, CodeSigma, Ascribe>
      node;
};

TermPtr var(std::size_t index);
TermPtr yes();
TermPtr no();
TermPtr ans_ty();
TermPtr u_ty();
TermPtr el(TermPtr code);
TermPtr pi(TermPtr dom, TermPtr cod);
TermPtr sigma(TermPtr dom, TermPtr cod);
TermPtr lam(TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr pair(TermPtr first, TermPtr second);
TermPtr fst(TermPtr p);
TermPtr snd(TermPtr p);
TermPtr code_ans();
TermPtr code_pi(TermPtr dom, TermPtr family);
TermPtr code_sigma(TermPtr dom, TermPtr family);
TermPtr ascribe(TermPtr term, TermPtr type);

template <class T>
const T* as(const TermPtr& t) {
  return std::get_if<T>(&t->node);
}

bool term_equal(const TermPtr& a, const TermPtr& b);
std::size_t term_size(const TermPtr& t);
bool well_scoped(const TermPtr& t, std::size_t ctx_len);
// Shift free indices >= cutoff up by delta; used to push terms under binders.
TermPtr shift(const TermPtr& t, std::size_t delta, std::size_t cutoff = 0);
std::string show(const TermPtr& t);

// ---------------------------------------------------------------------------
// Semantic domain.  VNeutral carries its type value so readback stays
// type-directed; VElNeutral is the neutral TYPE El(u) for a neutral code u.
// Neutral variables are de Bruijn levels, as in the simply typed domain.
// ---------------------------------------------------------------------------

struct Value;
struct Neutral;
struct Normal;
using ValuePtr = std::shared_ptr<const Value>;
using NePtr = std::shared_ptr<const Neutral>;
using NfPtr = std::shared_ptr<const Normal>;
using Env = std::vector<ValuePtr>;  // innermost last

struct Closure {
  Env env;
  TermPtr body;  // well-scoped in env extended by one
};

struct VYes {};
struct VNo {};
struct VAns {};
struct VU {};
struct VPi {
  ValuePtr dom;
  Closure cod;
};
struct VSigma {
  ValuePtr dom;
  Closure cod;
};
struct VLam {
  Closure body;
};
struct VPair {
  ValuePtr first, second;
};
struct VCodeAns {};
struct VCodePi {
  ValuePtr dom;     // code value
  ValuePtr family;  // function value (closure or neutral)
};
struct VCodeSigma {
  ValuePtr dom;
  ValuePtr family;
};
struct VNeutral {
  ValuePtr type;
  NePtr spine;
};
struct VElNeutral {
  NePtr code;
};

struct Value {
  std::variant<VYes, VNo, VAns, VU, VPi, VSigma, VLam, VPair, VCodeAns, VCodePi,
               VCodeSigma, VNeutral, VElNeutral>
      node;
};

ValuePtr vyes();
ValuePtr vno();
ValuePtr vans();
ValuePtr vu();
ValuePtr vpi(ValuePtr dom, Closure cod);
ValuePtr vsigma(ValuePtr dom, Closure cod);
ValuePtr vlam(Closure body);
ValuePtr vpair(ValuePtr first, ValuePtr second);
ValuePtr vcode_ans();
ValuePtr vcode_pi(ValuePtr dom, ValuePtr family);
ValuePtr vcode_sigma(ValuePtr dom, ValuePtr family);
ValuePtr vneutral(ValuePtr type, NePtr spine);
ValuePtr vel_neutral(NePtr code);

template <class T>
const T* as(const ValuePtr& v) {
  return std::get_if<T>(&v->node);
}

// ---------------------------------------------------------------------------
// Normal and neutral forms for the dependent fragment, including normal
// types.  Neutral terms coerce to normal form at Ans, at U, and at neutral
// types; a neutral code under El is a neutral type that coerces to a normal
// type.
// ---------------------------------------------------------------------------

struct NVar {
  std::size_t level;
};
struct NApp {
  NePtr fn;
  NfPtr arg;
};
struct NFst {
  NePtr pair;
};
struct NSnd {
  NePtr pair;
};

struct Neutral {
  std::variant<NVar, NApp, NFst, NSnd> node;
};

struct NfYes {};
struct NfNo {};
struct NfLam {
  NfPtr body;
};
struct NfPair {
  NfPtr first, second;
};
struct NfCodeAns {};
struct NfCodePi {
  NfPtr dom, family;
};
struct NfCodeSigma {
  NfPtr dom, family;
};
struct NfNeutAns {  // neutral term at Ans
  NePtr neutral;
};
struct NfNeutU {  // neutral code at U
  NePtr neutral;
};
struct NfNeutNe {  // neutral term at a neutral type
  NePtr neutral;
};
struct NfAns {};  // normal types
struct NfU {};
struct NfPi {
  NfPtr dom, cod;
};
struct NfSigma {
  NfPtr dom, cod;
};
struct NfElNe {  // the neutral type El(u), coerced to a normal type
  NePtr code;
};

struct Normal {
  std::variant<NfYes, NfNo, NfLam, NfPair, NfCodeAns, NfCodePi, NfCodeSigma, NfNeutAns,
               NfNeutU, NfNeutNe, NfAns, NfU, NfPi, NfSigma, NfElNe>
      node;
};

NePtr nvar(std::size_t level);
NePtr napp(NePtr fn, NfPtr arg);
NePtr nfst(NePtr p);
NePtr nsnd(NePtr p);

NfPtr nf_yes();
NfPtr nf_no();
NfPtr nf_lam(NfPtr body);
NfPtr nf_pair(NfPtr first, NfPtr second);
NfPtr nf_code_ans();
NfPtr nf_code_pi(NfPtr dom, NfPtr family);
NfPtr nf_code_sigma(NfPtr dom, NfPtr family);
NfPtr nf_neut_ans(NePtr n);
NfPtr nf_neut_u(NePtr n);
NfPtr nf_neut_ne(NePtr n);
NfPtr nf_ans();
NfPtr nf_u();
NfPtr nf_pi(NfPtr dom, NfPtr cod);
NfPtr nf_sigma(NfPtr dom, NfPtr cod);
NfPtr nf_el_ne(NePtr code);

template <class T>
const T* as(const NfPtr& n) {
  return std::get_if<T>(&n->node);
}
template <class T>
const T* as(const NePtr& n) {
  return std::get_if<T>(&n->node);
}

bool nf_equal(const NfPtr& a, const NfPtr& b);
bool ne_equal(const NePtr& a, const NePtr& b);

TermPtr embed_nf(const NfPtr& n, std::size_t ctx_len);
TermPtr embed_ne(const NePtr& n, std::size_t ctx_len);

// ---------------------------------------------------------------------------
// Evaluation and readback.  fresh_level is threaded exactly as in the simply
// typed evaluator.
// ---------------------------------------------------------------------------

ValuePtr d_eval(const Env& env, const TermPtr& t, std::size_t fresh_level);
ValuePtr d_apply(const ValuePtr& fn, const ValuePtr& arg, std::size_t fresh_level);
ValuePtr closure_apply(const Closure& clo, const ValuePtr& arg, std::size_t fresh_level);
// Reflection also carries the level: splitting a Sigma instantiates its
// codomain, and that evaluation may reify arguments of neutral functions.
ValuePtr d_reflect(const ValuePtr& ty, const NePtr& n, std::size_t fresh_level);
NfPtr d_reify(const ValuePtr& ty, const ValuePtr& v, std::size_t fresh_level);
NfPtr d_reify_ty(const ValuePtr& ty, std::size_t fresh_level);

// ---------------------------------------------------------------------------
// Contexts for the bidirectional checker: type values plus the matching
// environment of reflected variables.
// ---------------------------------------------------------------------------

class Ctx {
 public:
  Ctx() = default;

  std::size_t size() const { return types_.size(); }
  const ValuePtr& type_of(std::size_t index) const;  // de Bruijn index, innermost 0
  const Env& env() const { return env_; }

  Ctx extended(const ValuePtr& type_value) const;
  // Checks that entry is a type in this context, then extends.
  Ctx extended_checked(const TermPtr& entry) const;

 private:
  std::vector<ValuePtr> types_;  // innermost last
  Env env_;
};

// Checks that t is a type expression (Ans, U, Pi, Sigma, or El of a code) and
// returns its value.  Errors: ExpectedU when something else appears in type
// position or when an El argument is not a code.
ValuePtr check_type(const Ctx& ctx, const TermPtr& t);

// Bidirectional discipline: Lam and Pair check against Pi and Sigma;
// variables, eliminators, codes and ascriptions infer; mismatches resolve
// through conversion.  Errors: UnboundVariable, ExpectedPi, ExpectedSigma,
// ExpectedU, CannotInfer, ConversionFailure.
void check(const Ctx& ctx, const TermPtr& t, const ValuePtr& ty);
ValuePtr infer(const Ctx& ctx, const TermPtr& t);

// True iff the reifications agree; eta for Pi and Sigma holds by construction
// of readback.
bool convert(const Ctx& ctx, const ValuePtr& ty, const ValuePtr& a, const ValuePtr& b);
bool convert_ty(const Ctx& ctx, const ValuePtr& a, const ValuePtr& b);

// Requires check(ctx, t, ty) where ty is itself a checked type expression.
NfPtr d_normalize(const Ctx& ctx, const TermPtr& t, const TermPtr& ty);

enum class Canonicity { IsYes, IsNo };
// Errors: NotClosed, NotAns.
Canonicity d_canonicity(const TermPtr& t);

// Closed terms over the constructor palette {yes, no, ans, pi, sigma, lam,
// app, pair, fst, snd} (plus bound variables) with AST node count <= max_size
// that check at the given type expression.  Lambda and pair subtrees also
// appear ascribed against a fixed family of small types, since unannotated
// introductions can never head an elimination; ascription types do not count
// toward the size.  Generate-and-filter; the order is deterministic.
std::vector<TermPtr> enumerate_checked(const TermPtr& ty, std::size_t max_size);

std::string show(const NfPtr& n, std::size_t ctx_len);

}  // namespace tt::mltt
