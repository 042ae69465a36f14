// nbe.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "tt/stlc/syntax.hpp"

namespace tt::stlc {

// ---------------------------------------------------------------------------
// Neutral and normal forms.
//
// Neutral forms are variables under a stack of eliminators; normal forms are
// nested constructors whose innermost layer is neutral.  Neutrals embed into
// normals only at Ans, which forces eta-long results.  Neutral variables are
// de Bruijn LEVELS (counted from the outside of the context), so values never
// need a renaming action; the level/index conversion happens in embed_nf.
// ---------------------------------------------------------------------------

struct Neutral;
struct Normal;
using NePtr = std::shared_ptr<const Neutral>;
using NfPtr = std::shared_ptr<const Normal>;

struct NVar {
  std::size_t level;
};
struct NFst {
  NePtr pair;
};
struct NSnd {
  NePtr pair;
};
struct NApp {
  NePtr fn;
  NfPtr arg;
};

struct Neutral {
  std::variant<NVar, NFst, NSnd, NApp> node;
};

struct NfYes {};
struct NfNo {};
struct NfStar {};
struct NfNeutAns {
  NePtr neutral;
};
struct NfPair {
  NfPtr first, second;
};
struct NfLam {
  TypePtr ann;
  NfPtr body;
};

struct Normal {
  std::variant<NfYes, NfNo, NfStar, NfNeutAns, NfPair, NfLam> node;
};

NePtr nvar(std::size_t level);
NePtr nfst(NePtr p);
NePtr nsnd(NePtr p);
NePtr napp(NePtr fn, NfPtr arg);

NfPtr nf_yes();
NfPtr nf_no();
NfPtr nf_star();
NfPtr nf_neut_ans(NePtr n);
NfPtr nf_pair(NfPtr first, NfPtr second);
NfPtr nf_lam(TypePtr ann, NfPtr body);

template <class T>
const T* as(const NePtr& n) {
  return std::get_if<T>(&n->node);
}
template <class T>
const T* as(const NfPtr& n) {
  return std::get_if<T>(&n->node);
}

bool ne_equal(const NePtr& a, const NePtr& b);
bool nf_equal(const NfPtr& a, const NfPtr& b);

// ---------------------------------------------------------------------------
// The semantic domain.  Functions are defunctionalized closures, blocked
// computations are typed neutral spines.  VNeutral carries its type so
// reflection can split products eagerly and application can reify arguments.
// No VNeutral at Unit or product type ever arises.
// ---------------------------------------------------------------------------

struct Value;
using ValuePtr = std::shared_ptr<const Value>;
using Env = std::vector<ValuePtr>;  // one value per context entry, innermost last

struct VYes {};
struct VNo {};
struct VStar {};
struct VPair {
  ValuePtr first, second;
};
struct VClosure {
  Env env;
  TypePtr ann;
  TermPtr body;
};
struct VNeutral {
  TypePtr type;
  NePtr spine;
};

struct Value {
  std::variant<VYes, VNo, VStar, VPair, VClosure, VNeutral> node;
};

ValuePtr vyes();
ValuePtr vno();
ValuePtr vstar();
ValuePtr vpair(ValuePtr first, ValuePtr second);
ValuePtr vclosure(Env env, TypePtr ann, TermPtr body);
ValuePtr vneutral(TypePtr type, NePtr spine);

template <class T>
const T* as(const ValuePtr& v) {
  return std::get_if<T>(&v->node);
}

// fresh_level is the number of bindings currently in scope; every level free
// in env (or in fn/arg) must be below it.  It is what reification uses to
// allocate fresh variables, so it must be threaded through evaluation because
// applying a neutral function reifies the argument on the spot.
ValuePtr eval(const Env& env, const TermPtr& t, std::size_t fresh_level);
ValuePtr apply(const ValuePtr& fn, const ValuePtr& arg, std::size_t fresh_level);
ValuePtr reflect(const TypePtr& ty, const NePtr& n);
NfPtr reify(const TypePtr& ty, const ValuePtr& v, std::size_t fresh_level);

NfPtr normalize(const Context& ctx, const TermPtr& t);

enum class Canonicity { IsYes, IsNo };
// Decides which constructor a closed term of type Ans is equal to.
// Errors: NotClosed, NotAns.
Canonicity canonicity(const TermPtr& t);

// Injective, type-preserving embeddings back into terms; levels are converted
// to indices against the given context length.  Errors: LevelOutOfRange.
TermPtr embed_nf(const NfPtr& n, std::size_t ctx_len);
TermPtr embed_ne(const NePtr& n, std::size_t ctx_len);

// The action of a renaming r : ctx' -> ctx on normal forms over ctx.
// src_ctx_len must be the length of ctx; bound levels are shifted, free ones
// pass through r.
NfPtr rename_nf(const NfPtr& n, const Renaming& r, std::size_t src_ctx_len);
NePtr rename_ne(const NePtr& n, const Renaming& r, std::size_t src_ctx_len);

}  // namespace tt::stlc
