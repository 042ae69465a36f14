// syntax.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/stlc/syntax.hpp"

#include <algorithm>

#include "tt/util.hpp"

namespace tt::stlc {

TypePtr ans() {
  static const TypePtr t = std::make_shared<Type>(Type{TAns{}});
  return t;
}
TypePtr unit() {
  static const TypePtr t = std::make_shared<Type>(Type{TUnit{}});
  return t;
}
TypePtr prod(TypePtr left, TypePtr right) {
  return std::make_shared<Type>(Type{TProd{std::move(left), std::move(right)}});
}
TypePtr fun(TypePtr dom, TypePtr cod) {
  return std::make_shared<Type>(Type{TFun{std::move(dom), std::move(cod)}});
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  return std::visit(
      overloaded{
          [&](const TAns&) { return std::holds_alternative<TAns>(b->node); },
          [&](const TUnit&) { return std::holds_alternative<TUnit>(b->node); },
          [&](const TProd& p) {
            const auto* q = as<TProd>(b);
            return q && type_equal(p.left, q->left) && type_equal(p.right, q->right);
          },
          [&](const TFun& p) {
            const auto* q = as<TFun>(b);
            return q && type_equal(p.dom, q->dom) && type_equal(p.cod, q->cod);
          },
      },
      a->node);
}

int type_compare(const TypePtr& a, const TypePtr& b) {
  auto rank = [](const TypePtr& t) { return static_cast<int>(t->node.index()); };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (const auto* p = as<TProd>(a)) {
    const auto* q = as<TProd>(b);
    if (int c = type_compare(p->left, q->left)) return c;
    return type_compare(p->right, q->right);
  }
  if (const auto* p = as<TFun>(a)) {
    const auto* q = as<TFun>(b);
    if (int c = type_compare(p->dom, q->dom)) return c;
    return type_compare(p->cod, q->cod);
  }
  return 0;
}

std::string show(const TypePtr& ty) {
  return std::visit(
      overloaded{
          [](const TAns&) { return std::string("Ans"); },
          [](const TUnit&) { return std::string("Unit"); },
          [](const TProd& p) { return "(" + show(p.left) + " * " + show(p.right) + ")"; },
          [](const TFun& p) { return "(" + show(p.dom) + " -> " + show(p.cod) + ")"; },
      },
      ty->node);
}

TermPtr var(std::size_t index) { return std::make_shared<Term>(Term{Var{index}}); }
TermPtr yes() {
  static const TermPtr t = std::make_shared<Term>(Term{Yes{}});
  return t;
}
TermPtr no() {
  static const TermPtr t = std::make_shared<Term>(Term{No{}});
  return t;
}
TermPtr star() {
  static const TermPtr t = std::make_shared<Term>(Term{Star{}});
  return t;
}
TermPtr pair(TermPtr first, TermPtr second) {
  return std::make_shared<Term>(Term{Pair{std::move(first), std::move(second)}});
}
TermPtr fst(TermPtr p) { return std::make_shared<Term>(Term{Fst{std::move(p)}}); }
TermPtr snd(TermPtr p) { return std::make_shared<Term>(Term{Snd{std::move(p)}}); }
TermPtr lam(TypePtr ann, TermPtr body) {
  return std::make_shared<Term>(Term{Lam{std::move(ann), std::move(body)}});
}
TermPtr app(TermPtr fn, TermPtr arg) {
  return std::make_shared<Term>(Term{App{std::move(fn), std::move(arg)}});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index == as<Var>(b)->index; },
          [&](const Yes&) { return true; },
          [&](const No&) { return true; },
          [&](const Star&) { return true; },
          [&](const Pair& p) {
            const auto* q = as<Pair>(b);
            return term_equal(p.first, q->first) && term_equal(p.second, q->second);
          },
          [&](const Fst& p) { return term_equal(p.pair, as<Fst>(b)->pair); },
          [&](const Snd& p) { return term_equal(p.pair, as<Snd>(b)->pair); },
          [&](const Lam& p) {
            const auto* q = as<Lam>(b);
            return type_equal(p.ann, q->ann) && term_equal(p.body, q->body);
          },
          [&](const App& p) {
            const auto* q = as<App>(b);
            return term_equal(p.fn, q->fn) && term_equal(p.arg, q->arg);
          },
      },
      a->node);
}

std::size_t term_size(const TermPtr& t) {
  return std::visit(
      overloaded{
          [](const Var&) -> std::size_t { return 1; },
          [](const Yes&) -> std::size_t { return 1; },
          [](const No&) -> std::size_t { return 1; },
          [](const Star&) -> std::size_t { return 1; },
          [](const Pair& p) { return 1 + term_size(p.first) + term_size(p.second); },
          [](const Fst& p) { return 1 + term_size(p.pair); },
          [](const Snd& p) { return 1 + term_size(p.pair); },
          [](const Lam& p) { return 1 + term_size(p.body); },
          [](const App& p) { return 1 + term_size(p.fn) + term_size(p.arg); },
      },
      t->node);
}

namespace {

std::size_t free_bound_at(const TermPtr& t, std::size_t depth) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> std::size_t {
            return v.index >= depth ? v.index - depth + 1 : 0;
          },
          [](const Yes&) -> std::size_t { return 0; },
          [](const No&) -> std::size_t { return 0; },
          [](const Star&) -> std::size_t { return 0; },
          [&](const Pair& p) {
            return std::max(free_bound_at(p.first, depth), free_bound_at(p.second, depth));
          },
          [&](const Fst& p) { return free_bound_at(p.pair, depth); },
          [&](const Snd& p) { return free_bound_at(p.pair, depth); },
          [&](const Lam& p) { return free_bound_at(p.body, depth + 1); },
          [&](const App& p) {
            return std::max(free_bound_at(p.fn, depth), free_bound_at(p.arg, depth));
          },
      },
      t->node);
}

// Shift free indices >= cutoff up by delta.  Internal helper behind the
// public renaming/substitution operations.
TermPtr shift(const TermPtr& t, std::size_t delta, std::size_t cutoff) {
  if (delta == 0) return t;
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index >= cutoff ? var(v.index + delta) : t; },
          [&](const Yes&) { return t; },
          [&](const No&) { return t; },
          [&](const Star&) { return t; },
          [&](const Pair& p) {
            return pair(shift(p.first, delta, cutoff), shift(p.second, delta, cutoff));
          },
          [&](const Fst& p) { return fst(shift(p.pair, delta, cutoff)); },
          [&](const Snd& p) { return snd(shift(p.pair, delta, cutoff)); },
          [&](const Lam& p) { return lam(p.ann, shift(p.body, delta, cutoff + 1)); },
          [&](const App& p) {
            return app(shift(p.fn, delta, cutoff), shift(p.arg, delta, cutoff));
          },
      },
      t->node);
}

TermPtr rename_at(const TermPtr& t, const Renaming& r, std::size_t depth) {
  return std::visit(
      overloaded{
          [&](const Var& v) {
            if (v.index < depth) return t;
            std::size_t i = v.index - depth;
            if (i >= r.mapping.size())
              throw type_error("IndexOutOfRange",
                               "renaming does not cover index " + std::to_string(i));
            std::size_t j = r.mapping[i];
            if (j >= r.target_length)
              throw type_error("IndexOutOfRange",
                               "renaming maps index " + std::to_string(i) +
                                   " outside its target context");
            return var(j + depth);
          },
          [&](const Yes&) { return t; },
          [&](const No&) { return t; },
          [&](const Star&) { return t; },
          [&](const Pair& p) {
            return pair(rename_at(p.first, r, depth), rename_at(p.second, r, depth));
          },
          [&](const Fst& p) { return fst(rename_at(p.pair, r, depth)); },
          [&](const Snd& p) { return snd(rename_at(p.pair, r, depth)); },
          [&](const Lam& p) { return lam(p.ann, rename_at(p.body, r, depth + 1)); },
          [&](const App& p) {
            return app(rename_at(p.fn, r, depth), rename_at(p.arg, r, depth));
          },
      },
      t->node);
}

TermPtr subst_at(const TermPtr& t, const Substitution& s, std::size_t depth) {
  return std::visit(
      overloaded{
          [&](const Var& v) {
            if (v.index < depth) return t;
            std::size_t i = v.index - depth;
            if (i >= s.entries.size())
              throw type_error("IndexOutOfRange",
                               "substitution does not cover index " + std::to_string(i));
            return shift(s.entries[i], depth, 0);
          },
          [&](const Yes&) { return t; },
          [&](const No&) { return t; },
          [&](const Star&) { return t; },
          [&](const Pair& p) {
            return pair(subst_at(p.first, s, depth), subst_at(p.second, s, depth));
          },
          [&](const Fst& p) { return fst(subst_at(p.pair, s, depth)); },
          [&](const Snd& p) { return snd(subst_at(p.pair, s, depth)); },
          [&](const Lam& p) { return lam(p.ann, subst_at(p.body, s, depth + 1)); },
          [&](const App& p) {
            return app(subst_at(p.fn, s, depth), subst_at(p.arg, s, depth));
          },
      },
      t->node);
}

}  // namespace

bool well_scoped(const TermPtr& t, std::size_t ctx_len) {
  return free_bound_at(t, 0) <= ctx_len;
}

std::size_t free_var_bound(const TermPtr& t) { return free_bound_at(t, 0); }

std::string show(const TermPtr& t) {
  return std::visit(
      overloaded{
          [](const Var& v) { return "x" + std::to_string(v.index); },
          [](const Yes&) { return std::string("yes"); },
          [](const No&) { return std::string("no"); },
          [](const Star&) { return std::string("()"); },
          [](const Pair& p) { return "(" + show(p.first) + ", " + show(p.second) + ")"; },
          [](const Fst& p) { return "fst " + show(p.pair); },
          [](const Snd& p) { return "snd " + show(p.pair); },
          [](const Lam& p) { return "(\\:" + show(p.ann) + ". " + show(p.body) + ")"; },
          [](const App& p) { return "(" + show(p.fn) + " " + show(p.arg) + ")"; },
      },
      t->node);
}

Renaming Renaming::identity(std::size_t n) {
  Renaming r;
  r.target_length = n;
  r.mapping.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.mapping[i] = i;
  return r;
}

Renaming Renaming::weaken(std::size_t n) {
  Renaming r;
  r.target_length = n + 1;
  r.mapping.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.mapping[i] = i + 1;
  return r;
}

Renaming Renaming::compose(const Renaming& second, const Renaming& first) {
  Renaming r;
  r.target_length = second.target_length;
  r.mapping.resize(first.mapping.size());
  for (std::size_t i = 0; i < first.mapping.size(); ++i) {
    std::size_t j = first.mapping[i];
    if (j >= second.mapping.size())
      throw type_error("IndexOutOfRange", "renamings do not compose");
    r.mapping[i] = second.mapping[j];
  }
  return r;
}

TermPtr rename(const TermPtr& t, const Renaming& r) { return rename_at(t, r, 0); }

Substitution Substitution::identity(const Context& ctx) {
  Substitution s;
  s.target = ctx;
  s.entries.resize(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) s.entries[i] = var(i);
  return s;
}

TermPtr subst(const TermPtr& t, const Substitution& s) { return subst_at(t, s, 0); }

TermPtr subst_head(const TermPtr& body, const TermPtr& arg) {
  std::size_t bound = free_var_bound(body);
  Substitution s;
  s.entries.push_back(arg);
  for (std::size_t i = 1; i < bound; ++i) s.entries.push_back(var(i - 1));
  return subst(body, s);
}

TypePtr infer(const Context& ctx, const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> TypePtr {
            if (v.index >= ctx.size())
              throw type_error("UnboundVariable",
                               "unbound variable with index " + std::to_string(v.index));
            return ctx[ctx.size() - 1 - v.index];
          },
          [&](const Yes&) { return ans(); },
          [&](const No&) { return ans(); },
          [&](const Star&) { return unit(); },
          [&](const Pair& p) {
            return prod(infer(ctx, p.first), infer(ctx, p.second));
          },
          [&](const Fst& p) -> TypePtr {
            TypePtr ty = infer(ctx, p.pair);
            const auto* pr = as<TProd>(ty);
            if (!pr) throw type_error("NotAProduct", "fst applied at type " + show(ty));
            return pr->left;
          },
          [&](const Snd& p) -> TypePtr {
            TypePtr ty = infer(ctx, p.pair);
            const auto* pr = as<TProd>(ty);
            if (!pr) throw type_error("NotAProduct", "snd applied at type " + show(ty));
            return pr->right;
          },
          [&](const Lam& p) {
            Context extended = ctx;
            extended.push_back(p.ann);
            return fun(p.ann, infer(extended, p.body));
          },
          [&](const App& p) -> TypePtr {
            TypePtr fty = infer(ctx, p.fn);
            const auto* fn = as<TFun>(fty);
            if (!fn)
              throw type_error("NotAFunction", "application head has type " + show(fty));
            TypePtr aty = infer(ctx, p.arg);
            if (!type_equal(fn->dom, aty))
              throw type_error("ArgumentMismatch", "expected argument of type " +
                                                       show(fn->dom) + ", got " + show(aty));
            return fn->cod;
          },
      },
      t->node);
}

}  // namespace tt::stlc
