// oracle.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/stlc/oracle.hpp"

#include <algorithm>

#include "tt/util.hpp"

namespace tt::stlc {

namespace {

TermPtr shift_up(const TermPtr& t) {
  std::size_t bound = free_var_bound(t);
  return rename(t, Renaming::weaken(bound));
}

}  // namespace

RewriteResult step(const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Var&) { return RewriteResult{}; },
          [&](const Yes&) { return RewriteResult{}; },
          [&](const No&) { return RewriteResult{}; },
          [&](const Star&) { return RewriteResult{}; },
          [&](const Pair& p) {
            if (RewriteResult r = step(p.first); !r.stuck())
              return RewriteResult{pair(*r.stepped, p.second)};
            if (RewriteResult r = step(p.second); !r.stuck())
              return RewriteResult{pair(p.first, *r.stepped)};
            return RewriteResult{};
          },
          [&](const Fst& p) {
            if (const auto* pr = as<Pair>(p.pair)) return RewriteResult{pr->first};
            if (RewriteResult r = step(p.pair); !r.stuck())
              return RewriteResult{fst(*r.stepped)};
            return RewriteResult{};
          },
          [&](const Snd& p) {
            if (const auto* pr = as<Pair>(p.pair)) return RewriteResult{pr->second};
            if (RewriteResult r = step(p.pair); !r.stuck())
              return RewriteResult{snd(*r.stepped)};
            return RewriteResult{};
          },
          [&](const Lam& p) {
            if (RewriteResult r = step(p.body); !r.stuck())
              return RewriteResult{lam(p.ann, *r.stepped)};
            return RewriteResult{};
          },
          [&](const App& p) {
            if (const auto* fn = as<Lam>(p.fn))
              return RewriteResult{subst_head(fn->body, p.arg)};
            if (RewriteResult r = step(p.fn); !r.stuck())
              return RewriteResult{app(*r.stepped, p.arg)};
            if (RewriteResult r = step(p.arg); !r.stuck())
              return RewriteResult{app(p.fn, *r.stepped)};
            return RewriteResult{};
          },
      },
      t->node);
}

TermPtr bounded_beta_normalize(const TermPtr& t, Fuel fuel) {
  TermPtr current = t;
  std::size_t steps = 0;
  for (;;) {
    RewriteResult r = step(current);
    if (r.stuck()) return current;
    if (fuel.remaining == 0) throw FuelExhausted(steps);
    --fuel.remaining;
    ++steps;
    current = *r.stepped;
  }
}

namespace {

TermPtr eta_long(const Context& ctx, const TypePtr& ty, const TermPtr& t, Fuel fuel);

// A beta-normal term of type Ans is yes, no, or neutral; neutral spines still
// need their arguments expanded, which requires the head types.
TermPtr eta_long_neutral(const Context& ctx, const TermPtr& t, Fuel fuel) {
  return std::visit(
      overloaded{
          [&](const Var&) { return t; },
          [&](const Fst& p) { return fst(eta_long_neutral(ctx, p.pair, fuel)); },
          [&](const Snd& p) { return snd(eta_long_neutral(ctx, p.pair, fuel)); },
          [&](const App& p) {
            TypePtr fty = infer(ctx, p.fn);
            const auto* fn = as<TFun>(fty);
            if (!fn) throw internal_error("neutral head is not a function");
            return app(eta_long_neutral(ctx, p.fn, fuel), eta_long(ctx, fn->dom, p.arg, fuel));
          },
          [&](const auto&) -> TermPtr {
            throw internal_error("expected a neutral term");
          },
      },
      t->node);
}

TermPtr eta_long(const Context& ctx, const TypePtr& ty, const TermPtr& t, Fuel fuel) {
  return std::visit(
      overloaded{
          [&](const TAns&) -> TermPtr {
            if (as<Yes>(t) || as<No>(t)) return t;
            return eta_long_neutral(ctx, t, fuel);
          },
          [&](const TUnit&) { return star(); },
          [&](const TProd& p) {
            return pair(eta_long(ctx, p.left, bounded_beta_normalize(fst(t), fuel), fuel),
                        eta_long(ctx, p.right, bounded_beta_normalize(snd(t), fuel), fuel));
          },
          [&](const TFun& p) {
            Context extended = ctx;
            extended.push_back(p.dom);
            TermPtr body = bounded_beta_normalize(app(shift_up(t), var(0)), fuel);
            return lam(p.dom, eta_long(extended, p.cod, body, fuel));
          },
      },
      ty->node);
}

}  // namespace

TermPtr eta_expand(const Context& ctx, const TypePtr& ty, const TermPtr& t, Fuel fuel) {
  return eta_long(ctx, ty, t, fuel);
}

bool oracle_equal(const Context& ctx, const TermPtr& t, const TermPtr& s, Fuel fuel) {
  TypePtr tty = infer(ctx, t);
  TypePtr sty = infer(ctx, s);
  if (!type_equal(tty, sty))
    throw type_error("TypeMismatch", "cannot compare " + show(tty) + " with " + show(sty));
  TermPtr tn = eta_expand(ctx, tty, bounded_beta_normalize(t, fuel), fuel);
  TermPtr sn = eta_expand(ctx, sty, bounded_beta_normalize(s, fuel), fuel);
  return term_equal(tn, sn);
}

namespace {

void collect_subtypes(const TypePtr& ty, std::vector<TypePtr>& out) {
  out.push_back(ty);
  if (const auto* p = as<TProd>(ty)) {
    collect_subtypes(p->left, out);
    collect_subtypes(p->right, out);
  } else if (const auto* p = as<TFun>(ty)) {
    collect_subtypes(p->dom, out);
    collect_subtypes(p->cod, out);
  }
}

struct Enumerator {
  const std::vector<TypePtr>& palette;

  // Exact-size enumeration is duplicate-free: the root constructor and the
  // (unique) types of all subterms pin each term to one derivation.
  std::vector<TermPtr> exact(const Context& ctx, const TypePtr& ty, std::size_t n) {
    std::vector<TermPtr> out;
    if (n == 0) return out;
    if (n == 1) {
      for (std::size_t i = 0; i < ctx.size(); ++i)
        if (type_equal(ctx[ctx.size() - 1 - i], ty)) out.push_back(var(i));
      if (as<TAns>(ty)) {
        out.push_back(yes());
        out.push_back(no());
      }
      if (as<TUnit>(ty)) out.push_back(star());
      return out;
    }
    if (const auto* p = as<TProd>(ty)) {
      for (std::size_t i = 1; i + 1 < n; ++i)
        for (const TermPtr& a : exact(ctx, p->left, i))
          for (const TermPtr& b : exact(ctx, p->right, n - 1 - i)) out.push_back(pair(a, b));
    }
    if (const auto* p = as<TFun>(ty)) {
      Context extended = ctx;
      extended.push_back(p->dom);
      for (const TermPtr& b : exact(extended, p->cod, n - 1)) out.push_back(lam(p->dom, b));
    }
    for (const TypePtr& other : palette) {
      for (const TermPtr& p : exact(ctx, prod(ty, other), n - 1)) out.push_back(fst(p));
      for (const TermPtr& p : exact(ctx, prod(other, ty), n - 1)) out.push_back(snd(p));
      for (std::size_t i = 1; i + 1 < n; ++i)
        for (const TermPtr& f : exact(ctx, fun(other, ty), i))
          for (const TermPtr& a : exact(ctx, other, n - 1 - i)) out.push_back(app(f, a));
    }
    return out;
  }
};

}  // namespace

std::vector<TypePtr> type_palette(const Context& ctx, const TypePtr& ty) {
  std::vector<TypePtr> all;
  all.push_back(ans());
  all.push_back(unit());
  for (const TypePtr& entry : ctx) collect_subtypes(entry, all);
  collect_subtypes(ty, all);
  std::sort(all.begin(), all.end(),
            [](const TypePtr& a, const TypePtr& b) { return type_compare(a, b) < 0; });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const TypePtr& a, const TypePtr& b) { return type_equal(a, b); }),
            all.end());
  return all;
}

std::vector<TermPtr> enumerate_terms(const Context& ctx, const TypePtr& ty,
                                     std::size_t max_size) {
  std::vector<TypePtr> palette = type_palette(ctx, ty);
  Enumerator e{palette};
  std::vector<TermPtr> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (TermPtr& t : e.exact(ctx, ty, n)) out.push_back(std::move(t));
  return out;
}

}  // namespace tt::stlc
