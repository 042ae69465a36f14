// helpers.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tt/front/parse.hpp"
#include "tt/front/pretty.hpp"
#include "tt/stlc/nbe.hpp"
#include "tt/stlc/oracle.hpp"
#include "tt/stlc/syntax.hpp"
#include "tt/util.hpp"

namespace tt::test {

// Parse shorthands; tests build terms from surface syntax where readable.
inline stlc::TermPtr P(std::string_view src) { return front::parse_stlc_term(src); }
inline stlc::TypePtr PT(std::string_view src) { return front::parse_stlc_type(src); }

// ---------------------------------------------------------------------------
// Randomized well-typed generators (fixed seeds in the tests).
// ---------------------------------------------------------------------------

inline stlc::TypePtr random_type(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> d(0, depth > 0 ? 3 : 1);
  switch (d(rng)) {
    case 0:
      return stlc::ans();
    case 1:
      return stlc::unit();
    case 2:
      return stlc::prod(random_type(rng, depth - 1), random_type(rng, depth - 1));
    default:
      return stlc::fun(random_type(rng, depth - 1), random_type(rng, depth - 1));
  }
}

// A well-typed term at (ctx, ty); budget bounds the recursion.
inline stlc::TermPtr random_term(const stlc::Context& ctx, const stlc::TypePtr& ty,
                                 std::mt19937& rng, int budget) {
  using namespace stlc;
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (type_equal(ctx[ctx.size() - 1 - i], ty)) vars.push_back(i);

  std::uniform_int_distribution<int> coin(0, 99);
  int roll = coin(rng);

  // Eliminator forms occasionally, when budget allows.
  if (budget > 3 && roll < 25) {
    stlc::TypePtr other = random_type(rng, 1);
    switch (coin(rng) % 3) {
      case 0:
        return fst(random_term(ctx, prod(ty, other), rng, budget - 1));
      case 1:
        return snd(random_term(ctx, prod(other, ty), rng, budget - 1));
      default:
        return app(random_term(ctx, fun(other, ty), rng, budget / 2),
                   random_term(ctx, other, rng, budget / 2));
    }
  }
  if (!vars.empty() && roll < 60) {
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    return var(vars[pick(rng)]);
  }
  return std::visit(
      overloaded{
          [&](const TAns&) { return coin(rng) % 2 ? yes() : no(); },
          [&](const TUnit&) { return star(); },
          [&](const TProd& p) {
            return pair(random_term(ctx, p.left, rng, budget - 1),
                        random_term(ctx, p.right, rng, budget - 1));
          },
          [&](const TFun& p) {
            Context extended = ctx;
            extended.push_back(p.dom);
            return lam(p.dom, random_term(extended, p.cod, rng, budget - 1));
          },
      },
      ty->node);
}

struct RenamingSetup {
  stlc::Context target;
  stlc::Renaming renaming;
};

// A random renaming out of src: the target context keeps one slot per source
// entry (plus padding), and each source index maps to some slot of equal
// type, so non-injective maps arise whenever types repeat.
inline RenamingSetup random_renaming(const stlc::Context& src, std::mt19937& rng) {
  using namespace stlc;
  RenamingSetup out;
  std::vector<stlc::TypePtr> pool(src.begin(), src.end());
  std::uniform_int_distribution<int> extra(0, 2);
  int padding = extra(rng);
  for (int i = 0; i < padding; ++i) pool.push_back(random_type(rng, 1));
  std::shuffle(pool.begin(), pool.end(), rng);
  out.target = pool;
  out.renaming.target_length = pool.size();
  out.renaming.mapping.resize(src.size());
  // mapping is indexed by de Bruijn index (innermost 0); the context vectors
  // store entries innermost-last.
  for (std::size_t i = 0; i < src.size(); ++i) {
    const stlc::TypePtr& src_ty = src[src.size() - 1 - i];
    std::vector<std::size_t> slots;
    for (std::size_t j = 0; j < pool.size(); ++j)
      if (type_equal(pool[pool.size() - 1 - j], src_ty)) slots.push_back(j);
    std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
    out.renaming.mapping[i] = slots[pick(rng)];
  }
  return out;
}

}  // namespace tt::test
