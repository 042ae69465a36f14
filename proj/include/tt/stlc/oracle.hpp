// oracle.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <optional>
#include <vector>

#include "tt/stlc/syntax.hpp"

namespace tt::stlc {

// An NbE-free decision aid: fuelled small-step beta rewriting plus
// type-directed eta expansion, and a well-typed term enumerator.  Used as the
// oracle that normalization is tested against; nothing here may call into
// nbe.hpp.

inline constexpr std::size_t kDefaultFuel = 10000;

struct Fuel {
  std::size_t remaining = kDefaultFuel;
};

// Stepped(term) | Stuck.
struct RewriteResult {
  std::optional<TermPtr> stepped;
  bool stuck() const { return !stepped.has_value(); }
};

// Performs the leftmost-outermost beta redex among
//   (\x. b) a  ->  b[x/a]
//   fst (a, b) ->  a
//   snd (a, b) ->  b
// Eta is not a step rule; it is handled by eta_expand.
RewriteResult step(const TermPtr& t);

// Iterates step until stuck; throws FuelExhausted if the fuel runs out while
// a redex remains.
TermPtr bounded_beta_normalize(const TermPtr& t, Fuel fuel);

// Given a beta-normal term, produces its eta-long form: functions become
// lambdas, products become pairs, Unit collapses to (); administrative
// redexes created by the expansion are beta-normalized away.
TermPtr eta_expand(const Context& ctx, const TypePtr& ty, const TermPtr& t,
                   Fuel fuel = Fuel{});

// True iff the eta-long beta-normal forms of the two sides are structurally
// equal.  Errors: TypeMismatch when the sides have different types;
// FuelExhausted.
bool oracle_equal(const Context& ctx, const TermPtr& t, const TermPtr& s, Fuel fuel = Fuel{});

// The subtypes occurring in ctx and ty, plus Ans and Unit; canonically sorted.
std::vector<TypePtr> type_palette(const Context& ctx, const TypePtr& ty);

// All well-typed terms at (ctx, ty) with AST node count <= max_size whose
// eliminator intermediate types stay inside the palette.  Deterministic
// order, no duplicates.
std::vector<TermPtr> enumerate_terms(const Context& ctx, const TypePtr& ty,
                                     std::size_t max_size);

}  // namespace tt::stlc
