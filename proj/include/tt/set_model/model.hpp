// model.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tt/stlc/syntax.hpp"

namespace tt::set_model {

// The finite-set denotational model: Ans is a two-element set, Unit a
// singleton, products are Cartesian, and function types are materialized as
// explicit finite tables so element equality stays decidable.

struct Element;
using ElemPtr = std::shared_ptr<const Element>;

struct Atom {
  std::string tag;
};
struct Tuple {
  ElemPtr first, second;
};
struct Table {
  // Total, deterministic graph; rows follow the canonical enumeration order
  // of the domain, so structural equality of graphs is element equality.
  std::vector<std::pair<ElemPtr, ElemPtr>> graph;
};

struct Element {
  std::variant<Atom, Tuple, Table> node;
};

ElemPtr atom(std::string tag);
ElemPtr tuple(ElemPtr first, ElemPtr second);
ElemPtr table(std::vector<std::pair<ElemPtr, ElemPtr>> graph);

bool elem_equal(const ElemPtr& a, const ElemPtr& b);
std::string show(const ElemPtr& e);

struct FinSet {
  std::vector<ElemPtr> elements;  // canonical order, no duplicates
};

inline constexpr std::size_t kDefaultCardinalityBound = 65536;

// Ans -> {t, f}; Unit -> {nil}; products are Cartesian; functions are full
// table sets.  Errors: SizeOverflow above the cardinality bound.
FinSet interp_ty(const stlc::TypePtr& ty,
                 std::size_t max_cardinality = kDefaultCardinalityBound);

// Compositional interpretation; env has one element per context entry
// (innermost last), each drawn from the interpretation of its type.
ElemPtr interp_tm(const stlc::Context& ctx, const std::vector<ElemPtr>& env,
                  const stlc::TermPtr& t,
                  std::size_t max_cardinality = kDefaultCardinalityBound);

// interp(yes) differs from interp(no); the model-level consistency statement.
bool consistency_check();

}  // namespace tt::set_model
