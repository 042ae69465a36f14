// model.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/set_model/model.hpp"

#include "tt/util.hpp"

namespace tt::set_model {

using stlc::TAns;
using stlc::TFun;
using stlc::TProd;
using stlc::TUnit;

ElemPtr atom(std::string tag) {
  return std::make_shared<Element>(Element{Atom{std::move(tag)}});
}
ElemPtr tuple(ElemPtr first, ElemPtr second) {
  return std::make_shared<Element>(Element{Tuple{std::move(first), std::move(second)}});
}
ElemPtr table(std::vector<std::pair<ElemPtr, ElemPtr>> graph) {
  return std::make_shared<Element>(Element{Table{std::move(graph)}});
}

bool elem_equal(const ElemPtr& a, const ElemPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Atom& x) { return x.tag == std::get<Atom>(b->node).tag; },
          [&](const Tuple& x) {
            const auto& y = std::get<Tuple>(b->node);
            return elem_equal(x.first, y.first) && elem_equal(x.second, y.second);
          },
          [&](const Table& x) {
            const auto& y = std::get<Table>(b->node);
            if (x.graph.size() != y.graph.size()) return false;
            for (std::size_t i = 0; i < x.graph.size(); ++i) {
              if (!elem_equal(x.graph[i].first, y.graph[i].first)) return false;
              if (!elem_equal(x.graph[i].second, y.graph[i].second)) return false;
            }
            return true;
          },
      },
      a->node);
}

std::string show(const ElemPtr& e) {
  return std::visit(
      overloaded{
          [](const Atom& x) { return x.tag; },
          [](const Tuple& x) { return "(" + show(x.first) + ", " + show(x.second) + ")"; },
          [](const Table& x) {
            std::string out = "{";
            for (std::size_t i = 0; i < x.graph.size(); ++i) {
              if (i) out += ", ";
              out += show(x.graph[i].first) + " -> " + show(x.graph[i].second);
            }
            return out + "}";
          },
      },
      e->node);
}

namespace {

std::size_t cardinality(const stlc::TypePtr& ty, std::size_t bound) {
  auto checked_mul = [&](std::size_t a, std::size_t b) {
    if (a != 0 && b > bound / a)
      throw Error(Error::Category::Fuel, "SizeOverflow",
                  "interpretation of " + stlc::show(ty) + " exceeds the cardinality bound");
    return a * b;
  };
  std::size_t card = std::visit(
      overloaded{
          [](const TAns&) -> std::size_t { return 2; },
          [](const TUnit&) -> std::size_t { return 1; },
          [&](const TProd& p) {
            return checked_mul(cardinality(p.left, bound), cardinality(p.right, bound));
          },
          [&](const TFun& p) {
            std::size_t d = cardinality(p.dom, bound);
            std::size_t c = cardinality(p.cod, bound);
            std::size_t total = 1;
            for (std::size_t i = 0; i < d; ++i) total = checked_mul(total, c);
            return total;
          },
      },
      ty->node);
  if (card > bound)
    throw Error(Error::Category::Fuel, "SizeOverflow",
                "interpretation of " + stlc::show(ty) + " exceeds the cardinality bound");
  return card;
}

ElemPtr table_lookup(const Table& t, const ElemPtr& key) {
  for (const auto& row : t.graph)
    if (elem_equal(row.first, key)) return row.second;
  throw internal_error("function table has no row for its argument");
}

}  // namespace

FinSet interp_ty(const stlc::TypePtr& ty, std::size_t max_cardinality) {
  cardinality(ty, max_cardinality);
  return std::visit(
      overloaded{
          [](const TAns&) { return FinSet{{atom("t"), atom("f")}}; },
          [](const TUnit&) { return FinSet{{atom("nil")}}; },
          [&](const TProd& p) {
            FinSet left = interp_ty(p.left, max_cardinality);
            FinSet right = interp_ty(p.right, max_cardinality);
            FinSet out;
            for (const ElemPtr& a : left.elements)
              for (const ElemPtr& b : right.elements) out.elements.push_back(tuple(a, b));
            return out;
          },
          [&](const TFun& p) {
            FinSet dom = interp_ty(p.dom, max_cardinality);
            FinSet cod = interp_ty(p.cod, max_cardinality);
            FinSet out;
            // Odometer over one codomain choice per domain element.
            std::vector<std::size_t> pick(dom.elements.size(), 0);
            for (;;) {
              std::vector<std::pair<ElemPtr, ElemPtr>> graph;
              graph.reserve(dom.elements.size());
              for (std::size_t i = 0; i < dom.elements.size(); ++i)
                graph.emplace_back(dom.elements[i], cod.elements[pick[i]]);
              out.elements.push_back(table(std::move(graph)));
              std::size_t k = 0;
              while (k < pick.size() && ++pick[k] == cod.elements.size()) pick[k++] = 0;
              if (k == pick.size()) break;
            }
            return out;
          },
      },
      ty->node);
}

ElemPtr interp_tm(const stlc::Context& ctx, const std::vector<ElemPtr>& env,
                  const stlc::TermPtr& t, std::size_t max_cardinality) {
  return std::visit(
      overloaded{
          [&](const stlc::Var& v) -> ElemPtr {
            if (v.index >= env.size())
              throw internal_error("environment does not cover the variable");
            return env[env.size() - 1 - v.index];
          },
          [&](const stlc::Yes&) { return atom("t"); },
          [&](const stlc::No&) { return atom("f"); },
          [&](const stlc::Star&) { return atom("nil"); },
          [&](const stlc::Pair& p) {
            return tuple(interp_tm(ctx, env, p.first, max_cardinality),
                         interp_tm(ctx, env, p.second, max_cardinality));
          },
          [&](const stlc::Fst& p) -> ElemPtr {
            ElemPtr e = interp_tm(ctx, env, p.pair, max_cardinality);
            const auto* tu = std::get_if<Tuple>(&e->node);
            if (!tu) throw internal_error("fst of a non-tuple element");
            return tu->first;
          },
          [&](const stlc::Snd& p) -> ElemPtr {
            ElemPtr e = interp_tm(ctx, env, p.pair, max_cardinality);
            const auto* tu = std::get_if<Tuple>(&e->node);
            if (!tu) throw internal_error("snd of a non-tuple element");
            return tu->second;
          },
          [&](const stlc::Lam& p) {
            FinSet dom = interp_ty(p.ann, max_cardinality);
            stlc::Context extended = ctx;
            extended.push_back(p.ann);
            std::vector<std::pair<ElemPtr, ElemPtr>> graph;
            graph.reserve(dom.elements.size());
            for (const ElemPtr& u : dom.elements) {
              std::vector<ElemPtr> inner = env;
              inner.push_back(u);
              graph.emplace_back(u, interp_tm(extended, inner, p.body, max_cardinality));
            }
            return table(std::move(graph));
          },
          [&](const stlc::App& p) -> ElemPtr {
            ElemPtr f = interp_tm(ctx, env, p.fn, max_cardinality);
            ElemPtr a = interp_tm(ctx, env, p.arg, max_cardinality);
            const auto* tb = std::get_if<Table>(&f->node);
            if (!tb) throw internal_error("application of a non-table element");
            return table_lookup(*tb, a);
          },
      },
      t->node);
}

bool consistency_check() {
  ElemPtr y = interp_tm({}, {}, stlc::yes());
  ElemPtr n = interp_tm({}, {}, stlc::no());
  return !elem_equal(y, n);
}

}  // namespace tt::set_model
