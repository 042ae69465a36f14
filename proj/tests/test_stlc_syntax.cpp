// test_stlc_syntax.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include "helpers.hpp"

using namespace tt;
using namespace tt::stlc;
using tt::test::P;
using tt::test::PT;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("infer on the basic forms") {
  CHECK(type_equal(infer({}, P("yes")), ans()));
  CHECK(type_equal(infer({}, P("\\x:Ans. x")), fun(ans(), ans())));
  CHECK(type_equal(infer({prod(ans(), unit())}, snd(var(0))), unit()));
  CHECK(kind_of([] { infer({}, P("fst yes")); }) == "NotAProduct");
}

TEST_CASE("infer error kinds") {
  CHECK(kind_of([] { infer({}, var(3)); }) == "UnboundVariable");
  CHECK(kind_of([] { infer({}, P("yes no")); }) == "NotAFunction");
  CHECK(kind_of([] { infer({}, P("(\\x:Ans. x) ()")); }) == "ArgumentMismatch");
}

TEST_CASE("rename shifts free variables only") {
  Renaming weaken1 = Renaming::weaken(1);
  CHECK(term_equal(rename(var(0), weaken1), var(1)));
  CHECK(term_equal(rename(lam(ans(), var(0)), weaken1), lam(ans(), var(0))));
  Renaming weaken2 = Renaming::weaken(2);
  CHECK(term_equal(rename(lam(ans(), var(1)), weaken2), lam(ans(), var(2))));
}

TEST_CASE("rename rejects malformed renamings") {
  Renaming bad;
  bad.target_length = 1;
  bad.mapping = {7};
  CHECK(kind_of([&] { rename(var(0), bad); }) == "IndexOutOfRange");
  CHECK(kind_of([] {
          Substitution empty;
          subst(var(0), empty);
        }) == "IndexOutOfRange");
}

TEST_CASE("subst looks up, lifts, and does not reduce") {
  Substitution s;
  s.entries = {P("yes")};
  CHECK(term_equal(subst(var(0), s), P("yes")));
  CHECK(term_equal(subst(lam(ans(), var(1)), s), lam(ans(), P("yes"))));
  Substitution sp;
  sp.entries = {P("(yes, no)")};
  CHECK(term_equal(subst(fst(var(0)), sp), P("fst (yes, no)")));
}

TEST_CASE("renaming functoriality, identity, and type preservation") {
  std::mt19937 rng(1001);
  for (int i = 0; i < 200; ++i) {
    Context ctx;
    int n = static_cast<int>(rng() % 3) + 1;
    for (int k = 0; k < n; ++k) ctx.push_back(tt::test::random_type(rng, 1));
    TypePtr ty = tt::test::random_type(rng, 1);
    TermPtr t = tt::test::random_term(ctx, ty, rng, 6);

    CHECK(term_equal(rename(t, Renaming::identity(ctx.size())), t));

    auto first = tt::test::random_renaming(ctx, rng);
    auto second = tt::test::random_renaming(first.target, rng);
    TermPtr two_steps = rename(rename(t, first.renaming), second.renaming);
    TermPtr composed = rename(t, Renaming::compose(second.renaming, first.renaming));
    CHECK(term_equal(two_steps, composed));

    CHECK(type_equal(infer(first.target, rename(t, first.renaming)), infer(ctx, t)));
  }
}

TEST_CASE("substitution laws and type preservation") {
  std::mt19937 rng(1002);
  for (int i = 0; i < 200; ++i) {
    Context ctx;
    int n = static_cast<int>(rng() % 3) + 1;
    for (int k = 0; k < n; ++k) ctx.push_back(tt::test::random_type(rng, 1));
    TypePtr ty = tt::test::random_type(rng, 1);
    TermPtr t = tt::test::random_term(ctx, ty, rng, 6);

    CHECK(term_equal(subst(t, Substitution::identity(ctx)), t));

    Context mid, target;
    for (int k = 0; k < 2; ++k) mid.push_back(tt::test::random_type(rng, 1));
    for (int k = 0; k < 2; ++k) target.push_back(tt::test::random_type(rng, 1));
    Substitution sub1, sub2;
    sub1.target = mid;
    for (std::size_t k = 0; k < ctx.size(); ++k)
      sub1.entries.push_back(tt::test::random_term(mid, ctx[ctx.size() - 1 - k], rng, 4));
    sub2.target = target;
    for (std::size_t k = 0; k < mid.size(); ++k)
      sub2.entries.push_back(tt::test::random_term(target, mid[mid.size() - 1 - k], rng, 4));

    Substitution composed;
    composed.target = target;
    for (const TermPtr& entry : sub1.entries) composed.entries.push_back(subst(entry, sub2));
    CHECK(term_equal(subst(subst(t, sub1), sub2), subst(t, composed)));

    CHECK(type_equal(infer(target, subst(subst(t, sub1), sub2)), infer(ctx, t)));
  }
}

TEST_CASE("infer is deterministic") {
  TermPtr t = P("(\\x:Ans * Unit. (snd x, fst x)) (yes, ())");
  CHECK(type_equal(infer({}, t), infer({}, t)));
}

TEST_CASE("well_scoped checks the ambient context length") {
  CHECK(well_scoped(P("\\x:Ans. x"), 0));
  CHECK(!well_scoped(var(0), 0));
  CHECK(well_scoped(var(0), 1));
  CHECK(!well_scoped(lam(ans(), var(2)), 1));
  CHECK(free_var_bound(lam(ans(), var(2))) == 2);
}
