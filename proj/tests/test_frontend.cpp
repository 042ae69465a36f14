// test_frontend.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include "helpers.hpp"
#include "tt/front/relfile.hpp"
#include "tt/mltt/kernel.hpp"
#include "tt/sysf/systemf.hpp"

using namespace tt;
using namespace tt::front;

TEST_CASE("parsing stlc terms") {
  CHECK(stlc::term_equal(parse_stlc_term("\\x:Ans. x"), stlc::lam(stlc::ans(), stlc::var(0))));
  CHECK(stlc::term_equal(parse_stlc_term("fst (yes, no)"),
                         stlc::fst(stlc::pair(stlc::yes(), stlc::no()))));
  CHECK(stlc::term_equal(parse_stlc_term("\\f:Ans->Ans. f (f yes)"),
                         stlc::lam(stlc::fun(stlc::ans(), stlc::ans()),
                                   stlc::app(stlc::var(0), stlc::app(stlc::var(0), stlc::yes())))));
  CHECK(stlc::type_equal(parse_stlc_type("Ans * Unit -> Ans"),
                         stlc::fun(stlc::prod(stlc::ans(), stlc::unit()), stlc::ans())));
}

TEST_CASE("parse errors carry spans") {
  try {
    parse_stlc_term("\\x:. x");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.kind() == "ParseError");
    CHECK(e.span().start == 3);  // the '.' right after ':'
    CHECK(e.span().line == 1);
    CHECK(e.span().col == 4);
  }
  try {
    parse_stlc_term("yes q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.kind() == "UnboundName");
    CHECK(e.span().start == 4);
  }
  try {
    parse_stlc_term("fst\nfst ??");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
  }
}

TEST_CASE("parsing mltt terms") {
  using namespace mltt;
  CHECK(term_equal(parse_mltt_term("(A:U) -> El A -> El A"),
                   pi(u_ty(), pi(el(var(0)), el(var(1))))));
  CHECK(term_equal(parse_mltt_term("(A:U) * El A"), sigma(u_ty(), el(var(0)))));
  CHECK(term_equal(parse_mltt_term("\\A x. x"), lam(lam(var(0)))));
  CHECK(term_equal(parse_mltt_term("pi ans (\\y. ans)"),
                   code_pi(code_ans(), lam(code_ans()))));
  CHECK(term_equal(parse_mltt_term("yes : El ans"), ascribe(yes(), el(code_ans()))));
  // Annotated lambda: the annotation is erased.
  CHECK(term_equal(parse_mltt_term("\\x:Ans. x"), lam(var(0))));
}

TEST_CASE("parsing sysf terms and types") {
  using namespace sysf;
  CHECK(term_equal(parse_sysf_term("/\\X. \\x:X. x"), tylam(lam(tvar(0), var(0)))));
  CHECK(type_equal(parse_sysf_type("forall X. X -> X"), forall(fun(tvar(0), tvar(0)))));
  CHECK(term_equal(parse_sysf_term("(/\\X. \\x:X. x) [forall Y. Y -> Y]"),
                   tyapp(tylam(lam(tvar(0), var(0))), forall(fun(tvar(0), tvar(0))))));
}

TEST_CASE("pretty prints the documented shapes") {
  CHECK(pretty(stlc::lam(stlc::ans(), stlc::var(0))) == "\\x:Ans. x");
  CHECK(pretty(stlc::pair(stlc::yes(), stlc::no())) == "(yes, no)");
  CHECK(pretty(stlc::fun(stlc::prod(stlc::ans(), stlc::ans()), stlc::unit())) ==
        "Ans * Ans -> Unit");
  CHECK(pretty(stlc::fun(stlc::fun(stlc::ans(), stlc::ans()), stlc::ans())) ==
        "(Ans -> Ans) -> Ans");
}

TEST_CASE("parse of pretty is the identity on stlc outputs") {
  std::mt19937 rng(4001);
  for (int i = 0; i < 300; ++i) {
    stlc::TypePtr ty = tt::test::random_type(rng, 2);
    stlc::TermPtr t = tt::test::random_term({}, ty, rng, 7);
    stlc::TermPtr reparsed = parse_stlc_term(pretty(t));
    CHECK(stlc::term_equal(reparsed, t));
    // And on kernel-produced normal forms.
    stlc::TermPtr nf = stlc::embed_nf(stlc::normalize({}, t), 0);
    CHECK(stlc::term_equal(parse_stlc_term(pretty(nf)), nf));
  }
}

TEST_CASE("parse of pretty is the identity on mltt normal forms") {
  mltt::Ctx ctx;
  for (const mltt::TermPtr& t : mltt::enumerate_checked(mltt::ans_ty(), 5)) {
    mltt::NfPtr nf = mltt::d_normalize(ctx, t, mltt::ans_ty());
    mltt::TermPtr embedded = mltt::embed_nf(nf, 0);
    CHECK(mltt::term_equal(parse_mltt_term(pretty(embedded)), embedded));
  }
  // Types with dependency round-trip too.
  for (const char* src : {"(A:U) -> El A -> El A", "(A:U) * El A", "U -> U", "Ans",
                          "El (pi ans (\\y. ans))", "(f:(x:Ans) -> Ans) -> Ans"}) {
    mltt::TermPtr t = parse_mltt_term(src);
    CHECK(mltt::term_equal(parse_mltt_term(pretty(t)), t));
  }
}

TEST_CASE("parse of pretty is the identity on sysf terms") {
  for (const char* src :
       {"/\\X. \\x:X. x", "/\\X. \\f:X -> X. \\x:X. f (f x)",
        "\\n:forall X. (X -> X) -> X -> X. /\\X. \\f:X -> X. \\x:X. f (n [X] f x)"}) {
    sysf::TermPtr t = parse_sysf_term(src);
    CHECK(sysf::term_equal(parse_sysf_term(pretty(t)), t));
    sysf::TypePtr ty = sysf::f_infer(0, {}, t);
    CHECK(sysf::type_equal(parse_sysf_type(pretty(ty)), ty));
  }
}

TEST_CASE("relation files parse into instantiations") {
  std::string content =
      "# the identity relation on T\n"
      "left: forall Y. Y -> Y\n"
      "right: forall Y. Y -> Y\n"
      "pair: /\\Y. \\y:Y. y | /\\Y. \\y:Y. y\n"
      "fnpair: X -> X | \\x:(forall Y. Y -> Y). x | \\x:(forall Y. Y -> Y). x\n";
  std::vector<sysf::Instantiation> insts = parse_rel_file(content);
  REQUIRE(insts.size() == 1);
  CHECK(sysf::type_equal(insts[0].instance.left_type,
                         parse_sysf_type("forall Y. Y -> Y")));
  REQUIRE(insts[0].instance.pairs.size() == 1);
  REQUIRE(insts[0].fn_candidates.size() == 1);
  CHECK(sysf::type_equal(insts[0].fn_candidates[0].domain,
                         sysf::fun(sysf::tvar(0), sysf::tvar(0))));

  try {
    parse_rel_file("pair: x | y\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.span().line == 1);
  }
}
