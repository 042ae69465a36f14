// acceptance.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.
//
// End-to-end property suite.  Each criterion prints one pass/fail line and
// enforces its own wall-clock budget; the process exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_golden.hpp"
#include "helpers.hpp"
#include "tt/front/parse.hpp"
#include "tt/front/pretty.hpp"
#include "tt/mltt/kernel.hpp"
#include "tt/set_model/model.hpp"
#include "tt/stlc/nbe.hpp"
#include "tt/stlc/oracle.hpp"
#include "tt/sysf/systemf.hpp"

namespace {

using namespace tt;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// ---------------------------------------------------------------------------
// 1. Consistency: yes and no are distinguished by the set model, the
//    rewriting oracle, and normalization.
// ---------------------------------------------------------------------------
std::string criterion_consistency() {
  require(set_model::consistency_check(), "set model identifies yes and no");
  require(!stlc::oracle_equal({}, stlc::yes(), stlc::no()),
          "rewriting oracle equates yes and no");
  require(!stlc::nf_equal(stlc::normalize({}, stlc::yes()), stlc::normalize({}, stlc::no())),
          "normalization equates yes and no");
  return "model, oracle, and normalizer all separate yes from no";
}

// ---------------------------------------------------------------------------
// 2. STLC canonicity sweep: every closed well-typed term of Ans with at most
//    7 nodes normalizes to yes or no, with zero errors.
// ---------------------------------------------------------------------------
std::string criterion_stlc_canonicity() {
  std::vector<stlc::TermPtr> population = stlc::enumerate_terms({}, stlc::ans(), 7);
  require(population.size() >= 100, "population unexpectedly small");
  std::size_t yes_count = 0;
  for (const stlc::TermPtr& t : population) {
    stlc::Canonicity c = stlc::canonicity(t);  // throws on any failure
    if (c == stlc::Canonicity::IsYes) ++yes_count;
  }
  std::ostringstream detail;
  detail << population.size() << " closed Ans terms of size <= 7; " << yes_count
         << " yes, " << population.size() - yes_count << " no, zero errors";
  return detail.str();
}

// ---------------------------------------------------------------------------
// 3. Normalization soundness and completeness against the rewriting oracle,
//    plus the fixpoint property, over all pairs at sizes <= 4.
// ---------------------------------------------------------------------------
std::string criterion_normalization_agreement() {
  std::vector<stlc::TypePtr> types = {
      stlc::ans(), stlc::unit(), stlc::prod(stlc::ans(), stlc::ans()),
      stlc::fun(stlc::ans(), stlc::ans()),
      stlc::fun(stlc::fun(stlc::ans(), stlc::ans()), stlc::ans())};
  std::size_t pairs = 0;
  for (const stlc::TypePtr& ty : types) {
    std::vector<stlc::TermPtr> sample = stlc::enumerate_terms({}, ty, 4);
    std::vector<stlc::NfPtr> normals;
    normals.reserve(sample.size());
    for (const stlc::TermPtr& t : sample) {
      stlc::NfPtr nf = stlc::normalize({}, t);
      require(stlc::nf_equal(stlc::normalize({}, stlc::embed_nf(nf, 0)), nf),
              "normal form is not a fixpoint: " + front::pretty(t));
      normals.push_back(nf);
    }
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = 0; j < sample.size(); ++j) {
        ++pairs;
        bool oracle = stlc::oracle_equal({}, sample[i], sample[j]);
        bool nbe = stlc::nf_equal(normals[i], normals[j]);
        require(oracle == nbe, "oracle and normalizer disagree on " +
                                   front::pretty(sample[i]) + " vs " +
                                   front::pretty(sample[j]));
      }
  }
  std::ostringstream detail;
  detail << pairs << " pairs across 5 types; zero discrepancies";
  return detail.str();
}

// ---------------------------------------------------------------------------
// 4. Renaming stability: normalize . rename = rename_nf . normalize on 10^4
//    randomized (term, renaming) pairs.
// ---------------------------------------------------------------------------
std::string criterion_renaming_stability() {
  std::mt19937 rng(20260810);
  for (int i = 0; i < 10000; ++i) {
    stlc::Context ctx;
    int n = static_cast<int>(rng() % 3) + 1;
    for (int k = 0; k < n; ++k) ctx.push_back(tt::test::random_type(rng, 1));
    stlc::TypePtr ty = tt::test::random_type(rng, 2);
    stlc::TermPtr t = tt::test::random_term(ctx, ty, rng, 7);

    auto setup = tt::test::random_renaming(ctx, rng);
    stlc::NfPtr lhs = stlc::normalize(setup.target, stlc::rename(t, setup.renaming));
    stlc::NfPtr rhs = stlc::rename_nf(stlc::normalize(ctx, t), setup.renaming, ctx.size());
    require(stlc::nf_equal(lhs, rhs), "instability at " + front::pretty(t));
  }
  return "10000 randomized (term, renaming) pairs; zero failures";
}

// ---------------------------------------------------------------------------
// 5. Set-model soundness over the size-<=4 enumeration, plus the pinned
//    converse-failure witness.
// ---------------------------------------------------------------------------
std::string criterion_set_model() {
  std::size_t checked = 0;
  for (const stlc::TypePtr& ty :
       {stlc::ans(), stlc::unit(), stlc::prod(stlc::ans(), stlc::ans()),
        stlc::fun(stlc::ans(), stlc::ans()),
        stlc::fun(stlc::fun(stlc::ans(), stlc::ans()), stlc::ans())}) {
    std::vector<stlc::TermPtr> sample = stlc::enumerate_terms({}, ty, 4);
    std::vector<set_model::ElemPtr> denotations;
    for (const stlc::TermPtr& t : sample)
      denotations.push_back(set_model::interp_tm({}, {}, t));
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = 0; j < sample.size(); ++j)
        if (stlc::oracle_equal({}, sample[i], sample[j])) {
          ++checked;
          require(set_model::elem_equal(denotations[i], denotations[j]),
                  "equal terms with distinct denotations: " + front::pretty(sample[i]));
        }
  }

  // Witness that the converse fails: f (f (f x)) vs f x.
  stlc::Context ctx = {stlc::fun(stlc::ans(), stlc::ans()), stlc::ans()};
  stlc::TermPtr small = stlc::app(stlc::var(1), stlc::var(0));
  stlc::TermPtr large =
      stlc::app(stlc::var(1), stlc::app(stlc::var(1), stlc::app(stlc::var(1), stlc::var(0))));
  require(!stlc::nf_equal(stlc::normalize(ctx, small), stlc::normalize(ctx, large)),
          "witness normal forms coincide");
  set_model::FinSet fs = set_model::interp_ty(stlc::fun(stlc::ans(), stlc::ans()));
  set_model::FinSet xs = set_model::interp_ty(stlc::ans());
  for (const set_model::ElemPtr& f : fs.elements)
    for (const set_model::ElemPtr& x : xs.elements)
      require(set_model::elem_equal(set_model::interp_tm(ctx, {f, x}, small),
                                    set_model::interp_tm(ctx, {f, x}, large)),
              "witness denotations differ");
  std::ostringstream detail;
  detail << checked << " oracle-equal pairs have equal denotations; witness pinned";
  return detail.str();
}

// ---------------------------------------------------------------------------
// 6. MLTT universe equations and the dependent canonicity sweep.
// ---------------------------------------------------------------------------
std::string criterion_mltt() {
  using namespace mltt;
  // el(ans) = Ans.
  Ctx ctx;
  require(convert_ty(ctx, d_eval({}, el(code_ans()), 0), vans()), "el(ans) is not Ans");

  // el(pi(A, B)) = Pi(el A, el . B) and the sigma analogue over generated
  // codes of depth <= 2 (constant families).
  std::vector<TermPtr> codes = {code_ans()};
  for (int depth = 0; depth < 2; ++depth) {
    std::size_t end = codes.size();
    for (std::size_t i = 0; i < end; ++i)
      for (std::size_t j = 0; j < end; ++j) {
        codes.push_back(code_pi(codes[i], lam(shift(codes[j], 1))));
        codes.push_back(code_sigma(codes[i], lam(shift(codes[j], 1))));
      }
    if (codes.size() > 60) break;
  }
  std::size_t equations = 0;
  for (const TermPtr& a : codes)
    for (const TermPtr& b : codes) {
      if (equations >= 800) break;
      TermPtr family = lam(shift(b, 1));
      require(convert_ty(ctx, d_eval({}, el(code_pi(a, family)), 0),
                         d_eval({}, pi(el(a), el(app(shift(family, 1), var(0)))), 0)),
              "el(pi(A, B)) mismatch");
      require(convert_ty(ctx, d_eval({}, el(code_sigma(a, family)), 0),
                         d_eval({}, sigma(el(a), el(app(shift(family, 1), var(0)))), 0)),
              "el(sigma(A, B)) mismatch");
      equations += 2;
    }

  // Dependent canonicity sweep at size <= 7 for both Ans and El ans.
  std::size_t population = 0;
  std::size_t yes_count = 0;
  for (const TermPtr& target : {ans_ty(), el(code_ans())}) {
    for (const TermPtr& t : enumerate_checked(target, 7)) {
      ++population;
      Canonicity c = d_canonicity(t);
      if (c == Canonicity::IsYes) ++yes_count;
    }
  }
  require(population >= 40, "dependent population unexpectedly small");
  std::ostringstream detail;
  detail << equations << " universe equations; " << population
         << " dependent canonicity verdicts (" << yes_count << " yes)";
  return detail.str();
}

// ---------------------------------------------------------------------------
// 7. System F: the identity theorem at desk scale.
// ---------------------------------------------------------------------------
std::string criterion_sysf() {
  using namespace sysf;
  TermPtr id = front::parse_sysf_term("/\\X. \\x:X. x");
  TypePtr id_ty = front::parse_sysf_type("forall X. X -> X");
  TypePtr t_ty = front::parse_sysf_type("forall Y. Y -> Y");
  TypePtr nat = front::parse_sysf_type("forall X. (X -> X) -> X -> X");

  std::vector<TermPtr> inhabitants = enumerate_normal_inhabitants(id_ty, 6);
  require(inhabitants.size() == 1 && term_equal(inhabitants[0], id),
          "forall X. X -> X has unexpected inhabitants");
  require(term_equal(f_normalize(inhabitants[0]), id), "inhabitant does not normalize to id");

  Instantiation inst;
  inst.instance = RelInstance{t_ty, t_ty, {{id, id}}};
  require(free_theorem_check(id, id_ty, {inst}).pass, "identity free theorem fails");

  TermPtr two = front::parse_sysf_term("/\\X. \\f:X -> X. \\x:X. f (f x)");
  Instantiation nat_inst;
  nat_inst.instance = RelInstance{t_ty, t_ty, {{id, id}}};
  FnCandidates fns;
  fns.domain = fun(tvar(0), tvar(0));
  fns.pairs = {{lam(t_ty, var(0)), lam(t_ty, var(0))}};
  nat_inst.fn_candidates = {fns};
  require(free_theorem_check(two, nat, {nat_inst}).pass, "Church two free theorem fails");

  // The documented negative example: the constant function breaks (c0, c1).
  TermPtr zero = front::parse_sysf_term("/\\X. \\f:X -> X. \\x:X. x");
  TermPtr one = front::parse_sysf_term("/\\X. \\f:X -> X. \\x:X. f x");
  RelEnv env;
  env.instances.push_back(RelInstance{nat, nat, {{zero, one}}});
  require(!rel_member(fun(tvar(0), tvar(0)), env, lam(nat, var(0)), lam(nat, zero)),
          "negative rel_member example passes");
  return "identity enumeration, both free-theorem checks, and the negative case agree";
}

// ---------------------------------------------------------------------------
// 8. CLI contract: golden text and JSON outputs with exit codes.
// ---------------------------------------------------------------------------
std::string criterion_cli() {
  for (const tt::test::GoldenCase& c : tt::test::golden_cases()) {
    tt::test::CliResult r = tt::test::run_cli(c.args);
    require(r.exit_code == c.expected_exit, c.name + ": exit code " +
                                                std::to_string(r.exit_code) + " != " +
                                                std::to_string(c.expected_exit));
    require(r.out == tt::test::read_golden(c.name), c.name + ": output mismatch");
  }
  return "14 golden cases (text and JSON per subcommand) match byte for byte";
}

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "consistency", 1.0, criterion_consistency},
      {2, "stlc canonicity sweep", 30.0, criterion_stlc_canonicity},
      {3, "normalization soundness/completeness", 120.0, criterion_normalization_agreement},
      {4, "renaming stability", 30.0, criterion_renaming_stability},
      {5, "set-model soundness", 60.0, criterion_set_model},
      {6, "mltt universe equations + dependent canonicity", 60.0, criterion_mltt},
      {7, "system F identity theorem", 30.0, criterion_sysf},
      {8, "cli contract", 5.0, criterion_cli},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > c.budget_seconds) {
      ok = false;
      detail = "exceeded budget of " + std::to_string(c.budget_seconds) + "s";
    }
    std::printf("[%d/8] %-48s %s (%.2fs) %s\n", c.number, c.name.c_str(),
                ok ? "PASS" : "FAIL", elapsed, detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failures);
  return 1;
}
