// kernel.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/mltt/kernel.hpp"

#include <algorithm>

#include "tt/util.hpp"

namespace tt::mltt {

TermPtr var(std::size_t index) { return std::make_shared<Term>(Term{Var{index}}); }
TermPtr yes() {
  static const TermPtr t = std::make_shared<Term>(Term{Yes{}});
  return t;
}
TermPtr no() {
  static const TermPtr t = std::make_shared<Term>(Term{No{}});
  return t;
}
TermPtr ans_ty() {
  static const TermPtr t = std::make_shared<Term>(Term{Ans{}});
  return t;
}
TermPtr u_ty() {
  static const TermPtr t = std::make_shared<Term>(Term{U{}});
  return t;
}
TermPtr el(TermPtr code) { return std::make_shared<Term>(Term{El{std::move(code)}}); }
TermPtr pi(TermPtr dom, TermPtr cod) {
  return std::make_shared<Term>(Term{Pi{std::move(dom), std::move(cod)}});
}
TermPtr sigma(TermPtr dom, TermPtr cod) {
  return std::make_shared<Term>(Term{Sigma{std::move(dom), std::move(cod)}});
}
TermPtr lam(TermPtr body) { return std::make_shared<Term>(Term{Lam{std::move(body)}}); }
TermPtr app(TermPtr fn, TermPtr arg) {
  return std::make_shared<Term>(Term{App{std::move(fn), std::move(arg)}});
}
TermPtr pair(TermPtr first, TermPtr second) {
  return std::make_shared<Term>(Term{Pair{std::move(first), std::move(second)}});
}
TermPtr fst(TermPtr p) { return std::make_shared<Term>(Term{Fst{std::move(p)}}); }
TermPtr snd(TermPtr p) { return std::make_shared<Term>(Term{Snd{std::move(p)}}); }
TermPtr code_ans() {
  static const TermPtr t = std::make_shared<Term>(Term{CodeAns{}});
  return t;
}
TermPtr code_pi(TermPtr dom, TermPtr family) {
  return std::make_shared<Term>(Term{CodePi{std::move(dom), std::move(family)}});
}
TermPtr code_sigma(TermPtr dom, TermPtr family) {
  return std::make_shared<Term>(Term{CodeSigma{std::move(dom), std::move(family)}});
}
TermPtr ascribe(TermPtr term, TermPtr type) {
  return std::make_shared<Term>(Term{Ascribe{std::move(term), std::move(type)}});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index == as<Var>(b)->index; },
          [&](const Yes&) { return true; },
          [&](const No&) { return true; },
          [&](const Ans&) { return true; },
          [&](const U&) { return true; },
          [&](const El& x) { return term_equal(x.code, as<El>(b)->code); },
          [&](const Pi& x) {
            const auto* y = as<Pi>(b);
            return term_equal(x.dom, y->dom) && term_equal(x.cod, y->cod);
          },
          [&](const Sigma& x) {
            const auto* y = as<Sigma>(b);
            return term_equal(x.dom, y->dom) && term_equal(x.cod, y->cod);
          },
          [&](const Lam& x) { return term_equal(x.body, as<Lam>(b)->body); },
          [&](const App& x) {
            const auto* y = as<App>(b);
            return term_equal(x.fn, y->fn) && term_equal(x.arg, y->arg);
          },
          [&](const Pair& x) {
            const auto* y = as<Pair>(b);
            return term_equal(x.first, y->first) && term_equal(x.second, y->second);
          },
          [&](const Fst& x) { return term_equal(x.pair, as<Fst>(b)->pair); },
          [&](const Snd& x) { return term_equal(x.pair, as<Snd>(b)->pair); },
          [&](const CodeAns&) { return true; },
          [&](const CodePi& x) {
            const auto* y = as<CodePi>(b);
            return term_equal(x.dom, y->dom) && term_equal(x.family, y->family);
          },
          [&](const CodeSigma& x) {
            const auto* y = as<CodeSigma>(b);
            return term_equal(x.dom, y->dom) && term_equal(x.family, y->family);
          },
          [&](const Ascribe& x) {
            const auto* y = as<Ascribe>(b);
            return term_equal(x.term, y->term) && term_equal(x.type, y->type);
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
          [](const Ans&) -> std::size_t { return 1; },
          [](const U&) -> std::size_t { return 1; },
          [](const El& x) { return 1 + term_size(x.code); },
          [](const Pi& x) { return 1 + term_size(x.dom) + term_size(x.cod); },
          [](const Sigma& x) { return 1 + term_size(x.dom) + term_size(x.cod); },
          [](const Lam& x) { return 1 + term_size(x.body); },
          [](const App& x) { return 1 + term_size(x.fn) + term_size(x.arg); },
          [](const Pair& x) { return 1 + term_size(x.first) + term_size(x.second); },
          [](const Fst& x) { return 1 + term_size(x.pair); },
          [](const Snd& x) { return 1 + term_size(x.pair); },
          [](const CodeAns&) -> std::size_t { return 1; },
          [](const CodePi& x) { return 1 + term_size(x.dom) + term_size(x.family); },
          [](const CodeSigma& x) { return 1 + term_size(x.dom) + term_size(x.family); },
          [](const Ascribe& x) { return 1 + term_size(x.term) + term_size(x.type); },
      },
      t->node);
}

namespace {

bool scoped_at(const TermPtr& t, std::size_t depth) {
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index < depth; },
          [&](const Yes&) { return true; },
          [&](const No&) { return true; },
          [&](const Ans&) { return true; },
          [&](const U&) { return true; },
          [&](const El& x) { return scoped_at(x.code, depth); },
          [&](const Pi& x) { return scoped_at(x.dom, depth) && scoped_at(x.cod, depth + 1); },
          [&](const Sigma& x) {
            return scoped_at(x.dom, depth) && scoped_at(x.cod, depth + 1);
          },
          [&](const Lam& x) { return scoped_at(x.body, depth + 1); },
          [&](const App& x) { return scoped_at(x.fn, depth) && scoped_at(x.arg, depth); },
          [&](const Pair& x) {
            return scoped_at(x.first, depth) && scoped_at(x.second, depth);
          },
          [&](const Fst& x) { return scoped_at(x.pair, depth); },
          [&](const Snd& x) { return scoped_at(x.pair, depth); },
          [&](const CodeAns&) { return true; },
          [&](const CodePi& x) {
            return scoped_at(x.dom, depth) && scoped_at(x.family, depth);
          },
          [&](const CodeSigma& x) {
            return scoped_at(x.dom, depth) && scoped_at(x.family, depth);
          },
          [&](const Ascribe& x) {
            return scoped_at(x.term, depth) && scoped_at(x.type, depth);
          },
      },
      t->node);
}

}  // namespace

bool well_scoped(const TermPtr& t, std::size_t ctx_len) { return scoped_at(t, ctx_len); }

TermPtr shift(const TermPtr& t, std::size_t delta, std::size_t cutoff) {
  if (delta == 0) return t;
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index >= cutoff ? var(v.index + delta) : t; },
          [&](const Yes&) { return t; },
          [&](const No&) { return t; },
          [&](const Ans&) { return t; },
          [&](const U&) { return t; },
          [&](const El& x) { return el(shift(x.code, delta, cutoff)); },
          [&](const Pi& x) {
            return pi(shift(x.dom, delta, cutoff), shift(x.cod, delta, cutoff + 1));
          },
          [&](const Sigma& x) {
            return sigma(shift(x.dom, delta, cutoff), shift(x.cod, delta, cutoff + 1));
          },
          [&](const Lam& x) { return lam(shift(x.body, delta, cutoff + 1)); },
          [&](const App& x) {
            return app(shift(x.fn, delta, cutoff), shift(x.arg, delta, cutoff));
          },
          [&](const Pair& x) {
            return pair(shift(x.first, delta, cutoff), shift(x.second, delta, cutoff));
          },
          [&](const Fst& x) { return fst(shift(x.pair, delta, cutoff)); },
          [&](const Snd& x) { return snd(shift(x.pair, delta, cutoff)); },
          [&](const CodeAns&) { return t; },
          [&](const CodePi& x) {
            return code_pi(shift(x.dom, delta, cutoff), shift(x.family, delta, cutoff));
          },
          [&](const CodeSigma& x) {
            return code_sigma(shift(x.dom, delta, cutoff), shift(x.family, delta, cutoff));
          },
          [&](const Ascribe& x) {
            return ascribe(shift(x.term, delta, cutoff), shift(x.type, delta, cutoff));
          },
      },
      t->node);
}

std::string show(const TermPtr& t) {
  return std::visit(
      overloaded{
          [](const Var& v) { return "x" + std::to_string(v.index); },
          [](const Yes&) { return std::string("yes"); },
          [](const No&) { return std::string("no"); },
          [](const Ans&) { return std::string("Ans"); },
          [](const U&) { return std::string("U"); },
          [](const El& x) { return "El " + show(x.code); },
          [](const Pi& x) { return "(pi-ty " + show(x.dom) + ". " + show(x.cod) + ")"; },
          [](const Sigma& x) {
            return "(sigma-ty " + show(x.dom) + ". " + show(x.cod) + ")";
          },
          [](const Lam& x) { return "(\\. " + show(x.body) + ")"; },
          [](const App& x) { return "(" + show(x.fn) + " " + show(x.arg) + ")"; },
          [](const Pair& x) { return "(" + show(x.first) + ", " + show(x.second) + ")"; },
          [](const Fst& x) { return "fst " + show(x.pair); },
          [](const Snd& x) { return "snd " + show(x.pair); },
          [](const CodeAns&) { return std::string("ans"); },
          [](const CodePi& x) { return "(pi " + show(x.dom) + " " + show(x.family) + ")"; },
          [](const CodeSigma& x) {
            return "(sigma " + show(x.dom) + " " + show(x.family) + ")";
          },
          [](const Ascribe& x) { return "(" + show(x.term) + " : " + show(x.type) + ")"; },
      },
      t->node);
}

ValuePtr vyes() {
  static const ValuePtr v = std::make_shared<Value>(Value{VYes{}});
  return v;
}
ValuePtr vno() {
  static const ValuePtr v = std::make_shared<Value>(Value{VNo{}});
  return v;
}
ValuePtr vans() {
  static const ValuePtr v = std::make_shared<Value>(Value{VAns{}});
  return v;
}
ValuePtr vu() {
  static const ValuePtr v = std::make_shared<Value>(Value{VU{}});
  return v;
}
ValuePtr vpi(ValuePtr dom, Closure cod) {
  return std::make_shared<Value>(Value{VPi{std::move(dom), std::move(cod)}});
}
ValuePtr vsigma(ValuePtr dom, Closure cod) {
  return std::make_shared<Value>(Value{VSigma{std::move(dom), std::move(cod)}});
}
ValuePtr vlam(Closure body) { return std::make_shared<Value>(Value{VLam{std::move(body)}}); }
ValuePtr vpair(ValuePtr first, ValuePtr second) {
  return std::make_shared<Value>(Value{VPair{std::move(first), std::move(second)}});
}
ValuePtr vcode_ans() {
  static const ValuePtr v = std::make_shared<Value>(Value{VCodeAns{}});
  return v;
}
ValuePtr vcode_pi(ValuePtr dom, ValuePtr family) {
  return std::make_shared<Value>(Value{VCodePi{std::move(dom), std::move(family)}});
}
ValuePtr vcode_sigma(ValuePtr dom, ValuePtr family) {
  return std::make_shared<Value>(Value{VCodeSigma{std::move(dom), std::move(family)}});
}
ValuePtr vneutral(ValuePtr type, NePtr spine) {
  return std::make_shared<Value>(Value{VNeutral{std::move(type), std::move(spine)}});
}
ValuePtr vel_neutral(NePtr code) {
  return std::make_shared<Value>(Value{VElNeutral{std::move(code)}});
}

NePtr nvar(std::size_t level) { return std::make_shared<Neutral>(Neutral{NVar{level}}); }
NePtr napp(NePtr fn, NfPtr arg) {
  return std::make_shared<Neutral>(Neutral{NApp{std::move(fn), std::move(arg)}});
}
NePtr nfst(NePtr p) { return std::make_shared<Neutral>(Neutral{NFst{std::move(p)}}); }
NePtr nsnd(NePtr p) { return std::make_shared<Neutral>(Neutral{NSnd{std::move(p)}}); }

NfPtr nf_yes() {
  static const NfPtr n = std::make_shared<Normal>(Normal{NfYes{}});
  return n;
}
NfPtr nf_no() {
  static const NfPtr n = std::make_shared<Normal>(Normal{NfNo{}});
  return n;
}
NfPtr nf_lam(NfPtr body) { return std::make_shared<Normal>(Normal{NfLam{std::move(body)}}); }
NfPtr nf_pair(NfPtr first, NfPtr second) {
  return std::make_shared<Normal>(Normal{NfPair{std::move(first), std::move(second)}});
}
NfPtr nf_code_ans() {
  static const NfPtr n = std::make_shared<Normal>(Normal{NfCodeAns{}});
  return n;
}
NfPtr nf_code_pi(NfPtr dom, NfPtr family) {
  return std::make_shared<Normal>(Normal{NfCodePi{std::move(dom), std::move(family)}});
}
NfPtr nf_code_sigma(NfPtr dom, NfPtr family) {
  return std::make_shared<Normal>(Normal{NfCodeSigma{std::move(dom), std::move(family)}});
}
NfPtr nf_neut_ans(NePtr n) { return std::make_shared<Normal>(Normal{NfNeutAns{std::move(n)}}); }
NfPtr nf_neut_u(NePtr n) { return std::make_shared<Normal>(Normal{NfNeutU{std::move(n)}}); }
NfPtr nf_neut_ne(NePtr n) { return std::make_shared<Normal>(Normal{NfNeutNe{std::move(n)}}); }
NfPtr nf_ans() {
  static const NfPtr n = std::make_shared<Normal>(Normal{NfAns{}});
  return n;
}
NfPtr nf_u() {
  static const NfPtr n = std::make_shared<Normal>(Normal{NfU{}});
  return n;
}
NfPtr nf_pi(NfPtr dom, NfPtr cod) {
  return std::make_shared<Normal>(Normal{NfPi{std::move(dom), std::move(cod)}});
}
NfPtr nf_sigma(NfPtr dom, NfPtr cod) {
  return std::make_shared<Normal>(Normal{NfSigma{std::move(dom), std::move(cod)}});
}
NfPtr nf_el_ne(NePtr code) {
  return std::make_shared<Normal>(Normal{NfElNe{std::move(code)}});
}

bool ne_equal(const NePtr& a, const NePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const NVar& v) { return v.level == as<NVar>(b)->level; },
          [&](const NApp& x) {
            const auto* y = as<NApp>(b);
            return ne_equal(x.fn, y->fn) && nf_equal(x.arg, y->arg);
          },
          [&](const NFst& x) { return ne_equal(x.pair, as<NFst>(b)->pair); },
          [&](const NSnd& x) { return ne_equal(x.pair, as<NSnd>(b)->pair); },
      },
      a->node);
}

bool nf_equal(const NfPtr& a, const NfPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const NfYes&) { return true; },
          [&](const NfNo&) { return true; },
          [&](const NfLam& x) { return nf_equal(x.body, as<NfLam>(b)->body); },
          [&](const NfPair& x) {
            const auto* y = as<NfPair>(b);
            return nf_equal(x.first, y->first) && nf_equal(x.second, y->second);
          },
          [&](const NfCodeAns&) { return true; },
          [&](const NfCodePi& x) {
            const auto* y = as<NfCodePi>(b);
            return nf_equal(x.dom, y->dom) && nf_equal(x.family, y->family);
          },
          [&](const NfCodeSigma& x) {
            const auto* y = as<NfCodeSigma>(b);
            return nf_equal(x.dom, y->dom) && nf_equal(x.family, y->family);
          },
          [&](const NfNeutAns& x) { return ne_equal(x.neutral, as<NfNeutAns>(b)->neutral); },
          [&](const NfNeutU& x) { return ne_equal(x.neutral, as<NfNeutU>(b)->neutral); },
          [&](const NfNeutNe& x) { return ne_equal(x.neutral, as<NfNeutNe>(b)->neutral); },
          [&](const NfAns&) { return true; },
          [&](const NfU&) { return true; },
          [&](const NfPi& x) {
            const auto* y = as<NfPi>(b);
            return nf_equal(x.dom, y->dom) && nf_equal(x.cod, y->cod);
          },
          [&](const NfSigma& x) {
            const auto* y = as<NfSigma>(b);
            return nf_equal(x.dom, y->dom) && nf_equal(x.cod, y->cod);
          },
          [&](const NfElNe& x) { return ne_equal(x.code, as<NfElNe>(b)->code); },
      },
      a->node);
}

TermPtr embed_ne(const NePtr& n, std::size_t ctx_len) {
  return std::visit(
      overloaded{
          [&](const NVar& v) -> TermPtr {
            if (v.level >= ctx_len)
              throw type_error("LevelOutOfRange", "level " + std::to_string(v.level) +
                                                      " does not fit in a context of length " +
                                                      std::to_string(ctx_len));
            return var(ctx_len - 1 - v.level);
          },
          [&](const NApp& x) { return app(embed_ne(x.fn, ctx_len), embed_nf(x.arg, ctx_len)); },
          [&](const NFst& x) { return fst(embed_ne(x.pair, ctx_len)); },
          [&](const NSnd& x) { return snd(embed_ne(x.pair, ctx_len)); },
      },
      n->node);
}

TermPtr embed_nf(const NfPtr& n, std::size_t ctx_len) {
  return std::visit(
      overloaded{
          [&](const NfYes&) { return yes(); },
          [&](const NfNo&) { return no(); },
          [&](const NfLam& x) { return lam(embed_nf(x.body, ctx_len + 1)); },
          [&](const NfPair& x) {
            return pair(embed_nf(x.first, ctx_len), embed_nf(x.second, ctx_len));
          },
          [&](const NfCodeAns&) { return code_ans(); },
          [&](const NfCodePi& x) {
            return code_pi(embed_nf(x.dom, ctx_len), embed_nf(x.family, ctx_len));
          },
          [&](const NfCodeSigma& x) {
            return code_sigma(embed_nf(x.dom, ctx_len), embed_nf(x.family, ctx_len));
          },
          [&](const NfNeutAns& x) { return embed_ne(x.neutral, ctx_len); },
          [&](const NfNeutU& x) { return embed_ne(x.neutral, ctx_len); },
          [&](const NfNeutNe& x) { return embed_ne(x.neutral, ctx_len); },
          [&](const NfAns&) { return ans_ty(); },
          [&](const NfU&) { return u_ty(); },
          [&](const NfPi& x) {
            return pi(embed_nf(x.dom, ctx_len), embed_nf(x.cod, ctx_len + 1));
          },
          [&](const NfSigma& x) {
            return sigma(embed_nf(x.dom, ctx_len), embed_nf(x.cod, ctx_len + 1));
          },
          [&](const NfElNe& x) { return el(embed_ne(x.code, ctx_len)); },
      },
      n->node);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

// Tarski decoding of a code value: el(ans) computes to Ans, el(pi(A, B)) to
// Pi(el(A), el . B), and a neutral code decodes to the neutral type El(u).
ValuePtr decode(const ValuePtr& code);

// A closure computing El(B(x)) for the stored family value B; realizes
// "el . B" without touching syntax of B.
Closure el_compose(const ValuePtr& family) {
  return Closure{{family}, el(app(var(1), var(0)))};
}

ValuePtr decode(const ValuePtr& code) {
  if (as<VCodeAns>(code)) return vans();
  if (const auto* p = as<VCodePi>(code)) return vpi(decode(p->dom), el_compose(p->family));
  if (const auto* p = as<VCodeSigma>(code))
    return vsigma(decode(p->dom), el_compose(p->family));
  if (const auto* n = as<VNeutral>(code)) return vel_neutral(n->spine);
  throw internal_error("El applied to a non-code value");
}

ValuePtr do_fst(const ValuePtr& v) {
  const auto* p = as<VPair>(v);
  if (!p) throw internal_error("fst applied to a non-pair value");
  return p->first;
}

ValuePtr do_snd(const ValuePtr& v) {
  const auto* p = as<VPair>(v);
  if (!p) throw internal_error("snd applied to a non-pair value");
  return p->second;
}

}  // namespace

ValuePtr closure_apply(const Closure& clo, const ValuePtr& arg, std::size_t fresh_level) {
  Env extended = clo.env;
  extended.push_back(arg);
  return d_eval(extended, clo.body, fresh_level);
}

ValuePtr d_apply(const ValuePtr& fn, const ValuePtr& arg, std::size_t fresh_level) {
  if (const auto* f = as<VLam>(fn)) return closure_apply(f->body, arg, fresh_level);
  if (const auto* n = as<VNeutral>(fn)) {
    const auto* ty = as<VPi>(n->type);
    if (!ty) throw internal_error("neutral application at a non-Pi type");
    NfPtr reified = d_reify(ty->dom, arg, fresh_level);
    return d_reflect(closure_apply(ty->cod, arg, fresh_level),
                     napp(n->spine, std::move(reified)), fresh_level);
  }
  throw internal_error("application of a non-function value");
}

ValuePtr d_eval(const Env& env, const TermPtr& t, std::size_t fresh_level) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> ValuePtr {
            if (v.index >= env.size())
              throw internal_error("evaluation met an unbound variable");
            return env[env.size() - 1 - v.index];
          },
          [&](const Yes&) { return vyes(); },
          [&](const No&) { return vno(); },
          [&](const Ans&) { return vans(); },
          [&](const U&) { return vu(); },
          [&](const El& x) { return decode(d_eval(env, x.code, fresh_level)); },
          [&](const Pi& x) {
            return vpi(d_eval(env, x.dom, fresh_level), Closure{env, x.cod});
          },
          [&](const Sigma& x) {
            return vsigma(d_eval(env, x.dom, fresh_level), Closure{env, x.cod});
          },
          [&](const Lam& x) { return vlam(Closure{env, x.body}); },
          [&](const App& x) {
            return d_apply(d_eval(env, x.fn, fresh_level), d_eval(env, x.arg, fresh_level),
                           fresh_level);
          },
          [&](const Pair& x) {
            return vpair(d_eval(env, x.first, fresh_level),
                         d_eval(env, x.second, fresh_level));
          },
          [&](const Fst& x) { return do_fst(d_eval(env, x.pair, fresh_level)); },
          [&](const Snd& x) { return do_snd(d_eval(env, x.pair, fresh_level)); },
          [&](const CodeAns&) { return vcode_ans(); },
          [&](const CodePi& x) {
            return vcode_pi(d_eval(env, x.dom, fresh_level),
                            d_eval(env, x.family, fresh_level));
          },
          [&](const CodeSigma& x) {
            return vcode_sigma(d_eval(env, x.dom, fresh_level),
                               d_eval(env, x.family, fresh_level));
          },
          [&](const Ascribe& x) { return d_eval(env, x.term, fresh_level); },
      },
      t->node);
}

// ---------------------------------------------------------------------------
// Readback
// ---------------------------------------------------------------------------

ValuePtr d_reflect(const ValuePtr& ty, const NePtr& n, std::size_t fresh_level) {
  if (as<VAns>(ty) || as<VU>(ty) || as<VPi>(ty) || std::holds_alternative<VElNeutral>(ty->node))
    return vneutral(ty, n);
  if (const auto* s = as<VSigma>(ty)) {
    ValuePtr first = d_reflect(s->dom, nfst(n), fresh_level);
    ValuePtr second_ty = closure_apply(s->cod, first, fresh_level);
    return vpair(first, d_reflect(second_ty, nsnd(n), fresh_level));
  }
  throw internal_error("reflection at a non-type value");
}

NfPtr d_reify(const ValuePtr& ty, const ValuePtr& v, std::size_t fresh_level) {
  if (as<VAns>(ty)) {
    if (as<VYes>(v)) return nf_yes();
    if (as<VNo>(v)) return nf_no();
    if (const auto* n = as<VNeutral>(v)) return nf_neut_ans(n->spine);
    throw internal_error("value does not inhabit Ans");
  }
  if (as<VU>(ty)) {
    if (as<VCodeAns>(v)) return nf_code_ans();
    if (const auto* c = as<VCodePi>(v)) {
      // The family inhabits El(el dom) -> U.
      ValuePtr family_ty = vpi(decode(c->dom), Closure{{}, u_ty()});
      return nf_code_pi(d_reify(vu(), c->dom, fresh_level),
                        d_reify(family_ty, c->family, fresh_level));
    }
    if (const auto* c = as<VCodeSigma>(v)) {
      ValuePtr family_ty = vpi(decode(c->dom), Closure{{}, u_ty()});
      return nf_code_sigma(d_reify(vu(), c->dom, fresh_level),
                           d_reify(family_ty, c->family, fresh_level));
    }
    if (const auto* n = as<VNeutral>(v)) return nf_neut_u(n->spine);
    throw internal_error("value does not inhabit U");
  }
  if (const auto* p = as<VPi>(ty)) {
    ValuePtr fresh = d_reflect(p->dom, nvar(fresh_level), fresh_level + 1);
    ValuePtr body_ty = closure_apply(p->cod, fresh, fresh_level + 1);
    return nf_lam(d_reify(body_ty, d_apply(v, fresh, fresh_level + 1), fresh_level + 1));
  }
  if (const auto* s = as<VSigma>(ty)) {
    const auto* pr = as<VPair>(v);
    if (!pr) throw internal_error("value does not inhabit a Sigma type");
    ValuePtr second_ty = closure_apply(s->cod, pr->first, fresh_level);
    return nf_pair(d_reify(s->dom, pr->first, fresh_level),
                   d_reify(second_ty, pr->second, fresh_level));
  }
  if (std::holds_alternative<VElNeutral>(ty->node)) {
    if (const auto* n = as<VNeutral>(v)) return nf_neut_ne(n->spine);
    throw internal_error("non-neutral value at a neutral type");
  }
  throw internal_error("reification at a non-type value");
}

NfPtr d_reify_ty(const ValuePtr& ty, std::size_t fresh_level) {
  if (as<VAns>(ty)) return nf_ans();
  if (as<VU>(ty)) return nf_u();
  if (const auto* p = as<VPi>(ty)) {
    ValuePtr fresh = d_reflect(p->dom, nvar(fresh_level), fresh_level + 1);
    return nf_pi(d_reify_ty(p->dom, fresh_level),
                 d_reify_ty(closure_apply(p->cod, fresh, fresh_level + 1), fresh_level + 1));
  }
  if (const auto* s = as<VSigma>(ty)) {
    ValuePtr fresh = d_reflect(s->dom, nvar(fresh_level), fresh_level + 1);
    return nf_sigma(d_reify_ty(s->dom, fresh_level),
                    d_reify_ty(closure_apply(s->cod, fresh, fresh_level + 1), fresh_level + 1));
  }
  if (const auto* n = std::get_if<VElNeutral>(&ty->node)) return nf_el_ne(n->code);
  throw internal_error("reification of a non-type value");
}

// ---------------------------------------------------------------------------
// Contexts and the bidirectional checker
// ---------------------------------------------------------------------------

const ValuePtr& Ctx::type_of(std::size_t index) const {
  if (index >= types_.size())
    throw type_error("UnboundVariable", "unbound variable with index " + std::to_string(index));
  return types_[types_.size() - 1 - index];
}

Ctx Ctx::extended(const ValuePtr& type_value) const {
  Ctx out = *this;
  out.env_.push_back(d_reflect(type_value, nvar(out.types_.size()), out.types_.size() + 1));
  out.types_.push_back(type_value);
  return out;
}

Ctx Ctx::extended_checked(const TermPtr& entry) const {
  return extended(check_type(*this, entry));
}

ValuePtr check_type(const Ctx& ctx, const TermPtr& t) {
  if (as<Ans>(t)) return vans();
  if (as<U>(t)) return vu();
  if (const auto* p = as<Pi>(t)) {
    ValuePtr dom = check_type(ctx, p->dom);
    check_type(ctx.extended(dom), p->cod);
    return d_eval(ctx.env(), t, ctx.size());
  }
  if (const auto* s = as<Sigma>(t)) {
    ValuePtr dom = check_type(ctx, s->dom);
    check_type(ctx.extended(dom), s->cod);
    return d_eval(ctx.env(), t, ctx.size());
  }
  if (const auto* e = as<El>(t)) {
    check(ctx, e->code, vu());
    return d_eval(ctx.env(), t, ctx.size());
  }
  throw type_error("ExpectedU",
                   show(t) + " is not a type; expected Ans, U, Pi, Sigma, or El of a code");
}

bool convert_ty(const Ctx& ctx, const ValuePtr& a, const ValuePtr& b) {
  return nf_equal(d_reify_ty(a, ctx.size()), d_reify_ty(b, ctx.size()));
}

bool convert(const Ctx& ctx, const ValuePtr& ty, const ValuePtr& a, const ValuePtr& b) {
  return nf_equal(d_reify(ty, a, ctx.size()), d_reify(ty, b, ctx.size()));
}

void check(const Ctx& ctx, const TermPtr& t, const ValuePtr& ty) {
  if (const auto* l = as<Lam>(t)) {
    const auto* p = as<VPi>(ty);
    if (!p)
      throw type_error("ExpectedPi", "lambda checked against the non-Pi type " +
                                         show(d_reify_ty(ty, ctx.size()), ctx.size()));
    Ctx extended = ctx.extended(p->dom);
    check(extended, l->body, closure_apply(p->cod, extended.env().back(), extended.size()));
    return;
  }
  if (const auto* pr = as<Pair>(t)) {
    const auto* s = as<VSigma>(ty);
    if (!s)
      throw type_error("ExpectedSigma", "pair checked against the non-Sigma type " +
                                            show(d_reify_ty(ty, ctx.size()), ctx.size()));
    check(ctx, pr->first, s->dom);
    ValuePtr first = d_eval(ctx.env(), pr->first, ctx.size());
    check(ctx, pr->second, closure_apply(s->cod, first, ctx.size()));
    return;
  }
  ValuePtr inferred = infer(ctx, t);
  if (!convert_ty(ctx, inferred, ty))
    throw type_error("ConversionFailure",
                     "expected type " + show(d_reify_ty(ty, ctx.size()), ctx.size()) + ", got " +
                         show(d_reify_ty(inferred, ctx.size()), ctx.size()));
}

ValuePtr infer(const Ctx& ctx, const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> ValuePtr { return ctx.type_of(v.index); },
          [&](const Yes&) -> ValuePtr { return vans(); },
          [&](const No&) -> ValuePtr { return vans(); },
          [&](const CodeAns&) -> ValuePtr { return vu(); },
          [&](const CodePi& x) -> ValuePtr {
            check(ctx, x.dom, vu());
            ValuePtr dom_code = d_eval(ctx.env(), x.dom, ctx.size());
            check(ctx, x.family, vpi(decode(dom_code), Closure{{}, u_ty()}));
            return vu();
          },
          [&](const CodeSigma& x) -> ValuePtr {
            check(ctx, x.dom, vu());
            ValuePtr dom_code = d_eval(ctx.env(), x.dom, ctx.size());
            check(ctx, x.family, vpi(decode(dom_code), Closure{{}, u_ty()}));
            return vu();
          },
          [&](const App& x) -> ValuePtr {
            ValuePtr fty = infer(ctx, x.fn);
            const auto* p = as<VPi>(fty);
            if (!p)
              throw type_error("ExpectedPi", "application head has type " +
                                                 show(d_reify_ty(fty, ctx.size()), ctx.size()));
            check(ctx, x.arg, p->dom);
            return closure_apply(p->cod, d_eval(ctx.env(), x.arg, ctx.size()), ctx.size());
          },
          [&](const Fst& x) -> ValuePtr {
            ValuePtr pty = infer(ctx, x.pair);
            const auto* s = as<VSigma>(pty);
            if (!s)
              throw type_error("ExpectedSigma", "fst applied at type " +
                                                    show(d_reify_ty(pty, ctx.size()), ctx.size()));
            return s->dom;
          },
          [&](const Snd& x) -> ValuePtr {
            ValuePtr pty = infer(ctx, x.pair);
            const auto* s = as<VSigma>(pty);
            if (!s)
              throw type_error("ExpectedSigma", "snd applied at type " +
                                                    show(d_reify_ty(pty, ctx.size()), ctx.size()));
            ValuePtr first = do_fst(d_eval(ctx.env(), x.pair, ctx.size()));
            return closure_apply(s->cod, first, ctx.size());
          },
          [&](const Ascribe& x) -> ValuePtr {
            ValuePtr ty = check_type(ctx, x.type);
            check(ctx, x.term, ty);
            return ty;
          },
          [&](const Lam&) -> ValuePtr {
            throw type_error("CannotInfer",
                             "unannotated lambda needs a checking type or an ascription");
          },
          [&](const Pair&) -> ValuePtr {
            throw type_error("CannotInfer", "pair needs a checking type or an ascription");
          },
          [&](const auto&) -> ValuePtr {
            // Ans, U, Pi, Sigma, El are types, not terms.
            throw type_error("CannotInfer", show(t) + " is a type expression, not a term");
          },
      },
      t->node);
}

NfPtr d_normalize(const Ctx& ctx, const TermPtr& t, const TermPtr& ty) {
  ValuePtr tyv = check_type(ctx, ty);
  check(ctx, t, tyv);
  return d_reify(tyv, d_eval(ctx.env(), t, ctx.size()), ctx.size());
}

Canonicity d_canonicity(const TermPtr& t) {
  if (!well_scoped(t, 0)) throw type_error("NotClosed", "canonicity needs a closed term");
  Ctx ctx;
  try {
    check(ctx, t, vans());
  } catch (const Error& e) {
    if (e.category() == Error::Category::Type)
      throw type_error("NotAns", std::string("term does not check at Ans: ") + e.what());
    throw;
  }
  NfPtr n = d_reify(vans(), d_eval(ctx.env(), t, 0), 0);
  if (as<NfYes>(n)) return Canonicity::IsYes;
  if (as<NfNo>(n)) return Canonicity::IsNo;
  throw internal_error("closed normal form of type Ans is neither yes nor no");
}

std::string show(const NfPtr& n, std::size_t ctx_len) { return show(embed_nf(n, ctx_len)); }

namespace {

// All palette trees with exactly n nodes at binder depth d, memoized; parents
// share subtree nodes, so the total allocation stays small.
//
// Unannotated lambdas and pairs are check-only, so a closed eliminator chain
// can never infer without a type somewhere: the raw palette yields only yes
// and no at Ans.  The generator therefore also emits lambda and pair trees
// ascribed against a fixed family of small types (annotations do not count
// toward the size, matching the simply typed convention).
struct TreeGen {
  std::vector<std::vector<TermPtr>> memo;
  std::vector<bool> ready;
  std::size_t max_size;
  std::vector<TermPtr> fn_types;
  std::vector<TermPtr> pair_types;

  explicit TreeGen(std::size_t max_size) : max_size(max_size) {
    memo.resize((max_size + 1) * (max_size + 2));
    ready.resize(memo.size(), false);
    fn_types = {
        pi(ans_ty(), ans_ty()),
        pi(ans_ty(), pi(ans_ty(), ans_ty())),
        pi(u_ty(), el(var(0))),
        pi(u_ty(), pi(el(var(0)), el(var(1)))),
        pi(pi(ans_ty(), ans_ty()), ans_ty()),
    };
    pair_types = {
        sigma(ans_ty(), ans_ty()),
        sigma(u_ty(), el(var(0))),
    };
  }

  const std::vector<TermPtr>& trees(std::size_t n, std::size_t d) {
    std::size_t key = n * (max_size + 2) + d;
    if (ready[key]) return memo[key];
    std::vector<TermPtr> out;
    if (n == 1) {
      out.push_back(yes());
      out.push_back(no());
      out.push_back(code_ans());
      for (std::size_t i = 0; i < d; ++i) out.push_back(var(i));
    } else if (n >= 2) {
      for (const TermPtr& t : trees(n - 1, d)) out.push_back(fst(t));
      for (const TermPtr& t : trees(n - 1, d)) out.push_back(snd(t));
      for (const TermPtr& t : trees(n - 1, d + 1)) out.push_back(lam(t));
      if (n >= 3)
        for (const TermPtr& t : trees(n - 2, d + 1))
          for (const TermPtr& ty : fn_types) out.push_back(ascribe(lam(t), ty));
      for (std::size_t i = 1; i + 1 < n; ++i)
        for (const TermPtr& a : trees(i, d))
          for (const TermPtr& b : trees(n - 1 - i, d)) {
            out.push_back(app(a, b));
            out.push_back(pair(a, b));
            out.push_back(code_pi(a, b));
            out.push_back(code_sigma(a, b));
          }
      if (n >= 4)
        for (std::size_t i = 1; i + 2 < n; ++i)
          for (const TermPtr& a : trees(i, d))
            for (const TermPtr& b : trees(n - 2 - i, d))
              for (const TermPtr& ty : pair_types)
                out.push_back(ascribe(pair(a, b), ty));
    }
    memo[key] = std::move(out);
    ready[key] = true;
    return memo[key];
  }
};

}  // namespace

std::vector<TermPtr> enumerate_checked(const TermPtr& ty, std::size_t max_size) {
  Ctx empty;
  ValuePtr tyv = check_type(empty, ty);
  TreeGen gen(max_size);
  std::vector<TermPtr> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const TermPtr& t : gen.trees(n, 0)) {
      try {
        check(empty, t, tyv);
      } catch (const Error&) {
        continue;
      }
      out.push_back(t);
    }
  return out;
}

}  // namespace tt::mltt
