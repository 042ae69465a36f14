// nbe.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/stlc/nbe.hpp"

#include "tt/util.hpp"

namespace tt::stlc {

NePtr nvar(std::size_t level) { return std::make_shared<Neutral>(Neutral{NVar{level}}); }
NePtr nfst(NePtr p) { return std::make_shared<Neutral>(Neutral{NFst{std::move(p)}}); }
NePtr nsnd(NePtr p) { return std::make_shared<Neutral>(Neutral{NSnd{std::move(p)}}); }
NePtr napp(NePtr fn, NfPtr arg) {
  return std::make_shared<Neutral>(Neutral{NApp{std::move(fn), std::move(arg)}});
}

NfPtr nf_yes() {
  static const NfPtr n = std::make_shared<Normal>(Normal{NfYes{}});
  return n;
}
NfPtr nf_no() {
  static const NfPtr n = std::make_shared<Normal>(Normal{NfNo{}});
  return n;
}
NfPtr nf_star() {
  static const NfPtr n = std::make_shared<Normal>(Normal{NfStar{}});
  return n;
}
NfPtr nf_neut_ans(NePtr n) {
  return std::make_shared<Normal>(Normal{NfNeutAns{std::move(n)}});
}
NfPtr nf_pair(NfPtr first, NfPtr second) {
  return std::make_shared<Normal>(Normal{NfPair{std::move(first), std::move(second)}});
}
NfPtr nf_lam(TypePtr ann, NfPtr body) {
  return std::make_shared<Normal>(Normal{NfLam{std::move(ann), std::move(body)}});
}

bool ne_equal(const NePtr& a, const NePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const NVar& v) { return v.level == as<NVar>(b)->level; },
          [&](const NFst& p) { return ne_equal(p.pair, as<NFst>(b)->pair); },
          [&](const NSnd& p) { return ne_equal(p.pair, as<NSnd>(b)->pair); },
          [&](const NApp& p) {
            const auto* q = as<NApp>(b);
            return ne_equal(p.fn, q->fn) && nf_equal(p.arg, q->arg);
          },
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
          [&](const NfStar&) { return true; },
          [&](const NfNeutAns& p) { return ne_equal(p.neutral, as<NfNeutAns>(b)->neutral); },
          [&](const NfPair& p) {
            const auto* q = as<NfPair>(b);
            return nf_equal(p.first, q->first) && nf_equal(p.second, q->second);
          },
          [&](const NfLam& p) {
            const auto* q = as<NfLam>(b);
            return type_equal(p.ann, q->ann) && nf_equal(p.body, q->body);
          },
      },
      a->node);
}

ValuePtr vyes() {
  static const ValuePtr v = std::make_shared<Value>(Value{VYes{}});
  return v;
}
ValuePtr vno() {
  static const ValuePtr v = std::make_shared<Value>(Value{VNo{}});
  return v;
}
ValuePtr vstar() {
  static const ValuePtr v = std::make_shared<Value>(Value{VStar{}});
  return v;
}
ValuePtr vpair(ValuePtr first, ValuePtr second) {
  return std::make_shared<Value>(Value{VPair{std::move(first), std::move(second)}});
}
ValuePtr vclosure(Env env, TypePtr ann, TermPtr body) {
  return std::make_shared<Value>(Value{VClosure{std::move(env), std::move(ann), std::move(body)}});
}
ValuePtr vneutral(TypePtr type, NePtr spine) {
  return std::make_shared<Value>(Value{VNeutral{std::move(type), std::move(spine)}});
}

ValuePtr eval(const Env& env, const TermPtr& t, std::size_t fresh_level) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> ValuePtr {
            if (v.index >= env.size())
              throw internal_error("evaluation met an unbound variable");
            return env[env.size() - 1 - v.index];
          },
          [&](const Yes&) { return vyes(); },
          [&](const No&) { return vno(); },
          [&](const Star&) { return vstar(); },
          [&](const Pair& p) {
            return vpair(eval(env, p.first, fresh_level), eval(env, p.second, fresh_level));
          },
          [&](const Fst& p) -> ValuePtr {
            ValuePtr v = eval(env, p.pair, fresh_level);
            const auto* pr = as<VPair>(v);
            if (!pr) throw internal_error("fst applied to a non-pair value");
            return pr->first;
          },
          [&](const Snd& p) -> ValuePtr {
            ValuePtr v = eval(env, p.pair, fresh_level);
            const auto* pr = as<VPair>(v);
            if (!pr) throw internal_error("snd applied to a non-pair value");
            return pr->second;
          },
          [&](const Lam& p) { return vclosure(env, p.ann, p.body); },
          [&](const App& p) {
            return apply(eval(env, p.fn, fresh_level), eval(env, p.arg, fresh_level),
                         fresh_level);
          },
      },
      t->node);
}

ValuePtr apply(const ValuePtr& fn, const ValuePtr& arg, std::size_t fresh_level) {
  if (const auto* clo = as<VClosure>(fn)) {
    Env extended = clo->env;
    extended.push_back(arg);
    return eval(extended, clo->body, fresh_level);
  }
  if (const auto* neut = as<VNeutral>(fn)) {
    const auto* fty = as<TFun>(neut->type);
    if (!fty) throw internal_error("neutral application at a non-function type");
    return reflect(fty->cod, napp(neut->spine, reify(fty->dom, arg, fresh_level)));
  }
  throw internal_error("application of a non-function value");
}

ValuePtr reflect(const TypePtr& ty, const NePtr& n) {
  return std::visit(
      overloaded{
          [&](const TAns&) { return vneutral(ty, n); },
          [&](const TUnit&) { return vstar(); },
          [&](const TProd& p) {
            return vpair(reflect(p.left, nfst(n)), reflect(p.right, nsnd(n)));
          },
          [&](const TFun&) { return vneutral(ty, n); },
      },
      ty->node);
}

NfPtr reify(const TypePtr& ty, const ValuePtr& v, std::size_t fresh_level) {
  return std::visit(
      overloaded{
          [&](const TAns&) -> NfPtr {
            if (as<VYes>(v)) return nf_yes();
            if (as<VNo>(v)) return nf_no();
            if (const auto* neut = as<VNeutral>(v)) return nf_neut_ans(neut->spine);
            throw internal_error("value does not inhabit Ans");
          },
          [&](const TUnit&) { return nf_star(); },
          [&](const TProd& p) -> NfPtr {
            const auto* pr = as<VPair>(v);
            if (!pr) throw internal_error("value does not inhabit a product type");
            return nf_pair(reify(p.left, pr->first, fresh_level),
                           reify(p.right, pr->second, fresh_level));
          },
          [&](const TFun& p) {
            ValuePtr fresh = reflect(p.dom, nvar(fresh_level));
            return nf_lam(p.dom, reify(p.cod, apply(v, fresh, fresh_level + 1),
                                       fresh_level + 1));
          },
      },
      ty->node);
}

NfPtr normalize(const Context& ctx, const TermPtr& t) {
  TypePtr ty = infer(ctx, t);
  Env env;
  env.reserve(ctx.size());
  for (std::size_t level = 0; level < ctx.size(); ++level)
    env.push_back(reflect(ctx[level], nvar(level)));
  return reify(ty, eval(env, t, ctx.size()), ctx.size());
}

Canonicity canonicity(const TermPtr& t) {
  if (!well_scoped(t, 0)) throw type_error("NotClosed", "canonicity needs a closed term");
  TypePtr ty = infer({}, t);
  if (!type_equal(ty, ans()))
    throw type_error("NotAns", "canonicity needs a term of type Ans, got " + show(ty));
  NfPtr n = normalize({}, t);
  if (as<NfYes>(n)) return Canonicity::IsYes;
  if (as<NfNo>(n)) return Canonicity::IsNo;
  throw internal_error("closed normal form of type Ans is neither yes nor no");
}

TermPtr embed_ne(const NePtr& n, std::size_t ctx_len) {
  return std::visit(
      overloaded{
          [&](const NVar& v) -> TermPtr {
            if (v.level >= ctx_len)
              throw type_error("LevelOutOfRange",
                               "level " + std::to_string(v.level) +
                                   " does not fit in a context of length " +
                                   std::to_string(ctx_len));
            return var(ctx_len - 1 - v.level);
          },
          [&](const NFst& p) { return fst(embed_ne(p.pair, ctx_len)); },
          [&](const NSnd& p) { return snd(embed_ne(p.pair, ctx_len)); },
          [&](const NApp& p) {
            return app(embed_ne(p.fn, ctx_len), embed_nf(p.arg, ctx_len));
          },
      },
      n->node);
}

TermPtr embed_nf(const NfPtr& n, std::size_t ctx_len) {
  return std::visit(
      overloaded{
          [&](const NfYes&) { return yes(); },
          [&](const NfNo&) { return no(); },
          [&](const NfStar&) { return star(); },
          [&](const NfNeutAns& p) { return embed_ne(p.neutral, ctx_len); },
          [&](const NfPair& p) {
            return pair(embed_nf(p.first, ctx_len), embed_nf(p.second, ctx_len));
          },
          [&](const NfLam& p) { return lam(p.ann, embed_nf(p.body, ctx_len + 1)); },
      },
      n->node);
}

NePtr rename_ne(const NePtr& n, const Renaming& r, std::size_t src_ctx_len) {
  return std::visit(
      overloaded{
          [&](const NVar& v) -> NePtr {
            if (v.level >= src_ctx_len)  // bound inside the normal form
              return nvar(r.target_length + (v.level - src_ctx_len));
            std::size_t index = src_ctx_len - 1 - v.level;
            if (index >= r.mapping.size())
              throw type_error("IndexOutOfRange", "renaming does not cover the normal form");
            return nvar(r.target_length - 1 - r.mapping[index]);
          },
          [&](const NFst& p) { return nfst(rename_ne(p.pair, r, src_ctx_len)); },
          [&](const NSnd& p) { return nsnd(rename_ne(p.pair, r, src_ctx_len)); },
          [&](const NApp& p) {
            return napp(rename_ne(p.fn, r, src_ctx_len), rename_nf(p.arg, r, src_ctx_len));
          },
      },
      n->node);
}

NfPtr rename_nf(const NfPtr& n, const Renaming& r, std::size_t src_ctx_len) {
  return std::visit(
      overloaded{
          [&](const NfYes&) { return nf_yes(); },
          [&](const NfNo&) { return nf_no(); },
          [&](const NfStar&) { return nf_star(); },
          [&](const NfNeutAns& p) { return nf_neut_ans(rename_ne(p.neutral, r, src_ctx_len)); },
          [&](const NfPair& p) {
            return nf_pair(rename_nf(p.first, r, src_ctx_len),
                           rename_nf(p.second, r, src_ctx_len));
          },
          [&](const NfLam& p) {
            return nf_lam(p.ann, rename_nf(p.body, r, src_ctx_len));
          },
      },
      n->node);
}

}  // namespace tt::stlc
