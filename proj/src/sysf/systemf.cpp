// systemf.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/sysf/systemf.hpp"

#include <algorithm>

#include "tt/util.hpp"

namespace tt::sysf {

TypePtr tvar(std::size_t index) { return std::make_shared<Type>(Type{TVar{index}}); }
TypePtr fun(TypePtr dom, TypePtr cod) {
  return std::make_shared<Type>(Type{Fun{std::move(dom), std::move(cod)}});
}
TypePtr forall(TypePtr body) { return std::make_shared<Type>(Type{Forall{std::move(body)}}); }

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const TVar& v) { return v.index == as<TVar>(b)->index; },
          [&](const Fun& x) {
            const auto* y = as<Fun>(b);
            return type_equal(x.dom, y->dom) && type_equal(x.cod, y->cod);
          },
          [&](const Forall& x) { return type_equal(x.body, as<Forall>(b)->body); },
      },
      a->node);
}

bool type_closed(const TypePtr& t, std::size_t tctx) {
  return std::visit(
      overloaded{
          [&](const TVar& v) { return v.index < tctx; },
          [&](const Fun& x) { return type_closed(x.dom, tctx) && type_closed(x.cod, tctx); },
          [&](const Forall& x) { return type_closed(x.body, tctx + 1); },
      },
      t->node);
}

TypePtr shift_ty(const TypePtr& t, std::size_t delta, std::size_t cutoff) {
  if (delta == 0) return t;
  return std::visit(
      overloaded{
          [&](const TVar& v) { return v.index >= cutoff ? tvar(v.index + delta) : t; },
          [&](const Fun& x) {
            return fun(shift_ty(x.dom, delta, cutoff), shift_ty(x.cod, delta, cutoff));
          },
          [&](const Forall& x) { return forall(shift_ty(x.body, delta, cutoff + 1)); },
      },
      t->node);
}

namespace {

TypePtr subst_ty_at(const TypePtr& t, std::size_t j, const TypePtr& arg) {
  return std::visit(
      overloaded{
          [&](const TVar& v) -> TypePtr {
            if (v.index == j) return shift_ty(arg, j, 0);
            return v.index > j ? tvar(v.index - 1) : t;
          },
          [&](const Fun& x) {
            return fun(subst_ty_at(x.dom, j, arg), subst_ty_at(x.cod, j, arg));
          },
          [&](const Forall& x) { return forall(subst_ty_at(x.body, j + 1, arg)); },
      },
      t->node);
}

}  // namespace

TypePtr subst_ty(const TypePtr& body, std::size_t j, const TypePtr& arg) {
  return subst_ty_at(body, j, arg);
}

std::string show(const TypePtr& t) {
  return std::visit(
      overloaded{
          [](const TVar& v) { return "X" + std::to_string(v.index); },
          [](const Fun& x) { return "(" + show(x.dom) + " -> " + show(x.cod) + ")"; },
          [](const Forall& x) { return "(forall. " + show(x.body) + ")"; },
      },
      t->node);
}

TermPtr var(std::size_t index) { return std::make_shared<Term>(Term{Var{index}}); }
TermPtr lam(TypePtr ann, TermPtr body) {
  return std::make_shared<Term>(Term{Lam{std::move(ann), std::move(body)}});
}
TermPtr app(TermPtr fn, TermPtr arg) {
  return std::make_shared<Term>(Term{App{std::move(fn), std::move(arg)}});
}
TermPtr tylam(TermPtr body) { return std::make_shared<Term>(Term{TyLam{std::move(body)}}); }
TermPtr tyapp(TermPtr fn, TypePtr arg) {
  return std::make_shared<Term>(Term{TyApp{std::move(fn), std::move(arg)}});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index == as<Var>(b)->index; },
          [&](const Lam& x) {
            const auto* y = as<Lam>(b);
            return type_equal(x.ann, y->ann) && term_equal(x.body, y->body);
          },
          [&](const App& x) {
            const auto* y = as<App>(b);
            return term_equal(x.fn, y->fn) && term_equal(x.arg, y->arg);
          },
          [&](const TyLam& x) { return term_equal(x.body, as<TyLam>(b)->body); },
          [&](const TyApp& x) {
            const auto* y = as<TyApp>(b);
            return term_equal(x.fn, y->fn) && type_equal(x.arg, y->arg);
          },
      },
      a->node);
}

std::size_t term_size(const TermPtr& t) {
  return std::visit(
      overloaded{
          [](const Var&) -> std::size_t { return 1; },
          [](const Lam& x) { return 1 + term_size(x.body); },
          [](const App& x) { return 1 + term_size(x.fn) + term_size(x.arg); },
          [](const TyLam& x) { return 1 + term_size(x.body); },
          [](const TyApp& x) { return 1 + term_size(x.fn); },
      },
      t->node);
}

std::string show(const TermPtr& t) {
  return std::visit(
      overloaded{
          [](const Var& v) { return "x" + std::to_string(v.index); },
          [](const Lam& x) { return "(\\:" + show(x.ann) + ". " + show(x.body) + ")"; },
          [](const App& x) { return "(" + show(x.fn) + " " + show(x.arg) + ")"; },
          [](const TyLam& x) { return "(/\\. " + show(x.body) + ")"; },
          [](const TyApp& x) { return "(" + show(x.fn) + " [" + show(x.arg) + "])"; },
      },
      t->node);
}

namespace {

// Shift term variables >= cutoff by delta.
TermPtr shift_term(const TermPtr& t, std::size_t delta, std::size_t cutoff) {
  if (delta == 0) return t;
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index >= cutoff ? var(v.index + delta) : t; },
          [&](const Lam& x) { return lam(x.ann, shift_term(x.body, delta, cutoff + 1)); },
          [&](const App& x) {
            return app(shift_term(x.fn, delta, cutoff), shift_term(x.arg, delta, cutoff));
          },
          [&](const TyLam& x) { return tylam(shift_term(x.body, delta, cutoff)); },
          [&](const TyApp& x) { return tyapp(shift_term(x.fn, delta, cutoff), x.arg); },
      },
      t->node);
}

// Shift type variables inside a term.
TermPtr tshift_term(const TermPtr& t, std::size_t delta, std::size_t cutoff) {
  if (delta == 0) return t;
  return std::visit(
      overloaded{
          [&](const Var&) { return t; },
          [&](const Lam& x) {
            return lam(shift_ty(x.ann, delta, cutoff), tshift_term(x.body, delta, cutoff));
          },
          [&](const App& x) {
            return app(tshift_term(x.fn, delta, cutoff), tshift_term(x.arg, delta, cutoff));
          },
          [&](const TyLam& x) { return tylam(tshift_term(x.body, delta, cutoff + 1)); },
          [&](const TyApp& x) {
            return tyapp(tshift_term(x.fn, delta, cutoff), shift_ty(x.arg, delta, cutoff));
          },
      },
      t->node);
}

// body[j := arg] for a term argument; tyd counts type binders crossed.
TermPtr subst_term_at(const TermPtr& t, std::size_t j, std::size_t tyd, const TermPtr& arg) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> TermPtr {
            if (v.index == j) return tshift_term(shift_term(arg, j, 0), tyd, 0);
            return v.index > j ? var(v.index - 1) : t;
          },
          [&](const Lam& x) { return lam(x.ann, subst_term_at(x.body, j + 1, tyd, arg)); },
          [&](const App& x) {
            return app(subst_term_at(x.fn, j, tyd, arg), subst_term_at(x.arg, j, tyd, arg));
          },
          [&](const TyLam& x) { return tylam(subst_term_at(x.body, j, tyd + 1, arg)); },
          [&](const TyApp& x) { return tyapp(subst_term_at(x.fn, j, tyd, arg), x.arg); },
      },
      t->node);
}

// body[j := arg] for a type argument.
TermPtr tsubst_term_at(const TermPtr& t, std::size_t j, const TypePtr& arg) {
  return std::visit(
      overloaded{
          [&](const Var&) { return t; },
          [&](const Lam& x) {
            return lam(subst_ty_at(x.ann, j, arg), tsubst_term_at(x.body, j, arg));
          },
          [&](const App& x) {
            return app(tsubst_term_at(x.fn, j, arg), tsubst_term_at(x.arg, j, arg));
          },
          [&](const TyLam& x) { return tylam(tsubst_term_at(x.body, j + 1, arg)); },
          [&](const TyApp& x) {
            return tyapp(tsubst_term_at(x.fn, j, arg), subst_ty_at(x.arg, j, arg));
          },
      },
      t->node);
}

}  // namespace

TypePtr f_infer(std::size_t tctx, const std::vector<TypePtr>& ctx, const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> TypePtr {
            if (v.index >= ctx.size())
              throw type_error("UnboundVariable",
                               "unbound variable with index " + std::to_string(v.index));
            return ctx[ctx.size() - 1 - v.index];
          },
          [&](const Lam& x) -> TypePtr {
            if (!type_closed(x.ann, tctx))
              throw type_error("UnboundVariable",
                               "annotation " + show(x.ann) + " has an unbound type variable");
            std::vector<TypePtr> extended = ctx;
            extended.push_back(x.ann);
            return fun(x.ann, f_infer(tctx, extended, x.body));
          },
          [&](const App& x) -> TypePtr {
            TypePtr fty = f_infer(tctx, ctx, x.fn);
            const auto* fn = as<Fun>(fty);
            if (!fn)
              throw type_error("NotAFunction", "application head has type " + show(fty));
            TypePtr aty = f_infer(tctx, ctx, x.arg);
            if (!type_equal(fn->dom, aty))
              throw type_error("ArgumentMismatch", "expected argument of type " +
                                                       show(fn->dom) + ", got " + show(aty));
            return fn->cod;
          },
          [&](const TyLam& x) -> TypePtr {
            std::vector<TypePtr> shifted;
            shifted.reserve(ctx.size());
            for (const TypePtr& ty : ctx) shifted.push_back(shift_ty(ty, 1, 0));
            return forall(f_infer(tctx + 1, shifted, x.body));
          },
          [&](const TyApp& x) -> TypePtr {
            if (!type_closed(x.arg, tctx))
              throw type_error("UnboundVariable",
                               "type argument " + show(x.arg) + " has an unbound type variable");
            TypePtr fty = f_infer(tctx, ctx, x.fn);
            const auto* fa = as<Forall>(fty);
            if (!fa)
              throw type_error("NotAForall", "type application head has type " + show(fty));
            return subst_ty(fa->body, 0, x.arg);
          },
      },
      t->node);
}

namespace {

struct FStep {
  std::optional<TermPtr> stepped;
};

FStep f_step(const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Var&) { return FStep{}; },
          [&](const Lam& x) {
            if (FStep r = f_step(x.body); r.stepped)
              return FStep{lam(x.ann, *r.stepped)};
            return FStep{};
          },
          [&](const App& x) {
            if (const auto* fn = as<Lam>(x.fn))
              return FStep{subst_term_at(fn->body, 0, 0, x.arg)};
            if (FStep r = f_step(x.fn); r.stepped) return FStep{app(*r.stepped, x.arg)};
            if (FStep r = f_step(x.arg); r.stepped) return FStep{app(x.fn, *r.stepped)};
            return FStep{};
          },
          [&](const TyLam& x) {
            if (FStep r = f_step(x.body); r.stepped) return FStep{tylam(*r.stepped)};
            return FStep{};
          },
          [&](const TyApp& x) {
            if (const auto* fn = as<TyLam>(x.fn))
              return FStep{tsubst_term_at(fn->body, 0, x.arg)};
            if (FStep r = f_step(x.fn); r.stepped) return FStep{tyapp(*r.stepped, x.arg)};
            return FStep{};
          },
      },
      t->node);
}

}  // namespace

TermPtr f_normalize(const TermPtr& t, std::size_t fuel) {
  TermPtr current = t;
  std::size_t steps = 0;
  for (;;) {
    FStep r = f_step(current);
    if (!r.stepped) return current;
    if (fuel == 0) throw FuelExhausted(steps);
    --fuel;
    ++steps;
    current = *r.stepped;
  }
}

// ---------------------------------------------------------------------------
// Relational checking
// ---------------------------------------------------------------------------

const RelInstance& RelEnv::instance(std::size_t index) const {
  if (index >= instances.size())
    throw internal_error("relational environment does not cover the type variable");
  return instances[instances.size() - 1 - index];
}

namespace {

TypePtr instantiate(const TypePtr& ty, const RelEnv& env, bool left, std::size_t depth) {
  return std::visit(
      overloaded{
          [&](const TVar& v) -> TypePtr {
            if (v.index < depth) return ty;
            const RelInstance& inst = env.instance(v.index - depth);
            // Instance types are closed, no shifting needed.
            return left ? inst.left_type : inst.right_type;
          },
          [&](const Fun& x) -> TypePtr {
            return fun(instantiate(x.dom, env, left, depth),
                       instantiate(x.cod, env, left, depth));
          },
          [&](const Forall& x) -> TypePtr {
            return forall(instantiate(x.body, env, left, depth + 1));
          },
      },
      ty->node);
}

void validate_candidate(const TypePtr& domain, const RelEnv& env, const TermPair& cand) {
  TypePtr lty = instantiate(domain, env, true, 0);
  TypePtr rty = instantiate(domain, env, false, 0);
  if (!type_equal(f_infer(0, {}, cand.first), lty) ||
      !type_equal(f_infer(0, {}, cand.second), rty))
    throw type_error("IllTyped", "candidate pair is not well-typed at " + show(domain));
}

std::vector<TermPair> candidates_for(const TypePtr& domain, const RelEnv& env) {
  if (const auto* v = as<TVar>(domain)) return env.instance(v->index).pairs;
  std::vector<TermPair> out;
  for (const FnCandidates& fc : env.fn_candidates)
    if (type_equal(fc.domain, domain))
      for (const TermPair& p : fc.pairs) {
        validate_candidate(domain, env, p);
        out.push_back(p);
      }
  return out;
}

std::optional<Witness> membership(const TypePtr& ty, const RelEnv& env, const TermPtr& left,
                                  const TermPtr& right, std::size_t fuel) {
  if (const auto* v = as<TVar>(ty)) {
    TermPtr nl = f_normalize(left, fuel);
    TermPtr nr = f_normalize(right, fuel);
    for (const TermPair& p : env.instance(v->index).pairs)
      if (term_equal(p.first, nl) && term_equal(p.second, nr)) return std::nullopt;
    return Witness{ty, nl, nr};
  }
  if (const auto* f = as<Fun>(ty)) {
    for (const TermPair& cand : candidates_for(f->dom, env)) {
      // Quantify only over related candidate pairs.  At a quantified domain
      // relatedness is not checkable; supplied candidates are taken as given.
      if (!as<Forall>(f->dom) &&
          membership(f->dom, env, cand.first, cand.second, fuel))
        continue;
      if (auto w = membership(f->cod, env, app(left, cand.first), app(right, cand.second), fuel))
        return w;
    }
    return std::nullopt;
  }
  throw type_error("UnsupportedQuantifier",
                   "relational membership at a quantified type; supply instantiations "
                   "through free_theorem_check");
}

void validate_instance(const RelInstance& inst, std::size_t fuel) {
  if (!type_closed(inst.left_type) || !type_closed(inst.right_type))
    throw type_error("IllTyped", "relation instance types must be closed");
  for (const TermPair& p : inst.pairs) {
    if (!type_equal(f_infer(0, {}, p.first), inst.left_type))
      throw type_error("IllTyped", "relation pair component " + show(p.first) +
                                       " is not a closed term of " + show(inst.left_type));
    if (!type_equal(f_infer(0, {}, p.second), inst.right_type))
      throw type_error("IllTyped", "relation pair component " + show(p.second) +
                                       " is not a closed term of " + show(inst.right_type));
    if (!term_equal(f_normalize(p.first, fuel), p.first) ||
        !term_equal(f_normalize(p.second, fuel), p.second))
      throw type_error("IllTyped", "relation pair components must be beta-normal");
  }
}

}  // namespace

TypePtr left_instantiation(const TypePtr& ty, const RelEnv& env) {
  return instantiate(ty, env, true, 0);
}
TypePtr right_instantiation(const TypePtr& ty, const RelEnv& env) {
  return instantiate(ty, env, false, 0);
}

bool rel_member(const TypePtr& ty, const RelEnv& env, const TermPtr& left,
                const TermPtr& right, std::size_t fuel) {
  if (!type_equal(f_infer(0, {}, left), left_instantiation(ty, env)))
    throw type_error("IllTyped", "left side is not typed at the instantiated type");
  if (!type_equal(f_infer(0, {}, right), right_instantiation(ty, env)))
    throw type_error("IllTyped", "right side is not typed at the instantiated type");
  return !membership(ty, env, left, right, fuel).has_value();
}

Verdict free_theorem_check(const TermPtr& t, const TypePtr& ty,
                           const std::vector<Instantiation>& instantiations,
                           std::size_t fuel) {
  if (!type_equal(f_infer(0, {}, t), ty))
    throw type_error("IllTyped", "term does not have the stated type");

  RelEnv env;
  TypePtr current = ty;
  TermPtr left = t;
  TermPtr right = t;
  for (const Instantiation& inst : instantiations) {
    const auto* fa = as<Forall>(current);
    if (!fa)
      throw type_error("InstantiationArity",
                       "more instantiations than leading quantifiers");
    validate_instance(inst.instance, fuel);
    env.instances.push_back(inst.instance);
    for (const FnCandidates& fc : inst.fn_candidates) env.fn_candidates.push_back(fc);
    left = tyapp(left, inst.instance.left_type);
    right = tyapp(right, inst.instance.right_type);
    current = fa->body;
  }
  if (as<Forall>(current))
    throw type_error("InstantiationArity", "not enough instantiations for the quantifiers");

  auto w = membership(current, env, left, right, fuel);
  Verdict verdict;
  verdict.pass = !w.has_value();
  verdict.witness = std::move(w);
  return verdict;
}

// ---------------------------------------------------------------------------
// Free theorem rendering
// ---------------------------------------------------------------------------

namespace {

std::string nth_name(const char* base[3], std::size_t k) {
  if (k < 3) return base[k];
  return std::string(base[0]) + std::to_string(k - 2);
}

std::string ty_name(std::size_t k) {
  static const char* base[3] = {"X", "Y", "Z"};
  return nth_name(base, k);
}

std::string arg_name(std::size_t k) {
  static const char* base[3] = {"a", "b", "c"};
  return nth_name(base, k);
}

std::size_t free_ty_count(const TypePtr& ty, std::size_t depth) {
  return std::visit(
      overloaded{
          [&](const TVar& v) -> std::size_t {
            return v.index >= depth ? v.index - depth + 1 : 0;
          },
          [&](const Fun& x) {
            return std::max(free_ty_count(x.dom, depth), free_ty_count(x.cod, depth));
          },
          [&](const Forall& x) { return free_ty_count(x.body, depth + 1); },
      },
      ty->node);
}

struct Renderer {
  std::vector<std::string> ty_names;  // innermost last
  std::size_t free_count = 0;
  std::size_t next_arg = 0;

  std::string name_of(std::size_t index) {
    if (index < ty_names.size()) return ty_names[ty_names.size() - 1 - index];
    // Free variable: index free_count-1 is the outermost.
    return ty_name(free_count - 1 - (index - ty_names.size()));
  }

  std::string render(const TypePtr& ty, const std::string& lhs, const std::string& rhs) {
    return std::visit(
        overloaded{
            [&](const TVar& v) {
              return "(" + lhs + ", " + rhs + ") ∈ R_" + name_of(v.index);
            },
            [&](const Fun& x) {
              std::string a = arg_name(next_arg++);
              std::string clause;
              if (const auto* v = as<TVar>(x.dom)) {
                clause = "for all (" + a + "_L, " + a + "_R) ∈ R_" + name_of(v->index);
              } else {
                clause = "for all (" + a + "_L, " + a + "_R) such that [" +
                         render(x.dom, a + "_L", a + "_R") + "]";
              }
              return clause + ": " +
                     render(x.cod, lhs + " " + a + "_L", rhs + " " + a + "_R");
            },
            [&](const Forall& x) {
              std::string n = ty_name(free_count + ty_names.size());
              ty_names.push_back(n);
              std::string out = "for all closed types " + n + "_L, " + n +
                                "_R and every relation R_" + n + " ⊆ Tm(" + n +
                                "_L) × Tm(" + n + "_R): " +
                                render(x.body, lhs + " " + n + "_L", rhs + " " + n + "_R");
              ty_names.pop_back();
              return out;
            },
        },
        ty->node);
  }
};

}  // namespace

std::string free_theorem_print(const TypePtr& ty, const std::string& term_name) {
  Renderer r;
  r.free_count = free_ty_count(ty, 0);
  return r.render(ty, term_name, term_name);
}

// ---------------------------------------------------------------------------
// Normal-form enumeration
// ---------------------------------------------------------------------------

namespace {

void collect_subtypes_ty(const TypePtr& ty, std::vector<TypePtr>& out) {
  out.push_back(ty);
  if (const auto* f = as<Fun>(ty)) {
    collect_subtypes_ty(f->dom, out);
    collect_subtypes_ty(f->cod, out);
  } else if (const auto* fa = as<Forall>(ty)) {
    collect_subtypes_ty(fa->body, out);
  }
}

struct NfEnumerator {
  std::vector<TypePtr> palette;  // closed types usable as type arguments

  std::vector<std::pair<TermPtr, TypePtr>> neutrals_exact(std::size_t tctx,
                                                          const std::vector<TypePtr>& ctx,
                                                          std::size_t n) {
    std::vector<std::pair<TermPtr, TypePtr>> out;
    if (n == 0) return out;
    if (n == 1) {
      for (std::size_t i = 0; i < ctx.size(); ++i)
        out.emplace_back(var(i), ctx[ctx.size() - 1 - i]);
      return out;
    }
    for (std::size_t i = 1; i + 1 < n; ++i)
      for (auto& [ne, ty] : neutrals_exact(tctx, ctx, i))
        if (const auto* f = as<Fun>(ty))
          for (const TermPtr& arg : normals_exact(tctx, ctx, f->dom, n - 1 - i))
            out.emplace_back(app(ne, arg), f->cod);
    for (auto& [ne, ty] : neutrals_exact(tctx, ctx, n - 1))
      if (const auto* fa = as<Forall>(ty)) {
        for (std::size_t i = 0; i < tctx; ++i)
          out.emplace_back(tyapp(ne, tvar(i)), subst_ty(fa->body, 0, tvar(i)));
        for (const TypePtr& targ : palette)
          out.emplace_back(tyapp(ne, targ), subst_ty(fa->body, 0, targ));
      }
    return out;
  }

  std::vector<TermPtr> normals_exact(std::size_t tctx, const std::vector<TypePtr>& ctx,
                                     const TypePtr& ty, std::size_t n) {
    std::vector<TermPtr> out;
    if (n == 0) return out;
    if (const auto* fa = as<Forall>(ty)) {
      std::vector<TypePtr> shifted;
      shifted.reserve(ctx.size());
      for (const TypePtr& e : ctx) shifted.push_back(shift_ty(e, 1, 0));
      for (const TermPtr& b : normals_exact(tctx + 1, shifted, fa->body, n - 1))
        out.push_back(tylam(b));
      return out;
    }
    if (const auto* f = as<Fun>(ty)) {
      std::vector<TypePtr> extended = ctx;
      extended.push_back(f->dom);
      for (const TermPtr& b : normals_exact(tctx, extended, f->cod, n - 1))
        out.push_back(lam(f->dom, b));
      return out;
    }
    for (auto& [ne, nty] : neutrals_exact(tctx, ctx, n))
      if (type_equal(nty, ty)) out.push_back(ne);
    return out;
  }
};

}  // namespace

std::vector<TermPtr> enumerate_normal_inhabitants(const TypePtr& ty, std::size_t max_size) {
  NfEnumerator e;
  std::vector<TypePtr> subtypes;
  collect_subtypes_ty(ty, subtypes);
  for (const TypePtr& s : subtypes) {
    if (!type_closed(s)) continue;
    bool seen = false;
    for (const TypePtr& p : e.palette)
      if (type_equal(p, s)) {
        seen = true;
        break;
      }
    if (!seen) e.palette.push_back(s);
  }
  std::vector<TermPtr> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (TermPtr& t : e.normals_exact(0, {}, ty, n)) out.push_back(std::move(t));
  return out;
}

}  // namespace tt::sysf
