// pretty.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/front/pretty.hpp"

#include "tt/util.hpp"

namespace tt::front {

namespace {

std::string term_name(std::size_t depth) {
  static const char* base[3] = {"x", "y", "z"};
  if (depth < 3) return base[depth];
  return "x" + std::to_string(depth - 2);
}

std::string type_name(std::size_t depth) {
  static const char* base[3] = {"X", "Y", "Z"};
  if (depth < 3) return base[depth];
  return "X" + std::to_string(depth - 2);
}

std::string wrap(bool parens, std::string s) { return parens ? "(" + s + ")" : std::move(s); }

// ---------------------------------------------------------------------------
// STLC
// ---------------------------------------------------------------------------

// Type precedence: -> 0 (right-assoc), * 1 (right-assoc), atoms 2.
std::string stlc_ty(const stlc::TypePtr& ty, int min) {
  using namespace stlc;
  return std::visit(
      overloaded{
          [](const TAns&) { return std::string("Ans"); },
          [](const TUnit&) { return std::string("Unit"); },
          [&](const TProd& p) {
            return wrap(1 < min, stlc_ty(p.left, 2) + " * " + stlc_ty(p.right, 1));
          },
          [&](const TFun& p) {
            return wrap(0 < min, stlc_ty(p.dom, 1) + " -> " + stlc_ty(p.cod, 0));
          },
      },
      ty->node);
}

// Term precedence: lambda 0, fst/snd 1, application 2, atoms 3.
std::string stlc_tm(const stlc::TermPtr& t, std::size_t depth, int min) {
  using namespace stlc;
  return std::visit(
      overloaded{
          [&](const Var& v) {
            if (v.index >= depth) return "#" + std::to_string(v.index);
            return term_name(depth - 1 - v.index);
          },
          [](const Yes&) { return std::string("yes"); },
          [](const No&) { return std::string("no"); },
          [](const Star&) { return std::string("()"); },
          [&](const Pair& p) {
            return "(" + stlc_tm(p.first, depth, 0) + ", " + stlc_tm(p.second, depth, 0) + ")";
          },
          [&](const Fst& p) { return wrap(1 < min, "fst " + stlc_tm(p.pair, depth, 3)); },
          [&](const Snd& p) { return wrap(1 < min, "snd " + stlc_tm(p.pair, depth, 3)); },
          [&](const Lam& p) {
            return wrap(0 < min, "\\" + term_name(depth) + ":" + stlc_ty(p.ann, 0) + ". " +
                                     stlc_tm(p.body, depth + 1, 0));
          },
          [&](const App& p) {
            return wrap(2 < min,
                        stlc_tm(p.fn, depth, 2) + " " + stlc_tm(p.arg, depth, 3));
          },
      },
      t->node);
}

// ---------------------------------------------------------------------------
// MLTT
// ---------------------------------------------------------------------------

bool m_uses_var(const mltt::TermPtr& t, std::size_t j) {
  using namespace mltt;
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index == j; },
          [&](const Yes&) { return false; },
          [&](const No&) { return false; },
          [&](const Ans&) { return false; },
          [&](const U&) { return false; },
          [&](const El& x) { return m_uses_var(x.code, j); },
          [&](const Pi& x) { return m_uses_var(x.dom, j) || m_uses_var(x.cod, j + 1); },
          [&](const Sigma& x) { return m_uses_var(x.dom, j) || m_uses_var(x.cod, j + 1); },
          [&](const Lam& x) { return m_uses_var(x.body, j + 1); },
          [&](const App& x) { return m_uses_var(x.fn, j) || m_uses_var(x.arg, j); },
          [&](const Pair& x) { return m_uses_var(x.first, j) || m_uses_var(x.second, j); },
          [&](const Fst& x) { return m_uses_var(x.pair, j); },
          [&](const Snd& x) { return m_uses_var(x.pair, j); },
          [&](const CodeAns&) { return false; },
          [&](const CodePi& x) { return m_uses_var(x.dom, j) || m_uses_var(x.family, j); },
          [&](const CodeSigma& x) { return m_uses_var(x.dom, j) || m_uses_var(x.family, j); },
          [&](const Ascribe& x) { return m_uses_var(x.term, j) || m_uses_var(x.type, j); },
      },
      t->node);
}

// Removes an unused binder: decrements free indices above j.
mltt::TermPtr m_strengthen(const mltt::TermPtr& t, std::size_t j) {
  using namespace mltt;
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index > j ? var(v.index - 1) : t; },
          [&](const Yes&) { return t; },
          [&](const No&) { return t; },
          [&](const Ans&) { return t; },
          [&](const U&) { return t; },
          [&](const El& x) { return el(m_strengthen(x.code, j)); },
          [&](const Pi& x) {
            return pi(m_strengthen(x.dom, j), m_strengthen(x.cod, j + 1));
          },
          [&](const Sigma& x) {
            return sigma(m_strengthen(x.dom, j), m_strengthen(x.cod, j + 1));
          },
          [&](const Lam& x) { return lam(m_strengthen(x.body, j + 1)); },
          [&](const App& x) {
            return app(m_strengthen(x.fn, j), m_strengthen(x.arg, j));
          },
          [&](const Pair& x) {
            return pair(m_strengthen(x.first, j), m_strengthen(x.second, j));
          },
          [&](const Fst& x) { return fst(m_strengthen(x.pair, j)); },
          [&](const Snd& x) { return snd(m_strengthen(x.pair, j)); },
          [&](const CodeAns&) { return t; },
          [&](const CodePi& x) {
            return code_pi(m_strengthen(x.dom, j), m_strengthen(x.family, j));
          },
          [&](const CodeSigma& x) {
            return code_sigma(m_strengthen(x.dom, j), m_strengthen(x.family, j));
          },
          [&](const Ascribe& x) {
            return ascribe(m_strengthen(x.term, j), m_strengthen(x.type, j));
          },
      },
      t->node);
}

// Precedence: ascription 0, -> 1, * 2, application 3, prefix 4, atoms 5.
std::string mltt_tm(const mltt::TermPtr& t, std::size_t depth, int min) {
  using namespace mltt;
  return std::visit(
      overloaded{
          [&](const Var& v) {
            if (v.index >= depth) return "#" + std::to_string(v.index);
            return term_name(depth - 1 - v.index);
          },
          [](const Yes&) { return std::string("yes"); },
          [](const No&) { return std::string("no"); },
          [](const Ans&) { return std::string("Ans"); },
          [](const U&) { return std::string("U"); },
          [&](const El& x) { return wrap(4 < min, "El " + mltt_tm(x.code, depth, 5)); },
          [&](const Pi& x) {
            std::string dom = mltt_tm(x.dom, depth, 2);
            if (m_uses_var(x.cod, 0))
              return wrap(1 < min, "(" + term_name(depth) + " : " + mltt_tm(x.dom, depth, 0) +
                                       ") -> " + mltt_tm(x.cod, depth + 1, 1));
            return wrap(1 < min, dom + " -> " + mltt_tm(m_strengthen(x.cod, 0), depth, 1));
          },
          [&](const Sigma& x) {
            std::string dom = mltt_tm(x.dom, depth, 3);
            if (m_uses_var(x.cod, 0))
              return wrap(2 < min, "(" + term_name(depth) + " : " + mltt_tm(x.dom, depth, 0) +
                                       ") * " + mltt_tm(x.cod, depth + 1, 2));
            return wrap(2 < min, dom + " * " + mltt_tm(m_strengthen(x.cod, 0), depth, 2));
          },
          [&](const Lam& x) {
            return wrap(0 < min,
                        "\\" + term_name(depth) + ". " + mltt_tm(x.body, depth + 1, 0));
          },
          [&](const App& x) {
            return wrap(3 < min, mltt_tm(x.fn, depth, 3) + " " + mltt_tm(x.arg, depth, 5));
          },
          [&](const Pair& x) {
            return "(" + mltt_tm(x.first, depth, 0) + ", " + mltt_tm(x.second, depth, 0) + ")";
          },
          [&](const Fst& x) { return wrap(4 < min, "fst " + mltt_tm(x.pair, depth, 5)); },
          [&](const Snd& x) { return wrap(4 < min, "snd " + mltt_tm(x.pair, depth, 5)); },
          [](const CodeAns&) { return std::string("ans"); },
          [&](const CodePi& x) {
            return wrap(4 < min, "pi " + mltt_tm(x.dom, depth, 5) + " " +
                                     mltt_tm(x.family, depth, 5));
          },
          [&](const CodeSigma& x) {
            return wrap(4 < min, "sigma " + mltt_tm(x.dom, depth, 5) + " " +
                                     mltt_tm(x.family, depth, 5));
          },
          [&](const Ascribe& x) {
            return wrap(0 < min,
                        mltt_tm(x.term, depth, 1) + " : " + mltt_tm(x.type, depth, 1));
          },
      },
      t->node);
}

// ---------------------------------------------------------------------------
// System F
// ---------------------------------------------------------------------------

// Type precedence: forall 0, -> 1, atoms 2.
std::string sysf_ty(const sysf::TypePtr& ty, std::size_t tdepth, int min) {
  using namespace sysf;
  return std::visit(
      overloaded{
          [&](const TVar& v) {
            if (v.index >= tdepth) return "#" + std::to_string(v.index);
            return type_name(tdepth - 1 - v.index);
          },
          [&](const Fun& x) {
            return wrap(1 < min,
                        sysf_ty(x.dom, tdepth, 2) + " -> " + sysf_ty(x.cod, tdepth, 1));
          },
          [&](const Forall& x) {
            return wrap(0 < min, "forall " + type_name(tdepth) + ". " +
                                     sysf_ty(x.body, tdepth + 1, 0));
          },
      },
      ty->node);
}

// Term precedence: binders 0, application/type application 1, atoms 2.
std::string sysf_tm(const sysf::TermPtr& t, std::size_t depth, std::size_t tdepth, int min) {
  using namespace sysf;
  return std::visit(
      overloaded{
          [&](const Var& v) {
            if (v.index >= depth) return "#" + std::to_string(v.index);
            return term_name(depth - 1 - v.index);
          },
          [&](const Lam& x) {
            return wrap(0 < min, "\\" + term_name(depth) + ":" + sysf_ty(x.ann, tdepth, 0) +
                                     ". " + sysf_tm(x.body, depth + 1, tdepth, 0));
          },
          [&](const App& x) {
            return wrap(1 < min, sysf_tm(x.fn, depth, tdepth, 1) + " " +
                                     sysf_tm(x.arg, depth, tdepth, 2));
          },
          [&](const TyLam& x) {
            return wrap(0 < min, "/\\" + type_name(tdepth) + ". " +
                                     sysf_tm(x.body, depth, tdepth + 1, 0));
          },
          [&](const TyApp& x) {
            return wrap(1 < min, sysf_tm(x.fn, depth, tdepth, 1) + " [" +
                                     sysf_ty(x.arg, tdepth, 0) + "]");
          },
      },
      t->node);
}

}  // namespace

std::string pretty(const stlc::TypePtr& ty) { return stlc_ty(ty, 0); }
std::string pretty(const stlc::TermPtr& t) { return stlc_tm(t, 0, 0); }
std::string pretty(const mltt::TermPtr& t) { return mltt_tm(t, 0, 0); }
std::string pretty(const sysf::TypePtr& ty) { return sysf_ty(ty, 0, 0); }
std::string pretty(const sysf::TermPtr& t) { return sysf_tm(t, 0, 0, 0); }

}  // namespace tt::front
