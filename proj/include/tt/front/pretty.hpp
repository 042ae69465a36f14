// pretty.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <string>

#include "tt/mltt/kernel.hpp"
#include "tt/stlc/syntax.hpp"
#include "tt/sysf/systemf.hpp"

namespace tt::front {

// Deterministic rendering with generated binder names (x, y, z, x1, ... for
// terms; X, Y, Z, X1, ... for type variables); parsing the output yields an
// alpha-equal (de Bruijn: equal) term.

std::string pretty(const stlc::TypePtr& ty);
std::string pretty(const stlc::TermPtr& t);
std::string pretty(const mltt::TermPtr& t);
std::string pretty(const sysf::TypePtr& ty);
std::string pretty(const sysf::TermPtr& t);

}  // namespace tt::front
