// parse.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <string_view>
#include <vector>

#include "tt/front/lexer.hpp"
#include "tt/mltt/kernel.hpp"
#include "tt/stlc/syntax.hpp"
#include "tt/sysf/systemf.hpp"

namespace tt::front {

// Named surface syntax resolved to de Bruijn.  Errors: ParseError with a
// span and the expected tokens; UnboundName for unresolved identifiers.

stlc::TermPtr parse_stlc_term(std::string_view src);
stlc::TypePtr parse_stlc_type(std::string_view src);

// One grammar for terms and types; ascriptions elaborate to Ascribe nodes,
// lambda annotations are erased.
mltt::TermPtr parse_mltt_term(std::string_view src);

sysf::TermPtr parse_sysf_term(std::string_view src);
// ty_scope supplies names for free type variables, innermost last.
sysf::TypePtr parse_sysf_type(std::string_view src,
                              const std::vector<std::string>& ty_scope = {});

}  // namespace tt::front
