// relfile.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <string>
#include <vector>

#include "tt/sysf/systemf.hpp"

namespace tt::front {

// Relation-instance description, one block per leading quantifier:
//
//   left: forall Y. Y -> Y
//   right: forall Y. Y -> Y
//   pair: /\Y. \y:Y. y | /\Y. \y:Y. y
//   fnpair: X -> X | \x:(forall Y. Y -> Y). x | \x:(forall Y. Y -> Y). x
//
// A new block starts at each `left:`.  `pair:` lists the relation members;
// `fnpair:` supplies candidate pairs for a function-type domain (the type is
// written over the quantified variables, named X, Y, Z, X1, ... outermost
// first).  Blank lines and lines starting with # are ignored.
std::vector<sysf::Instantiation> parse_rel_file(const std::string& content);

}  // namespace tt::front
