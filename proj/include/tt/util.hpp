// util.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

namespace tt {

// Visitor helper for std::visit over variant ASTs.
template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

}  // namespace tt
