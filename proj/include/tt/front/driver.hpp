// driver.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace tt::front {

// Runs one CLI invocation.  Exit codes:
//   0  success / property holds
//   1  property false (oracle-eq false, free-theorem fail)
//   2  parse or usage error
//   3  type error
//   4  fuel exhausted
//   5  internal invariant violation
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in = std::cin);

}  // namespace tt::front
