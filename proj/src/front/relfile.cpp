// relfile.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/front/relfile.hpp"

#include <sstream>

#include "tt/front/parse.hpp"

namespace tt::front {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& s, std::size_t expected,
                                      std::size_t line_no) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t bar = s.find('|', start);
    if (bar == std::string::npos) {
      fields.push_back(trim(s.substr(start)));
      break;
    }
    fields.push_back(trim(s.substr(start, bar - start)));
    start = bar + 1;
  }
  if (fields.size() != expected)
    throw ParseError(Span{0, 0, line_no, 1},
                     "expected " + std::to_string(expected) + " '|'-separated fields, got " +
                         std::to_string(fields.size()));
  return fields;
}

std::string ty_name(std::size_t k) {
  static const char* base[3] = {"X", "Y", "Z"};
  if (k < 3) return base[k];
  return "X" + std::to_string(k - 2);
}

}  // namespace

std::vector<sysf::Instantiation> parse_rel_file(const std::string& content) {
  std::vector<sysf::Instantiation> out;
  std::istringstream in(content);
  std::string raw;
  std::size_t line_no = 0;
  bool have_left = false;
  bool have_right = false;
  std::vector<std::string> scope;  // quantified-variable names, outermost first

  auto require_block = [&](std::size_t ln) {
    if (out.empty())
      throw ParseError(Span{0, 0, ln, 1}, "a relation block must start with 'left:'");
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    auto starts = [&](const char* key) {
      return line.rfind(key, 0) == 0;
    };
    auto rest = [&](const char* key) { return trim(line.substr(std::string(key).size())); };

    if (starts("left:")) {
      out.emplace_back();
      scope.push_back(ty_name(scope.size()));
      have_left = true;
      have_right = false;
      out.back().instance.left_type = parse_sysf_type(rest("left:"));
      continue;
    }
    if (starts("right:")) {
      require_block(line_no);
      if (!have_left)
        throw ParseError(Span{0, 0, line_no, 1}, "'right:' before 'left:'");
      out.back().instance.right_type = parse_sysf_type(rest("right:"));
      have_right = true;
      continue;
    }
    if (starts("pair:")) {
      require_block(line_no);
      if (!have_right)
        throw ParseError(Span{0, 0, line_no, 1}, "'pair:' before 'right:'");
      std::vector<std::string> f = split_fields(rest("pair:"), 2, line_no);
      out.back().instance.pairs.emplace_back(parse_sysf_term(f[0]), parse_sysf_term(f[1]));
      continue;
    }
    if (starts("fnpair:")) {
      require_block(line_no);
      std::vector<std::string> f = split_fields(rest("fnpair:"), 3, line_no);
      sysf::FnCandidates fc;
      fc.domain = parse_sysf_type(f[0], scope);
      fc.pairs.emplace_back(parse_sysf_term(f[1]), parse_sysf_term(f[2]));
      // Merge with an existing entry for the same domain type.
      bool merged = false;
      for (sysf::FnCandidates& existing : out.back().fn_candidates)
        if (sysf::type_equal(existing.domain, fc.domain)) {
          existing.pairs.push_back(fc.pairs.front());
          merged = true;
          break;
        }
      if (!merged) out.back().fn_candidates.push_back(std::move(fc));
      continue;
    }
    throw ParseError(Span{0, 0, line_no, 1},
                     "expected 'left:', 'right:', 'pair:', or 'fnpair:'");
  }

  for (const sysf::Instantiation& inst : out)
    if (!inst.instance.left_type || !inst.instance.right_type)
      throw ParseError(Span{0, 0, line_no, 1}, "incomplete relation block");
  return out;
}

}  // namespace tt::front
