// error.hpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tt {

// Every kernel error carries a category (drives the CLI exit code) and a
// stable kind string (what tests and the JSON output match on).
class Error : public std::runtime_error {
 public:
  enum class Category { Parse, Type, Fuel, Internal };

  Error(Category category, std::string kind, const std::string& message)
      : std::runtime_error(message), category_(category), kind_(std::move(kind)) {}

  Category category() const { return category_; }
  const std::string& kind() const { return kind_; }

 private:
  Category category_;
  std::string kind_;
};

inline Error type_error(std::string kind, const std::string& message) {
  return Error(Error::Category::Type, std::move(kind), message);
}

inline Error internal_error(const std::string& message) {
  return Error(Error::Category::Internal, "InternalInvariantViolation", message);
}

class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(std::size_t steps_taken)
      : Error(Category::Fuel, "FuelExhausted",
              "fuel exhausted after " + std::to_string(steps_taken) + " steps"),
        steps_taken_(steps_taken) {}

  std::size_t steps_taken() const { return steps_taken_; }

 private:
  std::size_t steps_taken_;
};

}  // namespace tt
