#pragma once

#include <stdexcept>
#include <string>

namespace baxter {

// Violated precondition or invariant: the caller handed an operation a value
// its contract excludes, or an internal identity that must hold did not.
struct contract_error : std::logic_error {
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// Malformed serialized object (step word, code pair, ...).
struct format_error : std::runtime_error {
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed its configured size bound.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace baxter
