#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Caller passed incompatible or malformed arguments.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation that is guaranteed to succeed failed; signals a defect in
// this library, never bad input.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : UsageError {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : UsageError(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Accepts "p", "-p", "p/q" with a positive denominator. Normalized on return.
Rat parse_rat(const std::string& text);

// Inverse of parse_rat: "p" when the denominator is 1, else "p/q".
std::string format_rat(const Rat& r);

}  // namespace gh
