#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace oddq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input (JSON documents, scalar literals, CLI arguments).
struct ParseError : Error {
  using Error::Error;
};

/// A computed object failed a consistency check that no valid input can
/// trigger; indicates a bug rather than bad data.
struct InternalError : Error {
  using Error::Error;
};

/// Parses "p/q" or "p". Accepts an optional leading minus sign.
Rational parse_rational(const std::string& text);

/// Inverse of parse_rational: "p/q" when q != 1, plain "p" otherwise.
std::string to_string(const Rational& q);

}  // namespace oddq
