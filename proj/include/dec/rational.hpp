#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dec {

/// Exact scalar type: arbitrary-precision rational, always in lowest terms
/// with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

Integer factorial(int n);
Integer binomial(int n, int k);

/// Renders "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" with optional leading sign on p. Throws ParseError on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace dec
