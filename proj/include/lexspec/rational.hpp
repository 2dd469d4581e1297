#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexspec {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// A point of R^n with exact rational coordinates.
using Point = std::vector<Rational>;

/// Base class for every contract violation raised by the library.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a textual or JSON form cannot be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses "p/q", "p" or a finite decimal such as "-2.25".
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& r);

/// Parses a comma separated list of rationals, e.g. "2.5, 3/2".
Point parse_point(std::string_view text);
std::string to_string(const Point& p);

}  // namespace lexspec
