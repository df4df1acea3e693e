#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ganita {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals. No result path goes through floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Input text that could not be parsed. `position` is the 1-based character
/// (code point) index of the offending location.
struct ParseError : std::invalid_argument {
    ParseError(const std::string& message, std::size_t position);
    std::size_t position;
};

struct IntSqrtResult {
    Int root;    // floor(sqrt(n))
    bool exact;  // root * root == n
};

/// Floor square root with exactness flag. Throws std::domain_error for n < 0.
IntSqrtResult integer_sqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// Exact square root of a nonnegative rational, when one exists.
std::optional<Rat> rational_sqrt(const Rat& r);

bool is_integer(const Rat& r);
Int to_integer(const Rat& r);  // pre: is_integer(r)

/// Positive divisors of |n|, ascending. Throws for n == 0.
std::vector<Int> positive_divisors(const Int& n);

Int pow10(unsigned n);

std::string to_string(const Rat& r);  // "p" or "p/q", lowest terms

/// Parses "p" or "p/q" (decimal digits, optional leading '-').
Rat parse_rational(const std::string& text);
Int parse_integer(const std::string& text);

}  // namespace ganita
