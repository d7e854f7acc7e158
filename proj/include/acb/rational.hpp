#ifndef ACB_RATIONAL_HPP_
#define ACB_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace acb {

// Exact arbitrary-precision rational. boost keeps values canonical
// (gcd-reduced, positive denominator), which the serialization relies on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown on any precondition violation (bad arguments, malformed input).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parses "p/q" or a bare integer "p". Whitespace is not accepted.
Rat parse_rat(const std::string& text);

// Canonical form: "p/q" with q > 1, otherwise just "p".
std::string rat_str(const Rat& r);

// Decimal rendering with the given number of significant digits.
std::string rat_decimal(const Rat& r, int significant_digits = 12);

double rat_double(const Rat& r);

// floor(r) as an arbitrary-precision integer (exact, sign-correct).
Int rat_floor(const Rat& r);

}  // namespace acb

#endif  // ACB_RATIONAL_HPP_
