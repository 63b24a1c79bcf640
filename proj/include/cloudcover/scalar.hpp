#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

namespace cloudcover {

/// Universal coordinate type: arbitrary-precision rational, always in
/// lowest terms with positive denominator.
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Scalar scalar_abs(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

int scalar_sign(const Scalar& s);

/// Parses "p/q" or a plain integer string. Rejects q <= 0 written
/// explicitly as well as malformed input.
std::optional<Scalar> parse_scalar(const std::string& text);

/// Prints as "p/q", or just "p" when the denominator is 1.
std::string scalar_to_string(const Scalar& s);

/// Exact rational square root when it exists.
std::optional<Scalar> exact_sqrt(const Scalar& s);

/// Rational bracket lo <= sqrt(s) <= hi with hi - lo <= tol; requires s >= 0.
std::pair<Scalar, Scalar> sqrt_bracket(const Scalar& s, const Scalar& tol);

}  // namespace cloudcover
