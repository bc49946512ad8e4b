#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgc {

/// Exact rational arithmetic; no floating point is used anywhere in the
/// invariant or interpolation code.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Reduced "p/q" form with an explicit denominator, e.g. "3/1".
std::string formatRational(const Rational& r);

/// Accepts "p/q" or a bare integer.
Rational parseRational(const std::string& text);

}  // namespace hgc
