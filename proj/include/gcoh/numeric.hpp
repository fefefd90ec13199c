#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gcoh {

// Every value in the engine is exact; there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(std::string_view text);
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses "a/b mod 1" (or a plain rational) and returns the representative in [0,1).
Rational parse_circle(std::string_view text);
std::string circle_to_string(const Rational& value);

Integer floor(const Rational& value);
/// Canonical representative of value mod Z, in [0,1).
Rational mod_one(const Rational& value);
bool is_integral(const Rational& value);
Integer as_integer(const Rational& value);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

bool is_zero(const RationalVector& v);
bool is_integral(const RationalVector& v);

}  // namespace gcoh
