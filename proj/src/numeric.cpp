#include "gcoh/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace gcoh {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
    }
    std::string digits(s.substr(start));
    Integer value(digits);
    return s.front() == '-' ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
    auto num = boost::multiprecision::numerator(value);
    auto den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_circle(std::string_view text) {
    auto s = trim(text);
    constexpr std::string_view suffix = "mod 1";
    if (s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix) {
        s.remove_suffix(suffix.size());
    }
    return mod_one(parse_rational(s));
}

std::string circle_to_string(const Rational& value) { return to_string(mod_one(value)) + " mod 1"; }

Integer floor(const Rational& value) {
    Integer num = boost::multiprecision::numerator(value);
    Integer den = boost::multiprecision::denominator(value);
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

Rational mod_one(const Rational& value) { return value - Rational(floor(value)); }

bool is_integral(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

Integer as_integer(const Rational& value) {
    if (!is_integral(value)) throw std::invalid_argument("value " + to_string(value) + " is not an integer");
    return boost::multiprecision::numerator(value);
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a), y = abs(b);
    while (y != 0) {
        Integer r = x % y;
        x = y;
        y = r;
    }
    return x;
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in sparse elimination");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in sparse elimination");
    return out;
}

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool is_integral(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integral(x); });
}

}  // namespace gcoh
