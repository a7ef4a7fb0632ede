#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

// Mixed rational/integer equality: boost's templates recurse under C++20
// rewritten comparisons, so exact non-template overloads take precedence.
namespace boost {
#define DCHAR_MIXED_EQ(T)                                                                                               \
    inline bool operator==(const rational<std::int64_t>& a, T b) { return a.denominator() == 1 && a.numerator() == b; } \
    inline bool operator!=(const rational<std::int64_t>& a, T b) { return !(a == b); }                                  \
    inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }                                     \
    inline bool operator!=(T b, const rational<std::int64_t>& a) { return !(a == b); }
DCHAR_MIXED_EQ(int)
DCHAR_MIXED_EQ(long)
DCHAR_MIXED_EQ(long long)
#undef DCHAR_MIXED_EQ
}  // namespace boost

namespace dchar {

/// Exact rational number. All discrete-regime cochains use this type.
using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const Rational& x) {
    const auto n = x.numerator();
    const auto d = x.denominator();  // always positive
    auto q = n / d;
    if ((n % d != 0) && (n < 0)) --q;
    return q;
}

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

/// Canonical representative of x mod 1 in [0, 1).
inline Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

/// Representative of x mod 1 in [-1/2, 1/2).
inline Rational centered_frac(const Rational& x) {
    Rational r = frac(x);
    if (r >= Rational(1, 2)) r -= 1;
    return r;
}

inline std::string to_string(const Rational& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> std::int64_t {
        if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t pos = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            pos = 1;
        }
        if (pos == s.size()) throw std::invalid_argument("malformed rational literal");
        std::int64_t v = 0;
        for (; pos < s.size(); ++pos) {
            const char c = s[pos];
            if (c < '0' || c > '9')
                throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
            if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, c - '0', &v))
                throw std::overflow_error("rational literal out of range");
        }
        return neg ? -v : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    return Rational(parse_int(text.substr(0, slash)), den);
}

inline double to_double(const Rational& x) {
    return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

}  // namespace dchar
