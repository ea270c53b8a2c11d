#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace celestial {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational conj(const Rational& r) { return r; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// accepts "n", "-n", "n/d"
Rational parse_rational(std::string_view text);

// Integer helpers used when clearing denominators.
Integer lcm_of_denominators(const Rational* begin, const Rational* end);

} // namespace celestial
