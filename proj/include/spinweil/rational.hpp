#ifndef SPINWEIL_RATIONAL_HPP
#define SPINWEIL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace spinweil {

using Rational = mpq_class;

// Accepts "7", "-3/4"; result is canonical.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

inline Rational frac(long num, long den)
{
    Rational r(num);
    r /= den;
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace spinweil

#endif
