#pragma once

#include <gmpxx.h>

#include <string>

namespace logsark {

using Rational = mpq_class;

/// "p/q" in lowest terms, integers printed without a denominator.
inline std::string to_string(const Rational& value)
{
    Rational canonical = value;
    canonical.canonicalize();
    return canonical.get_str();
}

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace logsark
