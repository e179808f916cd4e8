#pragma once

#include <gmpxx.h>
#include <string>

namespace slopecalc {

// Exact rational slope/valuation type. GMP keeps numerators and
// denominators canonical (gcd-reduced, positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den < 0) { num = -num; den = -den; }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace slopecalc
