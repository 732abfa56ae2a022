#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hgc {

// Exact rational coefficients. GMP keeps arithmetic exact; homology ranks
// and cancellations (dT = 0 and friends) depend on there being no rounding
// anywhere in the system.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() <= 0) throw std::invalid_argument("nonpositive denominator: " + s);
    return q;
}

// "p/q" with q omitted when 1; denominators kept positive by mpq_class.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Rational factorial(int k) {
    Rational r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace hgc
