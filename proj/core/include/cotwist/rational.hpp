#pragma once

#include <gmpxx.h>

#include <string>

#include "cotwist/errors.hpp"

namespace cotwist {

// Exact base scalars. mpq_class keeps fractions reduced with positive
// denominator, which is exactly the invariant the rest of the library
// relies on for zero tests and canonical serialisation.
using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

inline Rational inv(const Rational& x) {
    if (is_zero(x)) throw NonUnitError("division by zero rational");
    return Rational(1) / x;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw InvalidInputError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

} // namespace cotwist
