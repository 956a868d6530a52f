#pragma once

#include <gmpxx.h>

#include <string>

namespace qwalk {

using Integer = mpz_class;
using Rat = mpq_class;

// a/b in lowest terms
inline Rat ratio(const Integer& a, const Integer& b) {
    Rat r(a, b);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(long n, long k);
Integer factorial(long n);
Integer catalan(long n);

}  // namespace qwalk
