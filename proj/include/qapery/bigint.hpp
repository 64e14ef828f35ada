#pragma once

#include <gmpxx.h>

#include <string>

namespace qapery {

// Arbitrary-precision signed integer. All polynomial coefficients in this
// library are exact; there is no floating point anywhere.
using Int = mpz_class;

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

inline Int from_decimal(const std::string& s) { return Int(s, 10); }

// c^e for e >= 0.
inline Int int_pow(const Int& c, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), c.get_mpz_t(), e);
    return r;
}

}  // namespace qapery
