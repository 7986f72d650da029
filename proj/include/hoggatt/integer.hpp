#pragma once

#include <gmpxx.h>

#include <string>

#include "hoggatt/errors.hpp"

namespace hoggatt {

// Arbitrary-precision signed integer, the scalar for every integer-valued
// family.  GMP already gives canonical zero and exact +,*,- so we only add
// the checked operations the library needs.
using Integer = mpz_class;

// Quotient a/b with a mandatory zero-remainder check.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw InexactDivision("exact_div: division by zero");
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw InexactDivision("exact_div: nonzero remainder");
    return q;
}

inline Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool is_unit(const Integer& a) { return a == 1 || a == -1; }

inline std::string to_canonical_string(const Integer& a) { return a.get_str(); }

// m*(m-1)/2 for any integer m (negative m included); exponent bookkeeping
// for the signed determinant identities.
inline long choose2(long m) { return m * (m - 1) / 2; }

} // namespace hoggatt
