#pragma once

#include <gmpxx.h>

#include <string>

#include "qvoa/errors.hpp"

namespace qvoa {

// All exact arithmetic in the project runs on GMP integers and rationals.
// No floating point is used anywhere, including for bounds.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_integer(const Rat& r) {
    ensure(is_integer(r), "expected an integer, got " + r.get_str());
    return r.get_num();
}

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Parses "p" or "p/q" with optional sign; used for --epsilon.
inline Rat parse_rational(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw invalid_parameter("cannot parse rational: '" + s + "'");
    }
}

} // namespace qvoa
