#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace schubert {

// Exact arithmetic everywhere; no floating point in any computation path.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binom(long m, long k) {
    if (m < 0 || k < 0 || k > m) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return r;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// 2^e for possibly negative e, as an exact rational.
inline Rat pow2(long e) {
    Rat r(1);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

} // namespace schubert
