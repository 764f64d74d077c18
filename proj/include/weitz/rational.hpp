#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace weitz {

// All coefficients in the toolkit are exact rationals.  No floating point
// is used anywhere; mpq_class keeps values canonicalized (lowest terms,
// positive denominator) after every operation.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Int factorial_z(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial_z(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Rat rat_binomial(unsigned long n, unsigned long k) { return Rat(binomial_z(n, k)); }

// n-th Catalan number C(2n,n)/(n+1); catalan(0) = 1.
inline Int catalan_z(unsigned long n) { return binomial_z(2 * n, n) / Int(n + 1); }

}  // namespace weitz
