#ifndef ODDBLOCK_INTS_HPP
#define ODDBLOCK_INTS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace oddblock {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact quotient; aborts the arithmetic invariant if b does not divide a.
inline Int int_divexact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool int_divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rat rat(long n, long d = 1) { Rat r(n, d); r.canonicalize(); return r; }

// 10^-k as an exact rational.
inline Rat pow10_neg(unsigned k) {
    Rat r(Int(1), pow_int(Int(10), k));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

} // namespace oddblock

#endif
