#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace rqa {

// Exact arithmetic everywhere: no floating point in this library.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// binomial coefficient with the usual zero conventions (0 when k < 0 or k > n)
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

// n! / (parts[0]! * parts[1]! * ...) where the parts sum to n
inline Integer multinomial(long n, const std::vector<long>& parts) {
    Integer r = factorial(n);
    for (long p : parts) r /= factorial(p);
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

} // namespace rqa
