#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace opcount {

// All counting is done over arbitrary-precision integers; polynomial and
// series coefficients live in the rationals. GMP's canonical mpq_class keeps
// rationals in lowest terms with a positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Narrowing from Rat to Int; a non-unit denominator means a formula was
// transcribed wrong, so it is a logic error rather than bad input.
inline Int to_int_exact(const Rat& q, const char* what = "to_int_exact") {
    if (!is_integral(q))
        throw std::logic_error(std::string(what) + ": value " + q.get_str() +
                               " is not an integer");
    return q.get_num();
}

inline double to_double(const Rat& q) { return q.get_d(); }

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Binomial coefficient, total over all integer arguments: 0 for k < 0 or
// (n >= 0 and k > n); for n < 0 the polynomial extension
// n(n-1)...(n-k+1)/k! = (-1)^k C(k-n-1, k).
inline Int binomial(long n, long k) {
    if (k < 0) return 0;
    if (n < 0) {
        Int r = binomial(k - n - 1, k);
        return (k % 2 == 0) ? r : Int(-r);
    }
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

inline Int catalan(long n) {
    if (n < 0) throw std::invalid_argument("catalan: negative argument");
    Int r = binomial(2 * n, n);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return r;
}

// Stirling number of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1);
// zero outside the triangle, S(0,0) = 1.
inline Int stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return 1;
    std::vector<Int> row(static_cast<size_t>(k) + 1, Int(0));
    row[0] = 1;  // S(0,0)
    for (long m = 1; m <= n; ++m) {
        long top = std::min<long>(k, m);
        for (long j = top; j >= 1; --j) {
            row[static_cast<size_t>(j)] =
                j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
        }
        row[0] = 0;
    }
    return row[static_cast<size_t>(k)];
}

// Rising factorial (x)_n = x(x+1)...(x+n-1), extended to negative n by
// (x)_{-m} = 1/((x-1)(x-2)...(x-m)), so that (x)_{m+n} = (x)_m (x+m)_n
// holds for all integers.
inline Rat pochhammer(const Rat& x, long n) {
    Rat r(1);
    if (n >= 0) {
        Rat f = x;
        for (long t = 0; t < n; ++t) {
            r *= f;
            f += 1;
        }
    } else {
        Rat f = x - 1;
        for (long t = 0; t < -n; ++t) {
            if (f == 0) throw std::invalid_argument("pochhammer: pole at negative index");
            r /= f;
            f -= 1;
        }
    }
    return r;
}

// 2^e as an exact rational (e may be negative).
inline Rat pow2(long e) {
    Rat r(1);
    if (e >= 0)
        mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(),
                     static_cast<unsigned long>(e));
    else
        mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(),
                     static_cast<unsigned long>(-e));
    return r;
}

inline Int pow_int(const Int& base, long e) {
    if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace opcount
