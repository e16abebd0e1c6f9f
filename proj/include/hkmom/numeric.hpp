#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hkmom {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer ipow(const Integer& base, long e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Rational qpow(const Rational& base, long e) {
    if (e == 0) return 1;
    if (e < 0) {
        if (base == 0) throw std::domain_error("qpow: zero base, negative exponent");
        return 1 / qpow(base, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

/// num/den as a canonical rational (the two-argument mpq_class constructor
/// does not reduce by the gcd on its own).
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}
inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const Integer& z) { return z.get_d(); }

// Exact rational value of a double (every finite double is a dyadic rational).
inline Rational rational_of(double x) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// splitmix64, used to derive independent per-sample RNG seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ mix64(0x9e3779b97f4a7c15ULL * (index + 1)));
}

}  // namespace hkmom
