#ifndef HMF_RATIONAL_HPP
#define HMF_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hmf {

using Rational = mpq_class;
using BigInt = mpz_class;

/* Parses "a", "-a", or "a/b" (b != 0).  Throws InvalidArgument. */
Rational parse_rational(std::string_view text);

std::string to_string(Rational const & q);
std::string to_string(BigInt const & z);

double to_double(Rational const & q);

/* Fractional part in [0, 1). */
Rational frac(Rational const & q);

BigInt floor_div(BigInt const & a, BigInt const & b);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

/* Narrowing conversion that throws when the value does not fit. */
std::int64_t to_int64(BigInt const & z);

BigInt ipow(BigInt const & base, unsigned exponent);
Rational ipow(Rational const & base, unsigned exponent);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

/* Prime factorisation by trial division, ascending primes. */
struct PrimePower {
    std::int64_t prime;
    int exponent;
};
std::vector<PrimePower> factor_integer(std::int64_t n);

}  // namespace hmf

#endif  // HMF_RATIONAL_HPP
