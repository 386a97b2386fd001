#pragma once

// Elementary number theory on machine words and BigInt: integer square root,
// primality, factorization up to 2^64, divisor enumeration, p-adic valuation.

#include <cstdint>
#include <vector>

#include "vdgap/bigint.hpp"

namespace vdgap {

std::uint64_t isqrt_u64(std::uint64_t n);
bool is_perfect_square_u64(std::uint64_t n, std::uint64_t* root = nullptr);

bool is_prime_u64(std::uint64_t n);

// Prime factorization of 1 <= n <= 2^64 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n);

// All positive divisors in ascending order. Requires 1 <= n <= 2^64.
std::vector<BigInt> divisors(const BigInt& n);

// Largest e with p^e | n. Requires n != 0; p must be prime (verified for p <= 2^64,
// caller-asserted beyond that).
std::uint64_t p_adic_valuation(const BigInt& n, const BigInt& p);

// Squarefree test by trial division; requires 1 <= d <= 10^12 (the certificate
// from trial division up to 10^6 does not extend further).
bool is_squarefree(std::int64_t d);

}  // namespace vdgap
