#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace crownlab {

/// Upper bound on any modulus handled here; keeps every intermediate product
/// well inside 64 bits.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

bool is_odd_prime(std::int64_t v);

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t v);

/// Bezout data for distinct odd primes p, q.
///
/// alpha*p + beta*q == 1 with max(|alpha p|, |beta q|) <= (pq+1)/2. Exactly one
/// of alpha*p, beta*q is positive; that one is `x` and x' = pq - x + 1. The
/// prime dividing x is `x_prime_factor`; alpha_prime and beta_prime are
/// computed with that prime in the role of p, i.e. alpha' = (q'+1)/2 - a'
/// where a' is its Bezout coefficient, and beta' = (p'+3)/2.
struct BezoutData {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t x = 0;
    std::int64_t x_prime = 0;
    std::int64_t x_prime_factor = 0;  // the prime dividing x
    std::int64_t alpha_prime = 0;
    std::int64_t beta_prime = 0;
};

BezoutData bounded_bezout(std::int64_t p, std::int64_t q);

/// The two values 1 < y < pq with gcd(y,pq) != 1 and gcd(y-1,pq) != 1,
/// smaller first.
std::pair<std::int64_t, std::int64_t> conflict_pair(std::int64_t p, std::int64_t q);

/// All 1 < y < p^k q with gcd(y, p^k q) != 1 and gcd(y-1, p^k q) != 1, sorted.
std::vector<std::int64_t> conflict_values(std::int64_t p, int k, std::int64_t q);

/// Translation indices r in [1, mn+1] (m = pq) at which neither canonical
/// core orientation gives a cycle, sorted.
std::vector<std::int64_t> exceptional_r(std::int64_t p, std::int64_t q, std::int64_t n);

}  // namespace crownlab
