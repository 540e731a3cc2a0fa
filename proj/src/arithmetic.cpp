#include "crownlab/arithmetic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crownlab/errors.hpp"

namespace crownlab {

namespace {

void require_prime_pair(std::int64_t p, std::int64_t q) {
    if (!is_odd_prime(p) || !is_odd_prime(q) || p == q) {
        throw InvalidInput("expected distinct odd primes, got " + std::to_string(p) + " and " + std::to_string(q));
    }
    if (p * q > kMaxModulus) {
        throw InvalidInput("pq exceeds the supported modulus");
    }
}

// Inverse of a modulo m for coprime a, m, in [1, m).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = a % m;
    std::int64_t r = m;
    std::int64_t old_s = 1;
    std::int64_t s = 0;
    while (r != 0) {
        std::int64_t quotient = old_r / r;
        std::int64_t t = old_r - quotient * r;
        old_r = r;
        r = t;
        t = old_s - quotient * s;
        old_s = s;
        s = t;
    }
    std::int64_t inv = old_s % m;
    return inv < 0 ? inv + m : inv;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool is_odd_prime(std::int64_t v) {
    if (v < 3 || v % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= v; d += 2) {
        if (v % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t v) {
    if (v < 1) {
        throw InvalidInput("factorize needs a positive integer");
    }
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        int e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

BezoutData bounded_bezout(std::int64_t p, std::int64_t q) {
    require_prime_pair(p, q);
    const std::int64_t pq = p * q;
    const std::int64_t bound = (pq + 1) / 2;

    // Extended Euclid gives alpha modulo q; the bounded representative is
    // either that residue or one shift of it by q.
    std::int64_t alpha = inverse_mod(p, q);
    if (alpha * p > bound) {
        alpha -= q;
    }
    const std::int64_t beta = (1 - alpha * p) / q;

    BezoutData b;
    b.p = p;
    b.q = q;
    b.alpha = alpha;
    b.beta = beta;
    const bool p_side = alpha * p > 0;
    b.x = p_side ? alpha * p : beta * q;
    b.x_prime = pq - b.x + 1;
    b.x_prime_factor = p_side ? p : q;
    const std::int64_t other = p_side ? q : p;
    const std::int64_t coeff = p_side ? alpha : beta;
    b.alpha_prime = (other + 1) / 2 - coeff;
    b.beta_prime = (b.x_prime_factor + 3) / 2;
    return b;
}

std::pair<std::int64_t, std::int64_t> conflict_pair(std::int64_t p, std::int64_t q) {
    const BezoutData b = bounded_bezout(p, q);
    return std::minmax(b.x, b.x_prime);
}

std::vector<std::int64_t> conflict_values(std::int64_t p, int k, std::int64_t q) {
    require_prime_pair(p, q);
    if (k < 1) {
        throw InvalidInput("conflict_values needs k >= 1");
    }
    std::int64_t power = 1;  // p^(k-1)
    for (int i = 1; i < k; ++i) {
        power *= p;
        if (power * p * q > kMaxModulus) {
            throw InvalidInput("p^k q exceeds the supported modulus");
        }
    }
    const auto [x, x_prime] = conflict_pair(p, q);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(2 * power));
    for (std::int64_t lambda = 0; lambda < power; ++lambda) {
        out.push_back(x + lambda * p * q);
        out.push_back(x_prime + lambda * p * q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> exceptional_r(std::int64_t p, std::int64_t q, std::int64_t n) {
    require_prime_pair(p, q);
    if (n < 1) {
        throw InvalidInput("exceptional_r needs n >= 1");
    }
    const std::int64_t m = p * q;
    const auto [x, x_prime] = conflict_pair(p, q);
    std::vector<std::int64_t> out;
    for (std::int64_t y : {x, x_prime}) {
        // The canonical core shift (m+1)/2 - (r-1) lands on y modulo m.
        for (std::int64_t shift = mod((m + 1) / 2 - y, m); shift <= m * n; shift += m) {
            out.push_back(shift + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace crownlab
