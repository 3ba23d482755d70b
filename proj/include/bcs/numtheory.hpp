#pragma once

/**
 * @file numtheory.hpp
 * @brief Integer support: factorization, totient, Moebius, and the closed-form
 * counts of primitive and irreducible polynomials over F_q.
 *
 * Everything works in native 64-bit words. Values that would leave that range
 * raise bcs::OverflowError instead of wrapping.
 */

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bcs {

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline constexpr std::uint64_t kDefaultIntegerCeiling = std::numeric_limits<std::uint64_t>::max();

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete factorization of `value`; factors sorted by strictly increasing prime.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;

    std::vector<std::uint64_t> primes() const;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin; the fixed witness set is exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division up to 2^20, then Brent's variant of Pollard rho.
Factorization factorize(std::uint64_t n, std::uint64_t ceiling = kDefaultIntegerCeiling);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// If q = p^e with p prime, returns {p, e}; otherwise throws std::invalid_argument.
std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q);
bool is_prime_power(std::uint64_t q);

/// base^exp, throwing OverflowError when the result exceeds `ceiling`.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                          std::uint64_t ceiling = kDefaultIntegerCeiling);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                          std::uint64_t ceiling = kDefaultIntegerCeiling);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// phi(q^d - 1) / d. Throws std::logic_error if the division is not exact.
std::uint64_t count_primitive_polys(std::uint64_t q, unsigned d);

/// (1/d) * sum over e | d of mu(d/e) q^e.
std::uint64_t count_irreducible_polys(std::uint64_t q, unsigned d);

/// |GL_m(F_q)| = prod_{i=0}^{m-1} (q^m - q^i).
std::uint64_t general_linear_order(std::uint64_t q, unsigned m);

} // namespace bcs
