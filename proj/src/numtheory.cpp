#include "bcs/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bcs {

namespace {

constexpr std::uint64_t kTrialBound = 1u << 20;

using u128 = unsigned __int128;

std::uint64_t rho_brent(std::uint64_t n, std::uint64_t c) {
    // Brent's cycle detection with batched gcds; deterministic for a given c.
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t batch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
                y = f(y);
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void split_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t d = rho_brent(n, c);
        if (d != n && d != 1) {
            split_into(d, out);
            split_into(n / d, out);
            return;
        }
    }
}

} // namespace

std::vector<std::uint64_t> Factorization::primes() const {
    std::vector<std::uint64_t> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // First twelve primes are a complete witness set below 3.3e24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n, std::uint64_t ceiling) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n > ceiling) throw OverflowError("factorize: n exceeds the configured ceiling");

    Factorization result;
    result.value = n;
    std::map<std::uint64_t, unsigned> found;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p < kTrialBound && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (rest % p == 0) {
            ++found[p];
            rest /= p;
        }
    }
    if (rest > 1) split_into(rest, found);
    for (auto [p, e] : found) result.factors.push_back({p, e});
    return result;
}

std::uint64_t euler_phi(std::uint64_t n) {
    const auto fac = factorize(n);
    std::uint64_t phi = n;
    for (const auto& f : fac.factors) phi = phi / f.prime * (f.prime - 1);
    return phi;
}

int moebius(std::uint64_t n) {
    const auto fac = factorize(n);
    for (const auto& f : fac.factors)
        if (f.exponent > 1) return 0;
    return fac.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& f : factorize(n).factors) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= f.exponent; ++k) {
            pk *= f.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    const auto fac = factorize(q);
    if (fac.factors.size() != 1)
        throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {fac.factors[0].prime, fac.factors[0].exponent};
}

bool is_prime_power(std::uint64_t q) {
    return q >= 2 && factorize(q).factors.size() == 1;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t ceiling) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r) || r > ceiling)
        throw OverflowError("integer product exceeds the configured ceiling");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t ceiling) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base, ceiling);
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

std::uint64_t count_primitive_polys(std::uint64_t q, unsigned d) {
    if (d == 0) throw std::invalid_argument("count_primitive_polys: degree must be positive");
    const std::uint64_t total = euler_phi(checked_pow(q, d) - 1);
    if (total % d != 0) throw std::logic_error("count_primitive_polys: phi(q^d-1) not divisible by d");
    return total / d;
}

std::uint64_t count_irreducible_polys(std::uint64_t q, unsigned d) {
    if (d == 0) throw std::invalid_argument("count_irreducible_polys: degree must be positive");
    __int128 sum = 0;
    for (std::uint64_t e : divisors(d)) {
        const int mu = moebius(d / e);
        if (mu != 0) sum += static_cast<__int128>(mu) * checked_pow(q, static_cast<unsigned>(e));
    }
    if (sum <= 0 || sum % d != 0) throw std::logic_error("count_irreducible_polys: non-integral count");
    return static_cast<std::uint64_t>(sum / d);
}

std::uint64_t general_linear_order(std::uint64_t q, unsigned m) {
    const std::uint64_t qm = checked_pow(q, m);
    std::uint64_t r = 1, qi = 1;
    for (unsigned i = 0; i < m; ++i) {
        r = checked_mul(r, qm - qi);
        qi *= q;
    }
    return r;
}

} // namespace bcs
