#pragma once

// Raw row-major square-matrix routines over a Field. These are the inner
// loops of the enumeration kernels, so they take spans and caller-owned
// scratch instead of allocating.

#include "bcs/gf.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bcs::dense {

void mul(const Field& F, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out, std::size_t n);

bool is_identity(std::span<const Elem> a, std::size_t n);
bool is_zero(std::span<const Elem> a);

/// out = a^e; `scratch` needs 2 n^2 entries.
void pow(const Field& F, std::span<const Elem> a, std::uint64_t e, std::span<Elem> out, std::size_t n,
         std::span<Elem> scratch);

/// Determinant by elimination; destroys `work`.
Elem determinant_inplace(const Field& F, std::span<Elem> work, std::size_t n);

/// Rank of a rows x cols matrix by elimination; destroys `work`.
std::size_t rank_inplace(const Field& F, std::span<Elem> work, std::size_t rows, std::size_t cols);

/// Characteristic polynomial det(X I - A) via Hessenberg reduction.
/// Destroys `work` (n^2); writes n+1 coefficients, constant term first.
class CharPolyWorkspace {
public:
    void compute(const Field& F, std::span<Elem> work, std::size_t n, std::span<Elem> out);

private:
    std::vector<Elem> polys_; // (n+1) x (n+1), row k holds p_k
};

/// True iff a (nonsingular) has multiplicative order exactly `order`, given
/// the distinct primes dividing `order`.
bool has_exact_order(const Field& F, std::span<const Elem> a, std::size_t n, std::uint64_t order,
                     std::span<const std::uint64_t> order_primes);

/// Bit-packed F_2 matrices with n <= 64: row i is a mask of its columns.
namespace gf2 {
void mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, std::span<std::uint64_t> out,
         std::size_t n);
bool has_exact_order(std::span<const std::uint64_t> a, std::size_t n, std::uint64_t order,
                     std::span<const std::uint64_t> order_primes);
} // namespace gf2

} // namespace bcs::dense
