#pragma once

// Exhaustive counting kernels. Each has an OpenMP version and a `_serial`
// reference that walks the same search space with an odometer; both must
// return identical results. Parallel versions split the flat candidate index
// into contiguous static chunks and merge per-thread tallies by summation, so
// results do not depend on the worker count. `workers` <= 0 means the OpenMP
// default.

#include "bcs/gf.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bcs::kernels {

struct FiberTally {
    /// Number of block companion matrices per characteristic polynomial,
    /// indexed by monic_index of the polynomial.
    std::vector<std::uint64_t> by_poly;
    std::uint64_t nonsingular = 0;
    /// Matrices whose order is exactly Q^{mn} - 1.
    std::uint64_t singer_by_order = 0;
    /// Matrices where "order Q^{mn}-1" and "primitive char poly" disagree.
    std::uint64_t criterion_disagreements = 0;

    void merge(const FiberTally& other);
    friend bool operator==(const FiberTally&, const FiberTally&) = default;
};

/// Scans all Q^{m^2 n} (m,n)-block companion matrices over F. `primitive`
/// flags, per monic degree-mn polynomial index, whether it is primitive.
FiberTally fiber_tally(const Field& F, unsigned m, unsigned n, std::span<const std::uint8_t> primitive,
                       int workers = 0);
FiberTally fiber_tally_serial(const Field& F, unsigned m, unsigned n, std::span<const std::uint8_t> primitive);

/// Tally for explicitly listed candidates; `blocks` holds m*m*n base-field
/// entries per candidate (block k, row i, column j at k*m*m + i*m + j).
FiberTally fiber_tally_of(const Field& F, unsigned m, unsigned n, std::span<const std::uint8_t> primitive,
                          std::span<const Elem> blocks);

/**
 * Layout of the per-element orbit coordinates used by the basis kernels:
 * for a top-field element v (by encoding), `rows` consecutive rows of `dim`
 * base-field coordinates, row k holding alpha^k v.
 */
struct OrbitTable {
    std::vector<Elem> coords;
    std::uint64_t elements = 0;
    unsigned rows = 0; // n
    unsigned dim = 0;  // mn
};

/// Number of m-tuples (v_1..v_m) of top elements whose orbit rows form a basis.
std::uint64_t ordered_bases(const Field& base, const OrbitTable& orbits, unsigned m, int workers = 0);
std::uint64_t ordered_bases_serial(const Field& base, const OrbitTable& orbits, unsigned m);

/// For each listed m-tuple (flattened), 1 if its orbit rows form a basis.
std::vector<std::uint8_t> basis_flags(const Field& base, const OrbitTable& orbits, unsigned m,
                                      std::span<const Elem> tuples, int workers = 0);
std::vector<std::uint8_t> basis_flags_serial(const Field& base, const OrbitTable& orbits, unsigned m,
                                             std::span<const Elem> tuples);

/// r-tuples of monic degree-n polynomials with trivial common gcd.
std::uint64_t coprime_monic(const FieldPtr& F, unsigned r, unsigned n, int workers = 0);
std::uint64_t coprime_monic_serial(const FieldPtr& F, unsigned r, unsigned n);

/// r-tuples of polynomials of degree < n (zero allowed) with gcd a nonzero constant.
std::uint64_t coprime_all(const FieldPtr& F, unsigned r, unsigned n, int workers = 0);
std::uint64_t coprime_all_serial(const FieldPtr& F, unsigned r, unsigned n);

/// Coprime pairs (f, g) of nonzero polynomials of degree < n:
/// first = pairs with g monic, second = all pairs.
std::pair<std::uint64_t, std::uint64_t> sigma(const FieldPtr& F, unsigned n, int workers = 0);
std::pair<std::uint64_t, std::uint64_t> sigma_serial(const FieldPtr& F, unsigned n);

/// Nonsingular n x n Toeplitz matrices (c_{n+i-j}) over F.
std::uint64_t toeplitz_nonsingular(const Field& F, unsigned n, int workers = 0);
std::uint64_t toeplitz_nonsingular_serial(const Field& F, unsigned n);

/// Nilpotent m x m matrices over F.
std::uint64_t nilpotent(const Field& F, unsigned m, int workers = 0);
std::uint64_t nilpotent_serial(const Field& F, unsigned m);

} // namespace bcs::kernels
