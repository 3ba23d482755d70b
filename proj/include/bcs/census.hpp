#pragma once

/**
 * @file census.hpp
 * @brief Exhaustive enumeration of block companion fibers, ordered bases,
 * splitting subspaces, coprime polynomial tuples and Toeplitz matrices, each
 * paired with the closed form it is expected to match.
 *
 * Every exhaustive operation first computes the size of its search space and
 * throws CeilingExceeded when it is above CensusOptions::ceiling. Sampled
 * estimators are separate functions and never feed exact comparisons.
 */

#include "bcs/gf.hpp"
#include "bcs/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcs {

inline constexpr std::uint64_t kDefaultCeiling = std::uint64_t{1} << 26;

/// Exhaustive search space larger than the configured ceiling.
class CeilingExceeded : public std::runtime_error {
public:
    CeilingExceeded(const std::string& what, std::uint64_t required, std::uint64_t ceiling);
    std::uint64_t required() const { return required_; }
    std::uint64_t ceiling() const { return ceiling_; }

private:
    std::uint64_t required_, ceiling_;
};

struct CensusOptions {
    std::uint64_t ceiling = kDefaultCeiling;
    int workers = 0;
};

/// base^exponent, or CeilingExceeded when that is above `ceiling` (required()
/// is UINT64_MAX if the size does not even fit in 64 bits).
std::uint64_t search_space(const std::string& what, std::uint64_t base, unsigned exponent, std::uint64_t ceiling);

// ---------------------------------------------------------------- fibers

enum class PolyClass { irreducible, primitive };
const char* to_string(PolyClass c);

struct FiberEntry {
    std::string poly; // to_text form, constant term first
    PolyClass cls = PolyClass::irreducible;
    std::uint64_t fiber_size = 0;
};

struct FiberReport {
    std::uint64_t q = 0;
    unsigned m = 0, n = 0;
    std::uint64_t assemblies = 0;
    std::vector<FiberEntry> per_poly; // irreducible polynomials in index order
    std::uint64_t total_bci = 0, total_bcs = 0;
    std::uint64_t formula_fiber = 0, formula_bcs = 0, formula_bci = 0;
    /// Nonsingular matrices of order q^{mn}-1 (should equal total_bcs).
    std::uint64_t singer_by_order = 0;
    std::uint64_t criterion_disagreements = 0;
    bool all_match = false;

    std::uint64_t min_fiber() const;
    std::uint64_t max_fiber() const;
    bool uniform() const { return min_fiber() == max_fiber(); }
    bool surjective() const { return min_fiber() > 0; }
};

/// q^{m(m-1)(n-1)} * prod_{i=1}^{m-1} (q^m - q^i).
std::uint64_t conjectured_fiber_size(std::uint64_t q, unsigned m, unsigned n);
/// phi(q^{mn}-1)/(mn) * conjectured_fiber_size.
std::uint64_t conjectured_singer_count(std::uint64_t q, unsigned m, unsigned n);
/// The closed form for m = 2: q^{2n-1}(q-1).
std::uint64_t m2_fiber_size(std::uint64_t q, unsigned n);

FiberReport enumerate_fibers(std::uint64_t q, unsigned m, unsigned n, const CensusOptions& opts = {});
FiberReport enumerate_fibers_serial(std::uint64_t q, unsigned m, unsigned n, const CensusOptions& opts = {});

/// Monte Carlo estimate with a normal-approximation 95% interval.
struct SampleEstimate {
    std::uint64_t sample_size = 0, hits = 0, population = 0;
    double estimate = 0, lower = 0, upper = 0;
};

SampleEstimate estimate_from_hits(std::uint64_t population, std::uint64_t sample_size, std::uint64_t hits);

/// Estimated number of block companion Singer cycles from uniform samples.
SampleEstimate sample_singer_count(std::uint64_t q, unsigned m, unsigned n, std::uint64_t sample_size,
                                   std::uint64_t seed);

// ---------------------------------------------------------------- bases and splitting subspaces

/// Tower for (q, m, n) with the canonical top generator as the default alpha.
FieldTower tower_for(std::uint64_t q, unsigned m, unsigned n);
Elem default_alpha(const FieldTower& tower);

/// Number of (v_1..v_m) with (v_1..v_m, a v_1..a v_m, ..., a^{n-1} v_m) a basis
/// over the base field. Throws std::invalid_argument("not a generator") if
/// alpha has degree below mn.
std::uint64_t count_ordered_bases_N(const FieldTower& tower, Elem alpha, const CensusOptions& opts = {});
std::uint64_t count_ordered_bases_N_serial(const FieldTower& tower, Elem alpha, const CensusOptions& opts = {});

/// N at the least root of f divided by q^{mn}-1; std::logic_error if inexact.
std::uint64_t fiber_via_N(const FieldTower& tower, const Poly& f, const CensusOptions& opts = {});

/// Groups the ordered bases by the matrix of multiplication by alpha.
struct BasisGrouping {
    std::uint64_t bases = 0;
    std::uint64_t classes = 0;
    std::uint64_t min_class = 0, max_class = 0;
    bool all_block_companion = false;
    bool all_char_poly_match = false;
    std::uint64_t centralizer = 0; // of one representative matrix
};

BasisGrouping group_bases_by_matrix(const FieldTower& tower, Elem alpha, const CensusOptions& opts = {});

struct SplittingSet {
    std::uint64_t subspaces_scanned = 0;
    /// Reduced echelon basis (as top-field elements) of each splitting subspace.
    std::vector<std::vector<Elem>> subspaces;
    std::uint64_t count() const { return subspaces.size(); }
};

/// Number of m-dimensional subspaces of an mn-dimensional space over F_q.
std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned k);

/// Scans every m-dimensional subspace in reduced echelon form, pivot sets in
/// lexicographic order.
SplittingSet enumerate_splitting_subspaces(const FieldTower& tower, Elem alpha, const CensusOptions& opts = {});

/// (q^{mn}-1)/(q^m-1) * q^{m(m-1)(n-1)}.
std::uint64_t conjectured_splitting_count(std::uint64_t q, unsigned m, unsigned n);
/// q^{m(m-1)(n-1)}.
std::uint64_t conjectured_pointed_count(std::uint64_t q, unsigned m, unsigned n);

/// For each nonzero x, the number of splitting subspaces containing x.
/// Throws std::invalid_argument for x = 0.
std::map<Elem, std::uint64_t> pointed_splitting_counts(const FieldTower& tower, const SplittingSet& set,
                                                       const std::vector<Elem>& base_points);
/// Same, for every nonzero element of the top field.
std::map<Elem, std::uint64_t> pointed_splitting_counts(const FieldTower& tower, const SplittingSet& set);

struct PartResult {
    bool passed = false;
    bool exhaustive = true;
    std::string detail;
};

struct ElemSplitResult {
    PartResult span_closure;  // U and its translates split
    PartResult translates;    // xU is a splitting subspace through x
    PartResult equal_pointed; // pointed counts agree across base points
    PartResult count_ratio;   // double count of pointed subspaces
    bool passed() const {
        return span_closure.passed && translates.passed && equal_pointed.passed && count_ratio.passed;
    }
};

/// Checks the four structural properties of splitting subspaces through
/// U = span{alpha^{in}}. Parts above the ceiling are sampled with `seed`.
ElemSplitResult verify_elemsplit(const FieldTower& tower, Elem alpha, const SplittingSet& set,
                                 const CensusOptions& opts = {}, std::uint64_t sample_size = 256,
                                 std::uint64_t seed = 1);

/// Sampled estimate of the number of splitting subspaces via random m-tuples.
SampleEstimate sample_splitting_count(const FieldTower& tower, Elem alpha, std::uint64_t sample_size,
                                      std::uint64_t seed);

// ---------------------------------------------------------------- coprime tuples

struct CoprimeCensus {
    std::uint64_t q = 0;
    unsigned r = 0, n = 0;
    std::uint64_t monic_coprime_count = 0, monic_formula = 0;
    std::uint64_t all_coprime_count = 0, all_formula = 0;
};

/// q^{rn} - q^{r(n-1)+1}.
std::uint64_t coprime_monic_formula(std::uint64_t q, unsigned r, unsigned n);
/// q^{rn} (1 - 1/q^{r-1} + (q-1)/q^{rn}) = q^{rn} - q^{rn-r+1} + q - 1.
std::uint64_t coprime_all_formula(std::uint64_t q, unsigned r, unsigned n);

CoprimeCensus coprime_census(std::uint64_t q, unsigned r, unsigned n, const CensusOptions& opts = {});

struct SigmaCensus {
    std::uint64_t q = 0;
    unsigned n = 0;
    std::uint64_t sigma_count = 0, sigma1_count = 0;
    std::uint64_t sigma_formula = 0, sigma1_formula = 0;
};

SigmaCensus sigma_census(std::uint64_t q, unsigned n, const CensusOptions& opts = {});

// ---------------------------------------------------------------- Toeplitz and binomials

struct ToeplitzCensus {
    std::uint64_t q = 0;
    unsigned n = 0;
    std::uint64_t nonsingular = 0;
    std::uint64_t formula = 0; // q^{2n-1} - q^{2n-2}
};

ToeplitzCensus toeplitz_census(std::uint64_t q, unsigned n, const CensusOptions& opts = {});

struct TrinomialRoute {
    std::uint64_t q = 0;
    unsigned n = 0;
    std::optional<std::pair<Elem, Elem>> ab; // X^{2n} - aX - b, empty when none is irreducible
    std::uint64_t basis_count = 0;           // beta with S_beta a basis
    std::uint64_t equivalence_failures = 0;  // beta where basis <=> T_c nonsingular fails
    std::uint64_t tgl = 0;                   // basis_count / q
    bool applies() const { return ab.has_value(); }
};

TrinomialRoute toeplitz_via_trinomial(std::uint64_t q, unsigned n, const CensusOptions& opts = {});

struct BinomialVerdict {
    bool criterion = false;
    bool direct = false;
    bool agree() const { return criterion == direct; }
};

/// Criterion and direct irreducibility test for X^d - b over F_q (b as a field
/// element encoding). Throws std::invalid_argument for b = 0 or d < 2.
BinomialVerdict binomial_irreducibility(std::uint64_t q, unsigned d, Elem b);

struct FermatWitness {
    unsigned n = 0; // X^{2n} - b
    Elem b = 0;
    bool criterion = false;
    std::optional<bool> direct; // run when the degree is small enough
};

/// Throws std::invalid_argument when q is even or q-1 has no odd prime factor.
std::vector<FermatWitness> fermat_condition_search(std::uint64_t q, unsigned count);

// ---------------------------------------------------------------- bounds and counting formulas

using Rational = boost::multiprecision::cpp_rational;
std::string to_string(const Rational& r);

struct BoundsTriple {
    std::uint64_t q = 0;
    unsigned m = 0, n = 0;
    Rational L, L_star, U;
    std::optional<std::uint64_t> observed_min_fiber, observed_max_fiber;
    bool within() const;          // L <= min and max <= U (true when nothing observed)
    bool star_below() const;      // L* <= L
};

BoundsTriple bounds_check(std::uint64_t q, unsigned m, unsigned n, std::optional<std::uint64_t> min_fiber = {},
                          std::optional<std::uint64_t> max_fiber = {});

struct PolynomialCounts {
    std::uint64_t q = 0;
    unsigned d = 0;
    std::uint64_t irreducible_scan = 0, primitive_scan = 0;
    std::uint64_t irreducible_formula = 0, primitive_formula = 0;
};

PolynomialCounts polynomial_counts(std::uint64_t q, unsigned d, const CensusOptions& opts = {});

} // namespace bcs
