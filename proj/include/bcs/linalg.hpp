#pragma once

/**
 * @file linalg.hpp
 * @brief Dense matrices over a finite field: characteristic polynomial,
 * multiplicative order, Singer cycles, (m,n)-block companion matrices,
 * regular representations and the block companion lift of an irreducible
 * polynomial.
 *
 * An (m,n)-block companion matrix is the mn x mn matrix with I_m blocks on
 * the block subdiagonal, arbitrary m x m blocks C_0..C_{n-1} down the last
 * block column, and zeros elsewhere.
 */

#include "bcs/gf.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcs {

class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(FieldPtr field, std::size_t n);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::span<const Elem> data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
               same_field(*a.field_, *b.field_);
    }

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Elem c);
Matrix matrix_pow(const Matrix& a, std::uint64_t e);

Elem determinant(const Matrix& a);
std::size_t rank(const Matrix& a);
bool is_nonsingular(const Matrix& a);

/// Companion matrix of a monic polynomial: subdiagonal ones, last column
/// holding -f_0, ..., -f_{d-1}.
Matrix companion(const Poly& f);

/// det(X I - T). Throws std::invalid_argument for non-square input.
Poly char_poly(const Matrix& t);

/// True iff T has multiplicative order exactly `order`.
bool has_exact_order(const Matrix& t, std::uint64_t order);

/// Exact multiplicative order. Irreducible characteristic polynomial: strip
/// prime factors from q^d - 1. Otherwise iterate powers up to 2^20 steps.
/// Throws std::domain_error on singular input.
std::uint64_t matrix_order(const Matrix& t);

/// Nonsingular with order q^d - 1. Also evaluates primitivity of the
/// characteristic polynomial and throws std::logic_error("criterion
/// disagreement") if the two criteria differ.
bool is_singer_cycle(const Matrix& t);

struct BlockCompanionSpec {
    unsigned m = 1, n = 1;
    std::vector<Matrix> blocks; // C_0 .. C_{n-1}

    friend bool operator==(const BlockCompanionSpec&, const BlockCompanionSpec&) = default;
};

Matrix assemble_block_companion(const BlockCompanionSpec& spec);

/// The blocks of T if it has the block companion pattern, std::nullopt
/// otherwise. Throws std::invalid_argument if T is not mn x mn.
std::optional<BlockCompanionSpec> recognize_block_companion(const Matrix& t, unsigned m, unsigned n);

/**
 * Coordinates of elements of a field K with respect to an ordered basis of K
 * over a subfield F (given by its embedding table into K). Solves over the
 * common prime field by expanding each basis vector b into b, b*theta, ...,
 * where theta is the image of F's generator.
 */
class SubfieldCoordinates {
public:
    /// Throws std::invalid_argument if `basis` is not an F-basis of K.
    SubfieldCoordinates(FieldPtr big, FieldPtr small, std::vector<Elem> embed_small, std::vector<Elem> basis);

    std::size_t dimension() const { return basis_.size(); }
    const Field& big() const { return *big_; }
    const Field& small() const { return *small_; }
    const std::vector<Elem>& basis() const { return basis_; }

    void coordinates_into(Elem x, std::span<Elem> out) const;
    std::vector<Elem> coordinates(Elem x) const;
    Elem combine(std::span<const Elem> coords) const;

    /// Rank over F of a list of elements of K.
    std::size_t rank(std::span<const Elem> vectors) const;

private:
    FieldPtr big_, small_;
    std::vector<Elem> embed_;
    std::vector<Elem> basis_;
    std::vector<std::uint32_t> inverse_; // D x D over F_p
    std::vector<Elem> table_;            // cached coordinates, empty when K is large
};

/// Coordinates of the top field over the base field in the basis 1, x, ..., x^{mn-1}.
SubfieldCoordinates top_over_base(const FieldTower& tower);
/// Coordinates of the mid field over the base field in the basis 1, x, ..., x^{m-1}.
SubfieldCoordinates mid_over_base(const FieldTower& tower);

/// Matrix of y -> beta*y on the mid field in the given base-field basis.
Matrix regular_representation(const FieldTower& tower, Elem beta, std::span<const Elem> basis);
/// Same, in the canonical basis 1, x, ..., x^{m-1}.
Matrix regular_representation(const FieldTower& tower, Elem beta);

/// Matrix of y -> alpha*y on the top field in the given ordered base-field basis.
Matrix matrix_of_mult_in_basis(const FieldTower& tower, Elem alpha, std::span<const Elem> basis);

/// An (m,n)-block companion matrix over the base field with characteristic
/// polynomial f, for f monic irreducible of degree mn over the base field.
Matrix lift_to_block_companion(const FieldTower& tower, const Poly& f);

/// Number of invertible matrices commuting with T, for T with irreducible
/// characteristic polynomial (counted among the polynomials in T).
/// Throws std::domain_error for reducible characteristic polynomials.
std::uint64_t centralizer_size(const Matrix& t);

struct NilpotentCount {
    std::optional<std::uint64_t> enumerated; // empty when above the ceiling
    std::uint64_t formula = 0;               // q^{m(m-1)}
    bool verified() const { return enumerated.has_value(); }
};

inline constexpr std::uint64_t kDefaultMatrixCeiling = std::uint64_t{1} << 24;

NilpotentCount nilpotent_count(std::uint64_t q, unsigned m, std::uint64_t ceiling = kDefaultMatrixCeiling,
                               int workers = 0);

/// "p^e:rows:cols:r0c0,r0c1;r1c0,..." with entries in canonical encoding.
std::string to_text(const Matrix& a);
Matrix matrix_from_text(std::string_view text);

} // namespace bcs
