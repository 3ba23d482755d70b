#pragma once

/**
 * @file gf.hpp
 * @brief Finite fields F_{p^k}, dense univariate polynomials over them, and
 * the three-level tower F_q < F_{q^m} < F_{q^mn}.
 *
 * Every field is stored over its prime field: an element is the integer
 * enc(e) = sum_i d_i p^i of its coordinate digits d_i in the power basis
 * 1, x, ..., x^{k-1} of F_p[x]/(modulus). Multiplication goes through
 * log/antilog tables, so a field is only constructible up to kMaxFieldSize.
 *
 * Moduli are canonical: the least monic irreducible polynomial of the
 * required degree over F_p, ordered by enc(c_0) + enc(c_1) p + ... with the
 * constant term as the least significant digit.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcs {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 22;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    /// F_p itself (no modulus).
    static FieldPtr prime(std::uint32_t p);
    /// F_{p^degree} with the canonical modulus; instances are cached.
    static FieldPtr canonical(std::uint32_t p, unsigned degree);
    /// F_p[x]/(modulus); modulus given constant term first, monic, over F_p.
    static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    std::uint64_t size() const { return size_; }
    bool is_prime_field() const { return degree_ == 1; }
    /// Modulus over F_p, constant term first; {0, 1} (i.e. X) for a prime field.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    /// "p^e"
    std::string tag() const;

    bool contains(Elem a) const { return a < size_; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
        return add_digitwise(a, b);
    }
    Elem neg(Elem a) const { return neg_table_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const;
    /// The class of x (the root of the modulus); for a prime field, 1.
    Elem generator() const { return degree_ == 1 ? 1 : p_; }
    /// Least element (by encoding) generating F^*.
    Elem primitive_element() const { return primitive_; }
    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(Elem a) const;

    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(std::span<const std::uint32_t> d) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

    Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

private:
    Elem add_digitwise(Elem a, Elem b) const;
    Elem slow_mul(Elem a, Elem b) const;

    std::uint32_t p_;
    unsigned degree_;
    std::uint64_t size_;
    std::vector<std::uint32_t> modulus_;
    Elem primitive_ = 1;
    std::vector<std::uint32_t> exp_; // length 2(size-1)
    std::vector<std::uint32_t> log_; // length size, log_[0] unused
    std::vector<Elem> neg_table_;
    std::vector<Elem> add_table_; // only for small odd-characteristic fields
};

/// All elements in ascending encoding order.
std::vector<Elem> elements(const Field& field);

bool same_field(const Field& a, const Field& b);

/// Marker degree of the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = -2147483647 - 1;

/// Dense polynomial over a Field, constant term first, no trailing zeros.
class Poly {
public:
    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr field, Elem c);
    static Poly monomial(FieldPtr field, Elem c, unsigned k);
    static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }

    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    Elem operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    Poly monic() const;
    Elem evaluate(Elem at) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.coeffs_ == b.coeffs_ && same_field(*a.field_, *b.field_);
    }

private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);

Poly powmod(const Poly& base, std::uint64_t exp, const Poly& modulus);

/// Irreducibility over the coefficient field (Rabin's test). Constants are
/// not irreducible; the zero polynomial is rejected.
bool is_irreducible(const Poly& f);

/// True iff f (monicized) is irreducible of degree d and X has order Q^d - 1
/// modulo f, where Q is the size of the coefficient field.
bool is_primitive(const Poly& f);

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-Q digits of `index` (constant term least significant).
Poly monic_from_index(const FieldPtr& field, unsigned degree, std::uint64_t index);
/// Polynomial of degree < length with coefficients the base-Q digits of `index`.
Poly poly_from_index(const FieldPtr& field, unsigned length, std::uint64_t index);
/// Inverse of monic_from_index.
std::uint64_t monic_index(const Poly& f);

/// "1,1,0,0,1" (constant term first); "" for the zero polynomial.
std::string to_text(const Poly& f);
Poly poly_from_text(const FieldPtr& field, std::string_view text);
/// Parses "p^e" into the canonical field.
FieldPtr field_from_tag(std::string_view tag);

/// The least root (by encoding) in `big` of a polynomial whose coefficients
/// are mapped into `big` through `embed` (indexed by coefficient encoding).
std::optional<Elem> least_root(const Field& big, const Poly& f, std::span<const Elem> embed);

/// Table mapping F_p (prime subfield) into `big`.
std::vector<Elem> prime_subfield_embedding(const Field& big);

/**
 * F_q < F_{q^m} < F_{q^mn}, each level a canonical field over F_p of degree
 * e, em, emn. A subfield is embedded by sending its generator to the least
 * root of its modulus in the larger field; base->top is the composition.
 */
class FieldTower {
public:
    static FieldTower build(std::uint32_t p, unsigned e, unsigned m, unsigned n);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& mid() const { return mid_; }
    const FieldPtr& top() const { return top_; }
    std::uint32_t p() const { return base_->characteristic(); }
    unsigned e() const { return base_->degree(); }
    unsigned m() const { return m_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return base_->size(); }

    Elem embed_base_mid(Elem a) const { return base_mid_[a]; }
    Elem embed_mid_top(Elem a) const { return mid_top_[a]; }
    Elem embed_base_top(Elem a) const { return base_top_[a]; }
    std::span<const Elem> base_mid_table() const { return base_mid_; }
    std::span<const Elem> mid_top_table() const { return mid_top_; }
    std::span<const Elem> base_top_table() const { return base_top_; }

    std::optional<Elem> mid_preimage(Elem top_elem) const;
    std::optional<Elem> base_preimage(Elem top_elem) const;

    /// Homomorphism and compatibility checks (exhaustive on small levels,
    /// deterministic samples otherwise).
    bool verify() const;

private:
    FieldPtr base_, mid_, top_;
    unsigned m_ = 1, n_ = 1;
    std::vector<Elem> base_mid_, mid_top_, base_top_;
    std::vector<Elem> top_to_mid_; // sentinel kNoPreimage when absent
};

/// Degree of a top-field element over the embedded base field.
unsigned degree_over_base(const FieldTower& tower, Elem alpha);

/// Minimal polynomial over the mid field of a top-field element.
Poly min_poly_over_mid(const FieldTower& tower, Elem alpha);

/// Minimal polynomial over the base field of a top-field element.
Poly min_poly_over_base(const FieldTower& tower, Elem alpha);

} // namespace bcs
