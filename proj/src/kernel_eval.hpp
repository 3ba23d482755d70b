#pragma once

// Per-candidate evaluators shared by the serial and OpenMP kernels. Each
// evaluator owns its scratch buffers, so one instance per thread.

#include "bcs/dense.hpp"
#include "bcs/kernels.hpp"
#include "bcs/numtheory.hpp"

#include <algorithm>

namespace bcs::kernels::detail {

/// Odometer step over base-`radix` digits, least significant first; false on wrap-around.
inline bool advance(std::vector<std::uint32_t>& digits, std::uint64_t radix) {
    for (auto& d : digits) {
        if (++d < radix) return true;
        d = 0;
    }
    return false;
}

inline void decode(std::uint64_t index, std::uint64_t radix, std::span<std::uint32_t> out) {
    for (auto& d : out) {
        d = static_cast<std::uint32_t>(index % radix);
        index /= radix;
    }
}

class FiberEvaluator {
public:
    FiberEvaluator(const Field& F, unsigned m, unsigned n, std::span<const std::uint8_t> primitive)
        : F_(F), m_(m), n_(n), d_(m * n), primitive_(primitive), t_(d_ * d_, 0), work_(d_ * d_), cp_(d_ + 1),
          full_(checked_pow(F.size(), d_) - 1),
          primes_(full_ > 1 ? factorize(full_).primes() : std::vector<std::uint64_t>{}),
          bits_(F.size() == 2 && d_ <= 64) {
        for (unsigned k = 0; k + 1 < n_; ++k)
            for (unsigned i = 0; i < m_; ++i) t_[((k + 1) * m_ + i) * d_ + k * m_ + i] = 1;
    }

    unsigned entries() const { return m_ * m_ * n_; }
    FiberTally empty_tally() const {
        FiberTally t;
        t.by_poly.assign(checked_pow(F_.size(), d_), 0);
        return t;
    }

    void visit(std::span<const std::uint32_t> blocks, FiberTally& tally) {
        const unsigned last = (n_ - 1) * m_;
        for (unsigned k = 0; k < n_; ++k)
            for (unsigned i = 0; i < m_; ++i)
                for (unsigned j = 0; j < m_; ++j)
                    t_[(k * m_ + i) * d_ + last + j] = blocks[k * m_ * m_ + i * m_ + j];
        std::copy(t_.begin(), t_.end(), work_.begin());
        cp_ws_.compute(F_, work_, d_, cp_);
        std::uint64_t idx = 0;
        for (unsigned i = d_; i-- > 0;) idx = idx * F_.size() + cp_[i];
        ++tally.by_poly[idx];
        if (cp_[0] == 0) return;
        ++tally.nonsingular;
        const bool singer = exact_order();
        if (singer) ++tally.singer_by_order;
        if (singer != (primitive_[idx] != 0)) ++tally.criterion_disagreements;
    }

private:
    bool exact_order() {
        if (bits_) {
            for (unsigned r = 0; r < d_; ++r) {
                std::uint64_t row = 0;
                for (unsigned c = 0; c < d_; ++c)
                    if (t_[r * d_ + c]) row |= std::uint64_t{1} << c;
                rows_[r] = row;
            }
            return dense::gf2::has_exact_order({rows_, d_}, d_, full_, primes_);
        }
        return dense::has_exact_order(F_, t_, d_, full_, primes_);
    }

    const Field& F_;
    unsigned m_, n_, d_;
    std::span<const std::uint8_t> primitive_;
    std::vector<Elem> t_, work_, cp_;
    dense::CharPolyWorkspace cp_ws_;
    std::uint64_t full_;
    std::vector<std::uint64_t> primes_;
    bool bits_;
    std::uint64_t rows_[64] = {};
};

class BasisEvaluator {
public:
    BasisEvaluator(const Field& base, const OrbitTable& orbits, unsigned m)
        : F_(base), o_(orbits), m_(m), work_(std::size_t{orbits.dim} * orbits.dim) {
        if (std::size_t{m} * orbits.rows != orbits.dim)
            throw std::invalid_argument("basis kernel: m * n must equal the dimension");
    }

    bool is_basis(std::span<const std::uint32_t> tuple) {
        const std::size_t block = std::size_t{o_.rows} * o_.dim;
        for (unsigned j = 0; j < m_; ++j) {
            if (tuple[j] == 0) return false;
            const auto src = o_.coords.begin() + static_cast<std::ptrdiff_t>(tuple[j] * block);
            std::copy(src, src + static_cast<std::ptrdiff_t>(block), work_.begin() + static_cast<std::ptrdiff_t>(j * block));
        }
        return dense::determinant_inplace(F_, work_, o_.dim) != 0;
    }

private:
    const Field& F_;
    const OrbitTable& o_;
    unsigned m_;
    std::vector<Elem> work_;
};

/// Poly objects for every index in [0, Q^n): monic of degree n, or all of degree < n.
inline std::vector<Poly> poly_table(const FieldPtr& F, unsigned n, bool monic) {
    const std::uint64_t count = checked_pow(F->size(), n);
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(monic ? monic_from_index(F, n, i) : poly_from_index(F, n, i));
    return out;
}

inline bool tuple_coprime(const std::vector<Poly>& table, std::span<const std::uint32_t> tuple) {
    Poly g(table.front().field_ptr());
    for (auto i : tuple) {
        g = poly_gcd(g, table[i]);
        if (g.degree() == 0) return true;
    }
    return g.degree() == 0;
}

inline bool toeplitz_nonsingular(const Field& F, unsigned n, std::span<const std::uint32_t> c, std::vector<Elem>& work) {
    // c[k] holds c_{k+1}; entry (i, j) with 1-based i, j is c_{n+i-j}.
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) work[i * n + j] = c[n + i - j - 1];
    return dense::determinant_inplace(F, work, n) != 0;
}

inline bool nilpotent(const Field& F, unsigned m, std::span<const std::uint32_t> a, std::vector<Elem>& out,
                      std::vector<Elem>& scratch) {
    dense::pow(F, a, m, out, m, scratch);
    return dense::is_zero(out);
}

} // namespace bcs::kernels::detail
