#include "bcs/dense.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bcs::dense {

void mul(const Field& F, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out, std::size_t n) {
    std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(n * n), Elem{0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Elem aik = a[i * n + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i * n + j] = F.add(out[i * n + j], F.mul(aik, b[k * n + j]));
        }
}

bool is_identity(std::span<const Elem> a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[i * n + j] != (i == j ? 1u : 0u)) return false;
    return true;
}

bool is_zero(std::span<const Elem> a) {
    return std::all_of(a.begin(), a.end(), [](Elem v) { return v == 0; });
}

void pow(const Field& F, std::span<const Elem> a, std::uint64_t e, std::span<Elem> out, std::size_t n,
         std::span<Elem> scratch) {
    const std::size_t nn = n * n;
    auto base = scratch.subspan(0, nn);
    auto tmp = scratch.subspan(nn, nn);
    std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(nn), base.begin());
    std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(nn), Elem{0});
    for (std::size_t i = 0; i < n; ++i) out[i * n + i] = 1;
    while (e > 0) {
        if (e & 1) {
            mul(F, out, base, tmp, n);
            std::copy(tmp.begin(), tmp.end(), out.begin());
        }
        e >>= 1;
        if (e) {
            mul(F, base, base, tmp, n);
            std::copy(tmp.begin(), tmp.end(), base.begin());
        }
    }
}

Elem determinant_inplace(const Field& F, std::span<Elem> w, std::size_t n) {
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(w[piv * n + k], w[c * n + k]);
            det = F.neg(det);
        }
        const Elem pv = w[c * n + c];
        det = F.mul(det, pv);
        const Elem pinv = F.inv(pv);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Elem f = F.mul(w[r * n + c], pinv);
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) w[r * n + k] = F.sub(w[r * n + k], F.mul(f, w[c * n + k]));
        }
    }
    return det;
}

std::size_t rank_inplace(const Field& F, std::span<Elem> w, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && w[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t k = 0; k < cols; ++k) std::swap(w[piv * cols + k], w[rank * cols + k]);
        const Elem pinv = F.inv(w[rank * cols + c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Elem f = F.mul(w[r * cols + c], pinv);
            if (f == 0) continue;
            for (std::size_t k = c; k < cols; ++k)
                w[r * cols + k] = F.sub(w[r * cols + k], F.mul(f, w[rank * cols + k]));
        }
        ++rank;
    }
    return rank;
}

void CharPolyWorkspace::compute(const Field& F, std::span<Elem> w, std::size_t n, std::span<Elem> out) {
    auto A = [&](std::size_t i, std::size_t j) -> Elem& { return w[i * n + j]; };

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && A(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(A(piv, k), A(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(A(k, piv), A(k, j + 1));
        }
        const Elem tinv = F.inv(A(j + 1, j));
        for (std::size_t i = j + 2; i < n; ++i) {
            const Elem u = F.mul(A(i, j), tinv);
            if (u == 0) continue;
            for (std::size_t k = 0; k < n; ++k) A(i, k) = F.sub(A(i, k), F.mul(u, A(j + 1, k)));
            for (std::size_t k = 0; k < n; ++k) A(k, j + 1) = F.add(A(k, j + 1), F.mul(u, A(k, i)));
        }
    }

    // p_k = (X - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod of subdiagonal) p_{k-i-1}
    const std::size_t stride = n + 1;
    polys_.assign(stride * stride, 0);
    auto P = [&](std::size_t k) { return std::span<Elem>(polys_).subspan(k * stride, stride); };
    P(0)[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        auto pk = P(k);
        auto prev = P(k - 1);
        const Elem h = A(k - 1, k - 1);
        for (std::size_t i = 0; i <= k; ++i) {
            const Elem shifted = i > 0 ? prev[i - 1] : 0;
            pk[i] = F.sub(shifted, F.mul(h, prev[i]));
        }
        Elem t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t = F.mul(t, A(k - i, k - i - 1));
            if (t == 0) break;
            const Elem c = F.mul(t, A(k - i - 1, k - 1));
            if (c == 0) continue;
            auto src = P(k - i - 1);
            for (std::size_t d = 0; d + i < k; ++d) pk[d] = F.sub(pk[d], F.mul(c, src[d]));
        }
    }
    auto pn = P(n);
    std::copy(pn.begin(), pn.begin() + static_cast<std::ptrdiff_t>(n + 1), out.begin());
}

bool has_exact_order(const Field& F, std::span<const Elem> a, std::size_t n, std::uint64_t order,
                     std::span<const std::uint64_t> order_primes) {
    std::vector<Elem> out(n * n), scratch(2 * n * n);
    pow(F, a, order, out, n, scratch);
    if (!is_identity(out, n)) return false;
    for (auto r : order_primes) {
        pow(F, a, order / r, out, n, scratch);
        if (is_identity(out, n)) return false;
    }
    return true;
}

namespace gf2 {

void mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, std::span<std::uint64_t> out,
         std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t row = 0, bits = a[i];
        while (bits) {
            const int k = __builtin_ctzll(bits);
            row ^= b[static_cast<std::size_t>(k)];
            bits &= bits - 1;
        }
        out[i] = row;
    }
}

namespace {

void pow_into(std::span<const std::uint64_t> a, std::uint64_t e, std::span<std::uint64_t> out, std::size_t n) {
    std::uint64_t base[64], tmp[64];
    std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), base);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::uint64_t{1} << i;
    while (e > 0) {
        if (e & 1) {
            mul(out, {base, n}, {tmp, n}, n);
            std::copy(tmp, tmp + n, out.begin());
        }
        e >>= 1;
        if (e) {
            mul({base, n}, {base, n}, {tmp, n}, n);
            std::copy(tmp, tmp + n, base);
        }
    }
}

bool identity(std::span<const std::uint64_t> a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != (std::uint64_t{1} << i)) return false;
    return true;
}

} // namespace

bool has_exact_order(std::span<const std::uint64_t> a, std::size_t n, std::uint64_t order,
                     std::span<const std::uint64_t> order_primes) {
    assert(n <= 64);
    std::uint64_t out[64];
    pow_into(a, order, {out, n}, n);
    if (!identity({out, n}, n)) return false;
    for (auto r : order_primes) {
        pow_into(a, order / r, {out, n}, n);
        if (identity({out, n}, n)) return false;
    }
    return true;
}

} // namespace gf2

} // namespace bcs::dense
