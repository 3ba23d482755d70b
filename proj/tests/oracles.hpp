#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library: fields are built by direct polynomial reduction,
// determinants come from the Leibniz expansion, irreducibility from trial
// division by every monic polynomial of lower degree.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Vec = std::vector<std::uint32_t>;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline u64 phi(u64 n) {
    u64 k = 0;
    for (u64 i = 1; i <= n; ++i) k += std::gcd(i, n) == 1;
    return k;
}

inline int moebius(u64 n) {
    int sign = 1;
    for (u64 d = 2; d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        sign = -sign;
    }
    return sign;
}

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

/// F_{p^k} as polynomials over F_p reduced by the least monic irreducible
/// modulus (constant term least significant), elements encoded sum d_i p^i.
class Field {
public:
    Field(std::uint32_t p, unsigned k) : p_(p), k_(k), size_(ipow(p, k)) {
        if (k == 1) {
            modulus_ = {0, 1};
        } else {
            for (u64 idx = 0;; ++idx) {
                Vec f = digits_of(idx, k);
                f.push_back(1);
                if (prime_poly_irreducible(f)) {
                    modulus_ = f;
                    break;
                }
            }
        }
    }

    std::uint32_t p() const { return p_; }
    unsigned k() const { return k_; }
    u64 size() const { return size_; }
    const Vec& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        Vec x = digits_of(a, k_), y = digits_of(b, k_);
        for (unsigned i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
        return encode(x);
    }
    std::uint32_t neg(std::uint32_t a) const {
        Vec x = digits_of(a, k_);
        for (auto& d : x) d = (p_ - d) % p_;
        return encode(x);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        Vec x = digits_of(a, k_), y = digits_of(b, k_);
        Vec prod(2 * k_, 0);
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        for (unsigned t = 2 * k_ - 1; t >= k_; --t) {
            const std::uint32_t c = prod[t];
            if (!c) continue;
            for (unsigned i = 0; i <= k_; ++i)
                prod[t - k_ + i] = (prod[t - k_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
        prod.resize(k_);
        return encode(prod);
    }
    std::uint32_t inv(std::uint32_t a) const {
        for (std::uint32_t b = 1; b < size_; ++b)
            if (mul(a, b) == 1) return b;
        return 0;
    }
    std::uint32_t pow(std::uint32_t a, u64 e) const {
        std::uint32_t r = 1;
        while (e--) r = mul(r, a);
        return r;
    }
    /// Smallest e >= 1 with a^e = 1.
    u64 order(std::uint32_t a) const {
        std::uint32_t x = a;
        for (u64 e = 1;; ++e) {
            if (x == 1) return e;
            x = mul(x, a);
        }
    }

    Vec digits_of(u64 v, unsigned len) const {
        Vec d(len);
        for (auto& x : d) {
            x = static_cast<std::uint32_t>(v % p_);
            v /= p_;
        }
        return d;
    }
    std::uint32_t encode(const Vec& d) const {
        u64 v = 0;
        for (unsigned i = d.size(); i-- > 0;) v = v * p_ + d[i];
        return static_cast<std::uint32_t>(v);
    }

private:
    // Irreducibility over F_p by trial division with every monic of degree <= deg/2.
    bool prime_poly_irreducible(const Vec& f) const {
        const unsigned deg = f.size() - 1;
        for (unsigned d = 1; 2 * d <= deg; ++d)
            for (u64 idx = 0; idx < ipow(p_, d); ++idx) {
                Vec g = digits_of(idx, d);
                g.push_back(1);
                Vec r = f;
                for (unsigned t = deg; t >= d && t < r.size(); --t) {
                    const std::uint32_t c = r[t];
                    if (c)
                        for (unsigned i = 0; i <= d; ++i) r[t - d + i] = (r[t - d + i] + (p_ - c) * g[i]) % p_;
                    if (t == d) break;
                }
                bool zero = true;
                for (unsigned i = 0; i < d; ++i) zero &= r[i] == 0;
                if (zero) return false;
            }
        return true;
    }

    std::uint32_t p_;
    unsigned k_;
    u64 size_;
    Vec modulus_;
};

/// Polynomials over an oracle Field, constant term first, trimmed.
struct Poly {
    Vec c;
    int degree() const { return c.empty() ? -1 : static_cast<int>(c.size()) - 1; }
};

inline void trim(Poly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    Poly r{Vec(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    trim(r);
    return r;
}

inline Poly add(const Field& F, const Poly& a, const Poly& b) {
    Poly r{Vec(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = F.add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
    trim(r);
    return r;
}

inline Poly rem(const Field& F, Poly a, const Poly& b) {
    const std::uint32_t inv = F.inv(b.c.back());
    while (a.degree() >= b.degree()) {
        const std::uint32_t c = F.mul(a.c.back(), inv);
        const std::size_t shift = a.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] = F.sub(a.c[shift + i], F.mul(c, b.c[i]));
        trim(a);
    }
    return a;
}

inline Poly gcd(const Field& F, Poly a, Poly b) {
    while (!b.c.empty()) {
        Poly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// The index-th monic polynomial of degree d (lower coefficients as base-q digits).
inline Poly monic(const Field& F, unsigned d, u64 index) {
    Poly f{Vec(d + 1)};
    for (unsigned i = 0; i < d; ++i) {
        f.c[i] = static_cast<std::uint32_t>(index % F.size());
        index /= F.size();
    }
    f.c[d] = 1;
    return f;
}

/// The index-th polynomial with fewer than `len` coefficients.
inline Poly any_poly(const Field& F, unsigned len, u64 index) {
    Poly f{Vec(len)};
    for (auto& x : f.c) {
        x = static_cast<std::uint32_t>(index % F.size());
        index /= F.size();
    }
    trim(f);
    return f;
}

inline bool irreducible(const Field& F, const Poly& f) {
    const unsigned deg = f.degree();
    if (deg < 1) return false;
    for (unsigned d = 1; 2 * d <= deg; ++d)
        for (u64 i = 0; i < ipow(F.size(), d); ++i)
            if (rem(F, f, monic(F, d, i)).c.empty()) return false;
    return true;
}

/// Irreducible with X of order q^d - 1 modulo f.
inline bool primitive(const Field& F, const Poly& f) {
    if (!irreducible(F, f)) return false;
    const unsigned d = f.degree();
    if (d == 1 && f.c[0] == 0) return false;
    const u64 full = ipow(F.size(), d) - 1;
    Poly x{{0, 1}};
    Poly acc = rem(F, x, f);
    for (u64 e = 1; e < full; ++e) {
        if (acc.c == Vec{1}) return false;
        acc = rem(F, mul(F, acc, x), f);
    }
    return acc.c == Vec{1};
}

inline u64 count_irreducible(const Field& F, unsigned d) {
    u64 k = 0;
    for (u64 i = 0; i < ipow(F.size(), d); ++i) k += irreducible(F, monic(F, d, i));
    return k;
}

inline u64 count_primitive(const Field& F, unsigned d) {
    u64 k = 0;
    for (u64 i = 0; i < ipow(F.size(), d); ++i) k += primitive(F, monic(F, d, i));
    return k;
}

// ------------------------------------------------------------ matrices (row-major, n x n)

inline int perm_sign(const std::vector<unsigned>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

/// Leibniz expansion.
inline std::uint32_t det(const Field& F, const Vec& a, unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::uint32_t total = 0;
    do {
        std::uint32_t t = 1;
        for (unsigned i = 0; i < n; ++i) t = F.mul(t, a[i * n + p[i]]);
        total = perm_sign(p) > 0 ? F.add(total, t) : F.sub(total, t);
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// det(XI - A) by Leibniz over polynomial entries; coefficients constant first.
inline Vec char_poly(const Field& F, const Vec& a, unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    Poly total;
    do {
        Poly t{{1}};
        for (unsigned i = 0; i < n && !t.c.empty(); ++i) {
            Poly e{{F.neg(a[i * n + p[i]])}};
            if (p[i] == i) e.c.push_back(1);
            trim(e);
            t = mul(F, t, e);
        }
        if (perm_sign(p) < 0)
            for (auto& x : t.c) x = F.neg(x);
        total = add(F, total, t);
    } while (std::next_permutation(p.begin(), p.end()));
    total.c.resize(n + 1, 0);
    return total.c;
}

inline Vec mat_mul(const Field& F, const Vec& a, const Vec& b, unsigned n) {
    Vec c(n * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k)
            for (unsigned j = 0; j < n; ++j) c[i * n + j] = F.add(c[i * n + j], F.mul(a[i * n + k], b[k * n + j]));
    return c;
}

inline Vec identity(unsigned n) {
    Vec e(n * n, 0);
    for (unsigned i = 0; i < n; ++i) e[i * n + i] = 1;
    return e;
}

/// Multiplicative order by repeated multiplication (0 if singular).
inline u64 mat_order(const Field& F, const Vec& a, unsigned n) {
    if (det(F, a, n) == 0) return 0;
    Vec x = a;
    for (u64 e = 1;; ++e) {
        if (x == identity(n)) return e;
        x = mat_mul(F, x, a, n);
    }
}

/// Rank by plain Gaussian elimination on an r x c matrix.
inline unsigned rank(const Field& F, Vec a, unsigned r, unsigned c) {
    unsigned rk = 0;
    for (unsigned col = 0; col < c && rk < r; ++col) {
        unsigned piv = rk;
        while (piv < r && a[piv * c + col] == 0) ++piv;
        if (piv == r) continue;
        for (unsigned j = 0; j < c; ++j) std::swap(a[rk * c + j], a[piv * c + j]);
        const std::uint32_t inv = F.inv(a[rk * c + col]);
        for (unsigned i = 0; i < r; ++i) {
            if (i == rk || a[i * c + col] == 0) continue;
            const std::uint32_t f = F.mul(a[i * c + col], inv);
            for (unsigned j = 0; j < c; ++j) a[i * c + j] = F.sub(a[i * c + j], F.mul(f, a[rk * c + j]));
        }
        ++rk;
    }
    return rk;
}

/// (m,n)-block companion matrix from blocks C_0..C_{n-1} (each m x m, row-major, concatenated).
inline Vec block_companion(const Vec& blocks, unsigned m, unsigned n) {
    const unsigned d = m * n;
    Vec t(d * d, 0);
    for (unsigned k = 0; k + 1 < n; ++k)
        for (unsigned i = 0; i < m; ++i) t[((k + 1) * m + i) * d + k * m + i] = 1;
    for (unsigned k = 0; k < n; ++k)
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) t[(k * m + i) * d + (n - 1) * m + j] = blocks[k * m * m + i * m + j];
    return t;
}

struct FiberCensus {
    std::map<Vec, u64> by_irreducible; // every irreducible of degree mn, possibly with 0
    u64 singer = 0;                    // nonsingular of order q^{mn}-1
};

/// Enumerates every block companion matrix by brute force.
inline FiberCensus fibers(const Field& F, unsigned m, unsigned n) {
    const unsigned d = m * n;
    FiberCensus out;
    for (u64 i = 0; i < ipow(F.size(), d); ++i) {
        Poly f = monic(F, d, i);
        if (irreducible(F, f)) out.by_irreducible[f.c] = 0;
    }
    const u64 full = ipow(F.size(), d) - 1;
    const unsigned entries = m * m * n;
    for (u64 idx = 0; idx < ipow(F.size(), entries); ++idx) {
        Vec blocks(entries);
        u64 v = idx;
        for (auto& b : blocks) {
            b = static_cast<std::uint32_t>(v % F.size());
            v /= F.size();
        }
        const Vec t = block_companion(blocks, m, n);
        const Vec cp = char_poly(F, t, d);
        auto it = out.by_irreducible.find(cp);
        if (it != out.by_irreducible.end()) {
            ++it->second;
            if (mat_order(F, t, d) == full) ++out.singer;
        }
    }
    return out;
}

inline u64 nilpotent(const Field& F, unsigned m) {
    u64 k = 0;
    for (u64 idx = 0; idx < ipow(F.size(), m * m); ++idx) {
        Vec a(m * m);
        u64 v = idx;
        for (auto& x : a) {
            x = static_cast<std::uint32_t>(v % F.size());
            v /= F.size();
        }
        Vec p = a;
        for (unsigned e = 1; e < m; ++e) p = mat_mul(F, p, a, m);
        k += std::all_of(p.begin(), p.end(), [](std::uint32_t x) { return x == 0; });
    }
    return k;
}

/// Toeplitz matrices (c_{n+i-j}) over F with nonzero determinant.
inline u64 toeplitz(const Field& F, unsigned n) {
    u64 k = 0;
    for (u64 idx = 0; idx < ipow(F.size(), 2 * n - 1); ++idx) {
        Vec c(2 * n - 1);
        u64 v = idx;
        for (auto& x : c) {
            x = static_cast<std::uint32_t>(v % F.size());
            v /= F.size();
        }
        Vec t(n * n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) t[i * n + j] = c[n + i - j - 1];
        k += det(F, t, n) != 0;
    }
    return k;
}

/// r-tuples of monic degree-n polynomials (monic) or polynomials of degree < n
/// (not monic) with trivial setwise gcd. The zero tuple is never coprime.
inline u64 coprime(const Field& F, unsigned r, unsigned n, bool monic_tuples) {
    const u64 per = ipow(F.size(), n);
    u64 k = 0;
    for (u64 idx = 0; idx < ipow(per, r); ++idx) {
        u64 v = idx;
        Poly g;
        for (unsigned j = 0; j < r; ++j) {
            Poly f = monic_tuples ? monic(F, n, v % per) : any_poly(F, n, v % per);
            v /= per;
            g = gcd(F, g, f);
        }
        k += g.degree() == 0;
    }
    return k;
}

/// Number of m-dimensional subspaces of F^d, by collecting distinct spans.
inline u64 subspaces(const Field& F, unsigned d, unsigned m) {
    const u64 size = ipow(F.size(), d);
    std::set<std::vector<u64>> seen;
    std::vector<u64> pick(m, 0);
    while (true) {
        Vec rows;
        for (u64 x : pick) {
            Vec dv = F.digits_of(x, d);
            rows.insert(rows.end(), dv.begin(), dv.end());
        }
        if (m == 0 || rank(F, rows, m, d) == m) {
            std::vector<u64> span;
            for (u64 c = 0; c < ipow(F.size(), m); ++c) {
                Vec v(d, 0);
                u64 cc = c;
                for (unsigned j = 0; j < m; ++j) {
                    const std::uint32_t coef = cc % F.size();
                    cc /= F.size();
                    for (unsigned t = 0; t < d; ++t) v[t] = F.add(v[t], F.mul(coef, rows[j * d + t]));
                }
                u64 enc = 0;
                for (unsigned t = d; t-- > 0;) enc = enc * F.size() + v[t];
                span.push_back(enc);
            }
            std::sort(span.begin(), span.end());
            seen.insert(span);
        }
        unsigned j = 0;
        while (j < m && ++pick[j] == size) pick[j++] = 0;
        if (j == m) break;
    }
    return seen.size();
}

/// Splitting subspaces of the extension field E = F_{p^K} (K = m n) over its
/// prime field, for multiplication by `alpha`, counted as distinct sets, and
/// the ordered-basis count N. Only prime base fields.
struct Splitting {
    u64 N = 0;
    u64 S = 0;
    std::map<std::uint32_t, u64> pointed; // base point -> number of splitting subspaces containing it
};

inline Splitting splitting(const Field& E, std::uint32_t alpha, unsigned m, unsigned n) {
    const unsigned d = m * n;
    Splitting out;
    std::set<std::vector<std::uint32_t>> found;
    std::vector<std::uint32_t> pick(m, 0);
    while (true) {
        Vec rows;
        for (unsigned k = 0; k < n; ++k)
            for (unsigned j = 0; j < m; ++j) {
                const Vec dv = E.digits_of(E.mul(E.pow(alpha, k), pick[j]), d);
                rows.insert(rows.end(), dv.begin(), dv.end());
            }
        if (rank(E, rows, d, d) == d) {
            // rank over the prime field: digits already live in F_p, and E's add/mul on
            // encodings < p coincide with F_p arithmetic.
            ++out.N;
            std::set<std::uint32_t> span;
            for (u64 c = 0; c < ipow(E.p(), m); ++c) {
                std::uint32_t v = 0;
                u64 cc = c;
                for (unsigned j = 0; j < m; ++j) {
                    v = E.add(v, E.mul(static_cast<std::uint32_t>(cc % E.p()), pick[j]));
                    cc /= E.p();
                }
                span.insert(v);
            }
            found.insert({span.begin(), span.end()});
        }
        unsigned j = 0;
        while (j < m && ++pick[j] == E.size()) pick[j++] = 0;
        if (j == m) break;
    }
    out.S = found.size();
    for (const auto& w : found)
        for (auto x : w)
            if (x) ++out.pointed[x];
    return out;
}

} // namespace oracle
