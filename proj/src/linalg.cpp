#include "bcs/linalg.hpp"
#include "bcs/dense.hpp"
#include "bcs/kernels.hpp"
#include "bcs/numtheory.hpp"

#include <charconv>
#include <sstream>

namespace bcs {

namespace {

constexpr std::uint64_t kOrderIterationCap = std::uint64_t{1} << 20;
constexpr std::uint64_t kCentralizerCap = std::uint64_t{1} << 20;
constexpr std::uint64_t kCoordinateTableLimit = std::uint64_t{1} << 22;

void require_square(const Matrix& t, const char* op) {
    if (!t.is_square()) throw std::invalid_argument(std::string(op) + ": matrix is not square");
}

std::vector<Elem> power_basis(const Field& F, unsigned count) {
    std::vector<Elem> b(count);
    Elem x = 1;
    for (auto& v : b) {
        v = x;
        x = F.mul(x, F.generator());
    }
    return b;
}

std::vector<Elem> as_vector(std::span<const Elem> s) { return {s.begin(), s.end()}; }

} // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: entry count does not match shape");
    for (auto v : data_)
        if (!field_->contains(v)) throw std::invalid_argument("Matrix: entry outside field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || !same_field(a.field(), b.field()))
        throw std::invalid_argument("matrix product: incompatible operands");
    const Field& F = a.field();
    Matrix c(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !same_field(a.field(), b.field()))
        throw std::invalid_argument("matrix sum: incompatible operands");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
    return c;
}

Matrix scale(const Matrix& a, Elem s) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(a(i, j), s);
    return c;
}

Matrix matrix_pow(const Matrix& a, std::uint64_t e) {
    require_square(a, "matrix_pow");
    const std::size_t n = a.rows();
    std::vector<Elem> out(n * n), scratch(2 * n * n);
    dense::pow(a.field(), a.data(), e, out, n, scratch);
    return Matrix(a.field_ptr(), n, n, std::move(out));
}

Elem determinant(const Matrix& a) {
    require_square(a, "determinant");
    auto w = as_vector(a.data());
    return dense::determinant_inplace(a.field(), w, a.rows());
}

std::size_t rank(const Matrix& a) {
    auto w = as_vector(a.data());
    return dense::rank_inplace(a.field(), w, a.rows(), a.cols());
}

bool is_nonsingular(const Matrix& a) { return determinant(a) != 0; }

Matrix companion(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion: need a monic polynomial of positive degree");
    const auto d = static_cast<std::size_t>(f.degree());
    Matrix c(f.field_ptr(), d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = 1;
    for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = f.field().neg(f[i]);
    return c;
}

Poly char_poly(const Matrix& t) {
    require_square(t, "char_poly");
    const std::size_t n = t.rows();
    auto w = as_vector(t.data());
    std::vector<Elem> out(n + 1);
    dense::CharPolyWorkspace ws;
    ws.compute(t.field(), w, n, out);
    return Poly(t.field_ptr(), std::move(out));
}

bool has_exact_order(const Matrix& t, std::uint64_t order) {
    require_square(t, "has_exact_order");
    if (order == 0) throw std::invalid_argument("has_exact_order: order must be positive");
    const auto primes = order == 1 ? std::vector<std::uint64_t>{} : factorize(order).primes();
    return dense::has_exact_order(t.field(), t.data(), t.rows(), order, primes);
}

std::uint64_t matrix_order(const Matrix& t) {
    require_square(t, "matrix_order");
    if (!is_nonsingular(t)) throw std::domain_error("matrix_order: singular matrix");
    const std::size_t d = t.rows();
    const Field& F = t.field();
    if (is_irreducible(char_poly(t))) {
        std::uint64_t order = checked_pow(F.size(), static_cast<unsigned>(d)) - 1;
        if (!dense::is_identity(matrix_pow(t, order).data(), d))
            throw std::logic_error("matrix_order: T^(q^d-1) != I despite irreducible characteristic polynomial");
        if (order == 1) return 1;
        for (auto r : factorize(order).primes())
            while (order % r == 0 && dense::is_identity(matrix_pow(t, order / r).data(), d)) order /= r;
        return order;
    }
    Matrix power = t;
    for (std::uint64_t k = 1; k <= kOrderIterationCap; ++k) {
        if (dense::is_identity(power.data(), d)) return k;
        power = power * t;
    }
    throw std::runtime_error("matrix_order: iteration cap exceeded");
}

bool is_singer_cycle(const Matrix& t) {
    require_square(t, "is_singer_cycle");
    const std::uint64_t full = checked_pow(t.field().size(), static_cast<unsigned>(t.rows())) - 1;
    const bool by_order = is_nonsingular(t) && has_exact_order(t, full);
    const bool by_poly = is_primitive(char_poly(t));
    if (by_order != by_poly) throw std::logic_error("criterion disagreement");
    return by_order;
}

Matrix assemble_block_companion(const BlockCompanionSpec& spec) {
    if (spec.m == 0 || spec.n == 0 || spec.blocks.size() != spec.n)
        throw std::invalid_argument("assemble_block_companion: expected n blocks");
    const FieldPtr& F = spec.blocks.front().field_ptr();
    for (const auto& b : spec.blocks)
        if (b.rows() != spec.m || b.cols() != spec.m || !same_field(b.field(), *F))
            throw std::invalid_argument("assemble_block_companion: block dimension mismatch");
    const std::size_t m = spec.m, n = spec.n, d = m * n;
    Matrix t(F, d, d);
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t i = 0; i < m; ++i) t((k + 1) * m + i, k * m + i) = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) t(k * m + i, (n - 1) * m + j) = spec.blocks[k](i, j);
    return t;
}

std::optional<BlockCompanionSpec> recognize_block_companion(const Matrix& t, unsigned m, unsigned n) {
    const std::size_t d = std::size_t{m} * n;
    if (m == 0 || n == 0 || t.rows() != d || t.cols() != d)
        throw std::invalid_argument("recognize_block_companion: matrix is not mn x mn");
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < (n - 1) * m; ++c) {
            const Elem expected = (r == c + m) ? 1 : 0;
            if (t(r, c) != expected) return std::nullopt;
        }
    BlockCompanionSpec spec{m, n, {}};
    for (std::size_t k = 0; k < n; ++k) {
        Matrix b(t.field_ptr(), m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) b(i, j) = t(k * m + i, (n - 1) * m + j);
        spec.blocks.push_back(std::move(b));
    }
    return spec;
}

SubfieldCoordinates::SubfieldCoordinates(FieldPtr big, FieldPtr small, std::vector<Elem> embed_small,
                                         std::vector<Elem> basis)
    : big_(std::move(big)), small_(std::move(small)), embed_(std::move(embed_small)), basis_(std::move(basis)) {
    const unsigned D = big_->degree(), e = small_->degree();
    const std::uint32_t p = big_->characteristic();
    if (D % e != 0 || basis_.size() != D / e)
        throw std::invalid_argument("SubfieldCoordinates: basis has the wrong length");
    const Elem theta = e > 1 ? embed_.at(small_->generator()) : 1;

    // Columns j*e + k hold the digits of basis_j * theta^k.
    std::vector<std::uint64_t> aug(std::size_t{D} * 2 * D, 0);
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return aug[r * 2 * D + c]; };
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        Elem v = basis_[j];
        for (unsigned k = 0; k < e; ++k) {
            const auto d = big_->digits(v);
            for (unsigned r = 0; r < D; ++r) at(r, j * e + k) = d[r];
            v = big_->mul(v, theta);
        }
    }
    for (unsigned r = 0; r < D; ++r) at(r, D + r) = 1;
    for (unsigned c = 0; c < D; ++c) {
        unsigned piv = c;
        while (piv < D && at(piv, c) == 0) ++piv;
        if (piv == D) throw std::invalid_argument("SubfieldCoordinates: basis not linearly independent");
        if (piv != c)
            for (unsigned k = 0; k < 2 * D; ++k) std::swap(at(piv, k), at(c, k));
        const std::uint64_t inv = pow_mod(at(c, c), p - 2, p);
        for (unsigned k = 0; k < 2 * D; ++k) at(c, k) = at(c, k) * inv % p;
        for (unsigned r = 0; r < D; ++r) {
            if (r == c || at(r, c) == 0) continue;
            const std::uint64_t f = at(r, c);
            for (unsigned k = 0; k < 2 * D; ++k) at(r, k) = (at(r, k) + (p - f) * at(c, k)) % p;
        }
    }
    inverse_.resize(std::size_t{D} * D);
    for (unsigned r = 0; r < D; ++r)
        for (unsigned c = 0; c < D; ++c) inverse_[r * D + c] = static_cast<std::uint32_t>(at(r, D + c));

    const std::size_t dim = basis_.size();
    if (big_->size() * dim <= kCoordinateTableLimit) {
        std::vector<Elem> table(big_->size() * dim);
        for (Elem x = 0; x < big_->size(); ++x) coordinates_into(x, std::span<Elem>(table).subspan(x * dim, dim));
        table_ = std::move(table);
    }
}

void SubfieldCoordinates::coordinates_into(Elem x, std::span<Elem> out) const {
    const std::size_t dim = basis_.size();
    if (!table_.empty()) {
        std::copy_n(table_.begin() + static_cast<std::ptrdiff_t>(x * dim), dim, out.begin());
        return;
    }
    const unsigned D = big_->degree(), e = small_->degree();
    const std::uint32_t p = big_->characteristic();
    const auto d = big_->digits(x);
    std::vector<std::uint32_t> a(D);
    for (unsigned r = 0; r < D; ++r) {
        std::uint64_t s = 0;
        for (unsigned c = 0; c < D; ++c) s += std::uint64_t{inverse_[r * D + c]} * d[c];
        a[r] = static_cast<std::uint32_t>(s % p);
    }
    for (std::size_t j = 0; j < dim; ++j) out[j] = small_->from_digits(std::span(a).subspan(j * e, e));
}

std::vector<Elem> SubfieldCoordinates::coordinates(Elem x) const {
    std::vector<Elem> out(basis_.size());
    coordinates_into(x, out);
    return out;
}

Elem SubfieldCoordinates::combine(std::span<const Elem> coords) const {
    Elem r = 0;
    for (std::size_t j = 0; j < basis_.size(); ++j) r = big_->add(r, big_->mul(embed_[coords[j]], basis_[j]));
    return r;
}

std::size_t SubfieldCoordinates::rank(std::span<const Elem> vectors) const {
    const std::size_t dim = basis_.size();
    std::vector<Elem> w(vectors.size() * dim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        coordinates_into(vectors[i], std::span<Elem>(w).subspan(i * dim, dim));
    return dense::rank_inplace(*small_, w, vectors.size(), dim);
}

SubfieldCoordinates top_over_base(const FieldTower& tower) {
    return SubfieldCoordinates(tower.top(), tower.base(), as_vector(tower.base_top_table()),
                               power_basis(*tower.top(), tower.m() * tower.n()));
}

SubfieldCoordinates mid_over_base(const FieldTower& tower) {
    return SubfieldCoordinates(tower.mid(), tower.base(), as_vector(tower.base_mid_table()),
                               power_basis(*tower.mid(), tower.m()));
}

Matrix regular_representation(const FieldTower& tower, Elem beta, std::span<const Elem> basis) {
    if (!tower.mid()->contains(beta)) throw std::invalid_argument("regular_representation: beta outside mid field");
    const SubfieldCoordinates coords(tower.mid(), tower.base(), as_vector(tower.base_mid_table()), as_vector(basis));
    const std::size_t m = basis.size();
    Matrix a(tower.base(), m, m);
    std::vector<Elem> col(m);
    for (std::size_t j = 0; j < m; ++j) {
        coords.coordinates_into(tower.mid()->mul(beta, basis[j]), col);
        for (std::size_t i = 0; i < m; ++i) a(i, j) = col[i];
    }
    return a;
}

Matrix regular_representation(const FieldTower& tower, Elem beta) {
    return regular_representation(tower, beta, power_basis(*tower.mid(), tower.m()));
}

Matrix matrix_of_mult_in_basis(const FieldTower& tower, Elem alpha, std::span<const Elem> basis) {
    if (!tower.top()->contains(alpha)) throw std::invalid_argument("matrix_of_mult_in_basis: alpha outside top field");
    const SubfieldCoordinates coords(tower.top(), tower.base(), as_vector(tower.base_top_table()), as_vector(basis));
    const std::size_t d = basis.size();
    Matrix a(tower.base(), d, d);
    std::vector<Elem> col(d);
    for (std::size_t j = 0; j < d; ++j) {
        coords.coordinates_into(tower.top()->mul(alpha, basis[j]), col);
        for (std::size_t i = 0; i < d; ++i) a(i, j) = col[i];
    }
    return a;
}

Matrix lift_to_block_companion(const FieldTower& tower, const Poly& f) {
    const unsigned m = tower.m(), n = tower.n();
    if (!same_field(f.field(), *tower.base()) || !f.is_monic() || f.degree() != static_cast<int>(m * n) ||
        !is_irreducible(f))
        throw std::invalid_argument("lift_to_block_companion: need a monic irreducible polynomial of degree mn");
    const auto alpha = least_root(*tower.top(), f, tower.base_top_table());
    if (!alpha) throw std::logic_error("lift_to_block_companion: irreducible polynomial without a root");
    const Poly g = min_poly_over_mid(tower, *alpha);
    if (g.degree() != static_cast<int>(n)) throw std::logic_error("lift_to_block_companion: minimal polynomial degree != n");
    // g = X^n - beta_{n-1} X^{n-1} - ... - beta_0
    BlockCompanionSpec spec{m, n, {}};
    for (unsigned i = 0; i < n; ++i) spec.blocks.push_back(regular_representation(tower, tower.mid()->neg(g[i])));
    return assemble_block_companion(spec);
}

std::uint64_t centralizer_size(const Matrix& t) {
    require_square(t, "centralizer_size");
    if (!is_irreducible(char_poly(t)))
        throw std::domain_error("centralizer_size: unsupported for a reducible characteristic polynomial");
    const std::size_t d = t.rows();
    const Field& F = t.field();
    const std::uint64_t total = checked_pow(F.size(), static_cast<unsigned>(d), kCentralizerCap);
    std::vector<Matrix> powers{Matrix::identity(t.field_ptr(), d)};
    for (std::size_t i = 1; i < d; ++i) powers.push_back(powers.back() * t);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        Matrix c(t.field_ptr(), d, d);
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < d; ++i) {
            const auto coeff = static_cast<Elem>(rest % F.size());
            rest /= F.size();
            if (coeff) c = c + scale(powers[i], coeff);
        }
        if (is_nonsingular(c) && c * t == t * c) ++count;
    }
    return count;
}

NilpotentCount nilpotent_count(std::uint64_t q, unsigned m, std::uint64_t ceiling, int workers) {
    const auto [p, e] = prime_power_decompose(q);
    NilpotentCount out;
    out.formula = checked_pow(q, m * (m - 1));
    std::uint64_t total = 0;
    try {
        total = checked_pow(q, m * m, ceiling);
    } catch (const OverflowError&) {
        return out;
    }
    (void)total;
    const FieldPtr F = Field::canonical(static_cast<std::uint32_t>(p), e);
    out.enumerated = kernels::nilpotent(*F, m, workers);
    return out;
}

std::string to_text(const Matrix& a) {
    std::ostringstream os;
    os << a.field().tag() << ':' << a.rows() << ':' << a.cols() << ':';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << ',';
            os << a(i, j);
        }
    }
    return os.str();
}

Matrix matrix_from_text(std::string_view text) {
    auto next = [&](char sep) {
        const auto pos = text.find(sep);
        if (pos == std::string_view::npos) throw std::invalid_argument("matrix_from_text: malformed header");
        auto tok = text.substr(0, pos);
        text.remove_prefix(pos + 1);
        return tok;
    };
    auto parse_size = [](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
            throw std::invalid_argument("matrix_from_text: bad dimension");
        return v;
    };
    const FieldPtr F = field_from_tag(next(':'));
    const std::size_t rows = parse_size(next(':'));
    const std::size_t cols = parse_size(next(':'));
    std::vector<Elem> entries;
    std::size_t row_count = 0;
    while (true) {
        const auto semi = text.find(';');
        auto tok = text.substr(0, semi);
        std::size_t cnt = 0;
        while (!tok.empty()) {
            const auto comma = tok.find(',');
            auto cell = tok.substr(0, comma);
            Elem v = 0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size())
                throw std::invalid_argument("matrix_from_text: bad entry");
            entries.push_back(v);
            ++cnt;
            if (comma == std::string_view::npos) break;
            tok.remove_prefix(comma + 1);
        }
        if (cnt != cols) throw std::invalid_argument("matrix_from_text: row length mismatch");
        ++row_count;
        if (semi == std::string_view::npos) break;
        text.remove_prefix(semi + 1);
    }
    if (row_count != rows) throw std::invalid_argument("matrix_from_text: row count mismatch");
    return Matrix(F, rows, cols, std::move(entries));
}

} // namespace bcs
