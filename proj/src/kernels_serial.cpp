#include "kernel_eval.hpp"

namespace bcs::kernels {

using detail::advance;

void FiberTally::merge(const FiberTally& other) {
    if (by_poly.size() < other.by_poly.size()) by_poly.resize(other.by_poly.size(), 0);
    for (std::size_t i = 0; i < other.by_poly.size(); ++i) by_poly[i] += other.by_poly[i];
    nonsingular += other.nonsingular;
    singer_by_order += other.singer_by_order;
    criterion_disagreements += other.criterion_disagreements;
}

FiberTally fiber_tally_serial(const Field& F, unsigned m, unsigned n, std::span<const std::uint8_t> primitive) {
    detail::FiberEvaluator eval(F, m, n, primitive);
    FiberTally tally = eval.empty_tally();
    std::vector<std::uint32_t> digits(eval.entries(), 0);
    do {
        eval.visit(digits, tally);
    } while (advance(digits, F.size()));
    return tally;
}

FiberTally fiber_tally_of(const Field& F, unsigned m, unsigned n, std::span<const std::uint8_t> primitive,
                          std::span<const Elem> blocks) {
    detail::FiberEvaluator eval(F, m, n, primitive);
    FiberTally tally = eval.empty_tally();
    const unsigned k = eval.entries();
    if (blocks.size() % k != 0) throw std::invalid_argument("fiber_tally_of: ragged candidate list");
    for (std::size_t off = 0; off < blocks.size(); off += k) eval.visit(blocks.subspan(off, k), tally);
    return tally;
}

std::uint64_t ordered_bases_serial(const Field& base, const OrbitTable& orbits, unsigned m) {
    detail::BasisEvaluator eval(base, orbits, m);
    std::vector<std::uint32_t> tuple(m, 0);
    std::uint64_t count = 0;
    do {
        count += eval.is_basis(tuple);
    } while (advance(tuple, orbits.elements));
    return count;
}

std::vector<std::uint8_t> basis_flags_serial(const Field& base, const OrbitTable& orbits, unsigned m,
                                             std::span<const Elem> tuples) {
    detail::BasisEvaluator eval(base, orbits, m);
    std::vector<std::uint8_t> flags(tuples.size() / m);
    for (std::size_t i = 0; i < flags.size(); ++i) flags[i] = eval.is_basis(tuples.subspan(i * m, m));
    return flags;
}

namespace {

std::uint64_t coprime_serial(const FieldPtr& F, unsigned r, unsigned n, bool monic) {
    const auto table = detail::poly_table(F, n, monic);
    std::vector<std::uint32_t> tuple(r, 0);
    std::uint64_t count = 0;
    do {
        count += detail::tuple_coprime(table, tuple);
    } while (advance(tuple, table.size()));
    return count;
}

} // namespace

std::uint64_t coprime_monic_serial(const FieldPtr& F, unsigned r, unsigned n) { return coprime_serial(F, r, n, true); }
std::uint64_t coprime_all_serial(const FieldPtr& F, unsigned r, unsigned n) { return coprime_serial(F, r, n, false); }

std::pair<std::uint64_t, std::uint64_t> sigma_serial(const FieldPtr& F, unsigned n) {
    const auto table = detail::poly_table(F, n, false);
    std::uint64_t monic = 0, all = 0;
    for (std::uint32_t f = 1; f < table.size(); ++f)
        for (std::uint32_t g = 1; g < table.size(); ++g) {
            const std::uint32_t pair[2] = {f, g};
            if (!detail::tuple_coprime(table, pair)) continue;
            ++all;
            monic += table[g].is_monic();
        }
    return {monic, all};
}

std::uint64_t toeplitz_nonsingular_serial(const Field& F, unsigned n) {
    std::vector<std::uint32_t> c(2 * n - 1, 0);
    std::vector<Elem> work(n * n);
    std::uint64_t count = 0;
    do {
        count += detail::toeplitz_nonsingular(F, n, c, work);
    } while (advance(c, F.size()));
    return count;
}

std::uint64_t nilpotent_serial(const Field& F, unsigned m) {
    std::vector<std::uint32_t> a(m * m, 0);
    std::vector<Elem> out(m * m), scratch(2 * m * m);
    std::uint64_t count = 0;
    do {
        count += detail::nilpotent(F, m, a, out, scratch);
    } while (advance(a, F.size()));
    return count;
}

} // namespace bcs::kernels
