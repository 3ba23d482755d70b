#include "kernel_eval.hpp"

#include <omp.h>

namespace bcs::kernels {

namespace {

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Sum of visit(state, i) over i in [0, total), one `state` per thread.
template <class MakeState, class Visit>
std::uint64_t parallel_count(std::uint64_t total, int workers, MakeState make, Visit visit) {
    std::uint64_t count = 0;
    const auto last = static_cast<std::int64_t>(total);
#pragma omp parallel num_threads(thread_count(workers)) reduction(+ : count)
    {
        auto state = make();
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < last; ++i) count += visit(state, static_cast<std::uint64_t>(i));
    }
    return count;
}

std::uint64_t coprime_parallel(const FieldPtr& F, unsigned r, unsigned n, bool monic, int workers) {
    const auto table = detail::poly_table(F, n, monic);
    const std::uint64_t total = checked_pow(table.size(), r);
    return parallel_count(
        total, workers, [&] { return std::vector<std::uint32_t>(r); },
        [&](std::vector<std::uint32_t>& tuple, std::uint64_t i) {
            detail::decode(i, table.size(), tuple);
            return std::uint64_t{detail::tuple_coprime(table, tuple)};
        });
}

} // namespace

FiberTally fiber_tally(const Field& F, unsigned m, unsigned n, std::span<const std::uint8_t> primitive, int workers) {
    const detail::FiberEvaluator probe(F, m, n, primitive);
    FiberTally total = probe.empty_tally();
    const auto last = static_cast<std::int64_t>(checked_pow(F.size(), probe.entries()));
#pragma omp parallel num_threads(thread_count(workers))
    {
        detail::FiberEvaluator eval(F, m, n, primitive);
        FiberTally local = eval.empty_tally();
        std::vector<std::uint32_t> digits(eval.entries());
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < last; ++i) {
            detail::decode(static_cast<std::uint64_t>(i), F.size(), digits);
            eval.visit(digits, local);
        }
#pragma omp critical(bcs_fiber_merge)
        total.merge(local);
    }
    return total;
}

std::uint64_t ordered_bases(const Field& base, const OrbitTable& orbits, unsigned m, int workers) {
    const detail::BasisEvaluator probe(base, orbits, m);
    return parallel_count(
        checked_pow(orbits.elements, m), workers,
        [&] { return std::pair{detail::BasisEvaluator(base, orbits, m), std::vector<std::uint32_t>(m)}; },
        [&](auto& state, std::uint64_t i) {
            detail::decode(i, orbits.elements, state.second);
            return std::uint64_t{state.first.is_basis(state.second)};
        });
}

std::vector<std::uint8_t> basis_flags(const Field& base, const OrbitTable& orbits, unsigned m,
                                      std::span<const Elem> tuples, int workers) {
    const detail::BasisEvaluator probe(base, orbits, m);
    std::vector<std::uint8_t> flags(tuples.size() / m);
    const auto last = static_cast<std::int64_t>(flags.size());
#pragma omp parallel num_threads(thread_count(workers))
    {
        detail::BasisEvaluator eval(base, orbits, m);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < last; ++i)
            flags[static_cast<std::size_t>(i)] = eval.is_basis(tuples.subspan(static_cast<std::size_t>(i) * m, m));
    }
    return flags;
}

std::uint64_t coprime_monic(const FieldPtr& F, unsigned r, unsigned n, int workers) {
    return coprime_parallel(F, r, n, true, workers);
}

std::uint64_t coprime_all(const FieldPtr& F, unsigned r, unsigned n, int workers) {
    return coprime_parallel(F, r, n, false, workers);
}

std::pair<std::uint64_t, std::uint64_t> sigma(const FieldPtr& F, unsigned n, int workers) {
    const auto table = detail::poly_table(F, n, false);
    const std::uint64_t side = table.size() - 1;
    std::uint64_t monic = 0, all = 0;
    const auto last = static_cast<std::int64_t>(side * side);
#pragma omp parallel for schedule(static) num_threads(thread_count(workers)) reduction(+ : monic, all)
    for (std::int64_t i = 0; i < last; ++i) {
        const auto f = static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) / side + 1);
        const auto g = static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) % side + 1);
        const std::uint32_t pair[2] = {f, g};
        if (!detail::tuple_coprime(table, pair)) continue;
        ++all;
        monic += table[g].is_monic();
    }
    return {monic, all};
}

std::uint64_t toeplitz_nonsingular(const Field& F, unsigned n, int workers) {
    return parallel_count(
        checked_pow(F.size(), 2 * n - 1), workers,
        [&] { return std::pair{std::vector<std::uint32_t>(2 * n - 1), std::vector<Elem>(n * n)}; },
        [&](auto& state, std::uint64_t i) {
            detail::decode(i, F.size(), state.first);
            return std::uint64_t{detail::toeplitz_nonsingular(F, n, state.first, state.second)};
        });
}

std::uint64_t nilpotent(const Field& F, unsigned m, int workers) {
    struct State {
        std::vector<std::uint32_t> a;
        std::vector<Elem> out, scratch;
    };
    return parallel_count(
        checked_pow(F.size(), m * m), workers,
        [&] { return State{std::vector<std::uint32_t>(m * m), std::vector<Elem>(m * m), std::vector<Elem>(2 * m * m)}; },
        [&](State& s, std::uint64_t i) {
            detail::decode(i, F.size(), s.a);
            return std::uint64_t{detail::nilpotent(F, m, s.a, s.out, s.scratch)};
        });
}

} // namespace bcs::kernels
