#include "bcs/census.hpp"
#include "bcs/kernels.hpp"
#include "bcs/numtheory.hpp"

#include "census_util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace bcs {

CeilingExceeded::CeilingExceeded(const std::string& what, std::uint64_t required, std::uint64_t ceiling)
    : std::runtime_error(what + " (" +
                         (required == std::numeric_limits<std::uint64_t>::max() ? std::string("over 2^64")
                                                                                 : std::to_string(required)) +
                         " candidates, ceiling " + std::to_string(ceiling) +
                         ") exceeds exhaustive ceiling; rerun with --mode sample"),
      required_(required), ceiling_(ceiling) {}

std::uint64_t search_space(const std::string& what, std::uint64_t base, unsigned exponent, std::uint64_t ceiling) {
    std::uint64_t size = 0;
    try {
        size = checked_pow(base, exponent);
    } catch (const OverflowError&) {
        throw CeilingExceeded(what, std::numeric_limits<std::uint64_t>::max(), ceiling);
    }
    if (size > ceiling) throw CeilingExceeded(what, size, ceiling);
    return size;
}

const char* to_string(PolyClass c) { return c == PolyClass::primitive ? "primitive" : "irreducible"; }

std::uint64_t FiberReport::min_fiber() const {
    std::uint64_t v = std::numeric_limits<std::uint64_t>::max();
    for (const auto& e : per_poly) v = std::min(v, e.fiber_size);
    return per_poly.empty() ? 0 : v;
}

std::uint64_t FiberReport::max_fiber() const {
    std::uint64_t v = 0;
    for (const auto& e : per_poly) v = std::max(v, e.fiber_size);
    return v;
}

std::uint64_t conjectured_fiber_size(std::uint64_t q, unsigned m, unsigned n) {
    if (m == 0 || n == 0) throw std::invalid_argument("conjectured_fiber_size: m and n must be positive");
    std::uint64_t v = checked_pow(q, m * (m - 1) * (n - 1));
    const std::uint64_t qm = checked_pow(q, m);
    for (unsigned i = 1; i < m; ++i) v = checked_mul(v, qm - checked_pow(q, i));
    return v;
}

std::uint64_t conjectured_singer_count(std::uint64_t q, unsigned m, unsigned n) {
    return checked_mul(count_primitive_polys(q, m * n), conjectured_fiber_size(q, m, n));
}

std::uint64_t m2_fiber_size(std::uint64_t q, unsigned n) { return checked_mul(checked_pow(q, 2 * n - 1), q - 1); }

namespace {

FiberReport fibers_impl(std::uint64_t q, unsigned m, unsigned n, const CensusOptions& opts, bool serial) {
    if (m == 0 || n == 0) throw std::invalid_argument("enumerate_fibers: m and n must be positive");
    const FieldPtr F = detail::field_for(q);
    FiberReport rep;
    rep.q = q;
    rep.m = m;
    rep.n = n;
    rep.assemblies = search_space("block companion enumeration", q, m * m * n, opts.ceiling);

    const unsigned d = m * n;
    const std::uint64_t polys = checked_pow(q, d);
    std::vector<std::uint8_t> irreducible(polys), primitive(polys);
    for (std::uint64_t idx = 0; idx < polys; ++idx) {
        const Poly f = monic_from_index(F, d, idx);
        irreducible[idx] = is_irreducible(f);
        primitive[idx] = irreducible[idx] && is_primitive(f);
    }

    const auto tally = serial ? kernels::fiber_tally_serial(*F, m, n, primitive)
                              : kernels::fiber_tally(*F, m, n, primitive, opts.workers);

    rep.formula_fiber = conjectured_fiber_size(q, m, n);
    rep.formula_bcs = conjectured_singer_count(q, m, n);
    rep.formula_bci = checked_mul(count_irreducible_polys(q, d), rep.formula_fiber);
    rep.singer_by_order = tally.singer_by_order;
    rep.criterion_disagreements = tally.criterion_disagreements;

    bool match = true;
    for (std::uint64_t idx = 0; idx < polys; ++idx) {
        if (!irreducible[idx]) continue;
        FiberEntry e;
        e.poly = to_text(monic_from_index(F, d, idx));
        e.cls = primitive[idx] ? PolyClass::primitive : PolyClass::irreducible;
        e.fiber_size = tally.by_poly[idx];
        rep.total_bci += e.fiber_size;
        if (primitive[idx]) rep.total_bcs += e.fiber_size;
        match = match && e.fiber_size == rep.formula_fiber;
        rep.per_poly.push_back(std::move(e));
    }
    rep.all_match = match && rep.total_bci == rep.formula_bci && rep.total_bcs == rep.formula_bcs;
    return rep;
}

} // namespace

FiberReport enumerate_fibers(std::uint64_t q, unsigned m, unsigned n, const CensusOptions& opts) {
    return fibers_impl(q, m, n, opts, false);
}

FiberReport enumerate_fibers_serial(std::uint64_t q, unsigned m, unsigned n, const CensusOptions& opts) {
    return fibers_impl(q, m, n, opts, true);
}

SampleEstimate estimate_from_hits(std::uint64_t population, std::uint64_t sample_size, std::uint64_t hits) {
    if (sample_size == 0) throw std::invalid_argument("estimate_from_hits: empty sample");
    SampleEstimate s;
    s.population = population;
    s.sample_size = sample_size;
    s.hits = hits;
    const double p = static_cast<double>(hits) / static_cast<double>(sample_size);
    const double half = 1.96 * std::sqrt(p * (1 - p) / static_cast<double>(sample_size));
    const auto pop = static_cast<double>(population);
    s.estimate = pop * p;
    s.lower = pop * std::max(0.0, p - half);
    s.upper = pop * std::min(1.0, p + half);
    return s;
}

SampleEstimate sample_singer_count(std::uint64_t q, unsigned m, unsigned n, std::uint64_t sample_size,
                                   std::uint64_t seed) {
    const FieldPtr F = detail::field_for(q);
    const unsigned d = m * n;
    const std::uint64_t population = checked_pow(q, m * m * n);
    const std::uint64_t polys = checked_pow(q, d);
    // Primitive flags are only needed for the polynomials that actually show up.
    std::vector<std::uint8_t> primitive(polys, 0);
    std::vector<std::uint8_t> known(polys, 0);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> entry(0, static_cast<std::uint32_t>(q - 1));
    const unsigned k = m * m * n;
    std::vector<Elem> blocks(static_cast<std::size_t>(sample_size) * k);
    for (auto& v : blocks) v = entry(rng);

    auto tally = kernels::fiber_tally_of(*F, m, n, primitive, blocks);
    std::uint64_t hits = 0;
    for (std::uint64_t idx = 0; idx < polys; ++idx) {
        if (tally.by_poly[idx] == 0) continue;
        if (!known[idx]) {
            primitive[idx] = is_primitive(monic_from_index(F, d, idx));
            known[idx] = 1;
        }
        if (primitive[idx]) hits += tally.by_poly[idx];
    }
    return estimate_from_hits(population, sample_size, hits);
}

} // namespace bcs
