#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcs/census.hpp"
#include "bcs/numtheory.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace bcs;

namespace {

// q^{m(m-1)(n-1)} * prod_{i=1}^{m-1} (q^m - q^i), evaluated independently of the library.
std::uint64_t fiber_formula(std::uint64_t q, unsigned m, unsigned n) {
    std::uint64_t v = oracle::ipow(q, m * (m - 1) * (n - 1));
    for (unsigned i = 1; i < m; ++i) v *= oracle::ipow(q, m) - oracle::ipow(q, i);
    return v;
}

oracle::Field oracle_field(std::uint64_t q, unsigned k = 1) {
    const auto pp = prime_power_decompose(q);
    return oracle::Field(static_cast<std::uint32_t>(pp.first), pp.second * k);
}

} // namespace

TEST_CASE("closed forms") {
    CHECK(conjectured_fiber_size(5, 1, 3) == 1);
    CHECK(conjectured_fiber_size(2, 2, 2) == 8);
    CHECK(conjectured_fiber_size(2, 3, 2) == 1536);
    CHECK(conjectured_fiber_size(2, 2, 1) == 2);
    for (std::uint64_t q : {2, 3, 4, 5})
        for (unsigned n = 1; n <= 4; ++n) {
            CHECK(conjectured_fiber_size(q, 2, n) == m2_fiber_size(q, n));
            CHECK(m2_fiber_size(q, n) == oracle::ipow(q, 2 * n - 1) * (q - 1));
            for (unsigned m = 1; m <= 3; ++m) CHECK(conjectured_fiber_size(q, m, n) == fiber_formula(q, m, n));
        }
    CHECK(conjectured_singer_count(2, 2, 2) == 16);
    CHECK(conjectured_singer_count(2, 1, 4) == 2);
    CHECK(conjectured_singer_count(3, 2, 1) == 12);
    CHECK(conjectured_splitting_count(2, 2, 2) == 20);
    CHECK(conjectured_splitting_count(2, 1, 4) == 15);
    CHECK(conjectured_splitting_count(3, 2, 1) == 1);
    CHECK(conjectured_pointed_count(2, 2, 2) == 4);
    CHECK(coprime_monic_formula(2, 2, 2) == 8);
    CHECK(coprime_all_formula(2, 2, 2) == 9);
    CHECK(coprime_all_formula(3, 2, 1) == 8);
}

TEST_CASE("fiber enumeration matches the brute-force oracle") {
    for (const auto& [q, m, n] : {std::tuple<std::uint64_t, unsigned, unsigned>{2, 2, 2},
                                   {2, 1, 4},
                                   {2, 2, 1},
                                   {3, 2, 1},
                                   {4, 2, 1}}) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(n);
        const FiberReport rep = enumerate_fibers(q, m, n);
        const auto census = oracle::fibers(oracle_field(q), m, n);
        REQUIRE(rep.per_poly.size() == census.by_irreducible.size());
        std::size_t i = 0;
        std::uint64_t bci = 0;
        for (const auto& [poly, count] : census.by_irreducible) {
            (void)poly;
            bci += count;
            ++i;
        }
        std::map<std::string, std::uint64_t> mine;
        for (const auto& e : rep.per_poly) mine[e.poly] = e.fiber_size;
        for (const auto& [poly, count] : census.by_irreducible) {
            std::string text;
            for (std::size_t k = 0; k < poly.size(); ++k) text += (k ? "," : "") + std::to_string(poly[k]);
            CHECK(mine.at(text) == count);
            CHECK(count == fiber_formula(q, m, n));
        }
        CHECK(rep.total_bci == bci);
        CHECK(rep.total_bcs == census.singer);
        CHECK(rep.singer_by_order == census.singer);
        CHECK(rep.criterion_disagreements == 0);
        CHECK(rep.surjective());
        CHECK(rep.uniform());
        CHECK(rep.all_match);
    }
}

TEST_CASE("fiber reports: every class consistent, serial equals parallel") {
    for (const auto& [q, m, n] : {std::tuple<std::uint64_t, unsigned, unsigned>{2, 2, 2}, {2, 2, 3}, {3, 2, 2}}) {
        const FiberReport a = enumerate_fibers(q, m, n, {kDefaultCeiling, 4});
        const FiberReport b = enumerate_fibers_serial(q, m, n);
        REQUIRE(a.per_poly.size() == b.per_poly.size());
        std::uint64_t bcs_sum = 0, primitive = 0;
        for (std::size_t i = 0; i < a.per_poly.size(); ++i) {
            CHECK(a.per_poly[i].poly == b.per_poly[i].poly);
            CHECK(a.per_poly[i].fiber_size == b.per_poly[i].fiber_size);
            CHECK(a.per_poly[i].cls == b.per_poly[i].cls);
            if (a.per_poly[i].cls == PolyClass::primitive) {
                bcs_sum += a.per_poly[i].fiber_size;
                ++primitive;
            }
        }
        CHECK(a.total_bcs == bcs_sum);
        CHECK(primitive == count_primitive_polys(q, m * n));
        CHECK(a.per_poly.size() == count_irreducible_polys(q, m * n));
        CHECK(a.formula_bci == a.per_poly.size() * a.formula_fiber);
    }
}

TEST_CASE("ceiling guard") {
    try {
        enumerate_fibers(2, 3, 3);
        FAIL("expected CeilingExceeded");
    } catch (const CeilingExceeded& e) {
        CHECK(std::string(e.what()).find("exceeds exhaustive ceiling; rerun with --mode sample") != std::string::npos);
        CHECK(e.required() == (std::uint64_t{1} << 27));
        CHECK(e.ceiling() == kDefaultCeiling);
    }
    CHECK_THROWS_AS(enumerate_fibers(2, 2, 2, {100, 0}), CeilingExceeded);
    CHECK_THROWS_AS(toeplitz_census(3, 3, {10, 0}), CeilingExceeded);
    CHECK_THROWS_AS(search_space("x", 2, 80, kDefaultCeiling), CeilingExceeded);
}

TEST_CASE("sampling is seeded and its interval covers the true count") {
    const auto a = sample_singer_count(2, 2, 2, 4000, 42);
    const auto b = sample_singer_count(2, 2, 2, 4000, 42);
    CHECK(a.hits == b.hits);
    CHECK(a.population == 256);
    CHECK(a.lower <= 16.0);
    CHECK(16.0 <= a.upper);
    const auto e = estimate_from_hits(1000, 100, 25);
    CHECK(e.estimate == doctest::Approx(250.0));
    const double half = 1.96 * std::sqrt(0.25 * 0.75 / 100) * 1000;
    CHECK(e.upper - e.estimate == doctest::Approx(half).epsilon(1e-9));
}

TEST_CASE("ordered bases and splitting subspaces match the oracle") {
    for (const auto& [q, m, n] : {std::tuple<std::uint64_t, unsigned, unsigned>{2, 2, 2},
                                   {2, 2, 3},
                                   {3, 2, 2},
                                   {2, 1, 4},
                                   {3, 2, 1}}) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(n);
        const FieldTower T = tower_for(q, m, n);
        const Elem alpha = default_alpha(T);
        const oracle::Field E = oracle_field(q, m * n);
        const auto o = oracle::splitting(E, alpha, m, n);
        const std::uint64_t N = count_ordered_bases_N(T, alpha);
        CHECK(N == o.N);
        CHECK(N == count_ordered_bases_N_serial(T, alpha));
        const SplittingSet set = enumerate_splitting_subspaces(T, alpha);
        CHECK(set.count() == o.S);
        CHECK(set.count() == conjectured_splitting_count(q, m, n));
        const auto pointed = pointed_splitting_counts(T, set);
        CHECK(pointed.size() == T.top()->size() - 1);
        for (const auto& [x, c] : pointed) CHECK(c == o.pointed.at(x));
        // bridge identities
        const std::uint64_t units = T.top()->size() - 1;
        CHECK(N % units == 0);
        CHECK(N / units == fiber_formula(q, m, n));
        CHECK(N == set.count() * general_linear_order(q, m));
    }
}

TEST_CASE("ordered basis example values") {
    const FieldTower T = tower_for(2, 2, 2);
    CHECK(count_ordered_bases_N(T, default_alpha(T)) == 120);
    CHECK(count_ordered_bases_N(tower_for(2, 1, 2), default_alpha(tower_for(2, 1, 2))) == 3);
    CHECK_THROWS_AS(count_ordered_bases_N(T, 1), std::invalid_argument);
    const auto F2 = Field::prime(2);
    CHECK(fiber_via_N(T, poly_from_text(F2, "1,1,0,0,1")) == 8);
    CHECK(fiber_via_N(T, poly_from_text(F2, "1,1,1,1,1")) == 8);
    const FieldTower T14 = tower_for(2, 1, 4);
    CHECK(fiber_via_N(T14, poly_from_text(F2, "1,0,0,1,1")) == 1);
    CHECK_THROWS_AS(fiber_via_N(T, poly_from_text(F2, "1,0,1,0,1")), std::invalid_argument);
}

TEST_CASE("grouping ordered bases by matrix") {
    const FieldTower T = tower_for(2, 2, 2);
    const auto g = group_bases_by_matrix(T, default_alpha(T));
    CHECK(g.bases == 120);
    CHECK(g.classes == 8);
    CHECK(g.min_class == 15);
    CHECK(g.max_class == 15);
    CHECK(g.all_block_companion);
    CHECK(g.all_char_poly_match);
    CHECK(g.centralizer == 15);
}

TEST_CASE("gaussian binomial matches distinct-span enumeration") {
    const oracle::Field F2(2, 1), F3(3, 1);
    CHECK(gaussian_binomial(2, 4, 2) == oracle::subspaces(F2, 4, 2));
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(3, 4, 2) == oracle::subspaces(F3, 4, 2));
    CHECK(gaussian_binomial(2, 5, 2) == oracle::subspaces(F2, 5, 2));
    CHECK(gaussian_binomial(2, 6, 3) == 1395);
    CHECK(gaussian_binomial(5, 3, 0) == 1);
    CHECK(gaussian_binomial(5, 3, 3) == 1);
}

TEST_CASE("structural checks on splitting subspaces") {
    for (const auto& [q, m, n] : {std::tuple<std::uint64_t, unsigned, unsigned>{2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 3, 2}}) {
        const FieldTower T = tower_for(q, m, n);
        const Elem alpha = default_alpha(T);
        const auto set = enumerate_splitting_subspaces(T, alpha);
        const auto r = verify_elemsplit(T, alpha, set);
        CHECK(r.passed());
    }
    // a deliberately tiny ceiling forces the sampled path
    const FieldTower T = tower_for(2, 2, 2);
    const auto set = enumerate_splitting_subspaces(T, default_alpha(T));
    const auto r = verify_elemsplit(T, default_alpha(T), set, {8, 0}, 16, 3);
    CHECK(r.passed());
    CHECK_FALSE(r.span_closure.exhaustive);
    CHECK_THROWS_AS(pointed_splitting_counts(T, set, {0}), std::invalid_argument);
}

TEST_CASE("coprime and sigma censuses match brute force") {
    for (std::uint64_t q : {2, 3}) {
        const oracle::Field F = oracle_field(q);
        for (unsigned n : {1u, 2u, 3u}) {
            for (unsigned r : {2u, 3u}) {
                const auto c = coprime_census(q, r, n);
                CHECK(c.monic_coprime_count == oracle::coprime(F, r, n, true));
                CHECK(c.all_coprime_count == oracle::coprime(F, r, n, false));
                CHECK(c.monic_coprime_count == c.monic_formula);
                CHECK(c.all_coprime_count == c.all_formula);
            }
            // pairs (f, g) of nonzero polynomials of degree < n, coprime, g monic (or not)
            std::uint64_t sigma = 0, sigma1 = 0;
            const std::uint64_t per = oracle::ipow(q, n);
            for (std::uint64_t i = 1; i < per; ++i)
                for (std::uint64_t j = 1; j < per; ++j) {
                    const auto f = oracle::any_poly(F, n, i), g = oracle::any_poly(F, n, j);
                    if (oracle::gcd(F, f, g).degree() != 0) continue;
                    ++sigma1;
                    sigma += g.c.back() == 1;
                }
            const auto s = sigma_census(q, n);
            CHECK(s.sigma_count == sigma);
            CHECK(s.sigma1_count == sigma1);
            CHECK(s.sigma_formula == oracle::ipow(q, 2 * n - 1) - 1);
            CHECK(s.sigma1_count == s.sigma_count * (q - 1));
        }
    }
    CHECK(coprime_census(2, 2, 1).monic_coprime_count == 2);
    CHECK(coprime_census(3, 2, 1).all_coprime_count == 8);
    CHECK(sigma_census(3, 2).sigma_count == 26);
}

TEST_CASE("Toeplitz census and the trinomial route") {
    for (std::uint64_t q : {2, 3})
        for (unsigned n : {1u, 2u, 3u}) {
            const auto t = toeplitz_census(q, n);
            CHECK(t.nonsingular == oracle::toeplitz(oracle_field(q), n));
            CHECK(t.nonsingular == t.formula);
            const auto route = toeplitz_via_trinomial(q, n);
            REQUIRE(route.applies());
            CHECK(route.tgl == t.nonsingular);
            CHECK(route.equivalence_failures == 0);
            CHECK(route.basis_count == m2_fiber_size(q, n));
            // the chosen trinomial really is irreducible
            const auto F = Field::prime(static_cast<std::uint32_t>(q));
            std::vector<Elem> c(2 * n + 1, 0);
            c[0] = F->neg(route.ab->second);
            c[1] = F->add(c[1], F->neg(route.ab->first));
            c[2 * n] = F->add(c[2 * n], 1);
            CHECK(is_irreducible(Poly(F, c)));
        }
    CHECK(toeplitz_census(2, 2).nonsingular == 4);
    CHECK(toeplitz_census(3, 2).nonsingular == 18);
}

TEST_CASE("binomial criterion agrees with direct irreducibility") {
    for (std::uint64_t q : {3, 5, 7, 9}) {
        const oracle::Field O = oracle_field(q);
        for (unsigned d = 2; d <= 8; ++d)
            for (Elem b = 1; b < q; ++b) {
                const auto v = binomial_irreducibility(q, d, b);
                CHECK(v.agree());
                if (d <= 4) {
                    oracle::Poly f{oracle::Vec(d + 1, 0)};
                    f.c[0] = O.neg(b);
                    f.c[d] = 1;
                    CHECK(v.direct == oracle::irreducible(O, f));
                }
            }
    }
    CHECK(binomial_irreducibility(3, 2, 2).criterion);
    CHECK_FALSE(binomial_irreducibility(3, 2, 1).criterion);
    CHECK(binomial_irreducibility(5, 4, 2).criterion);
    CHECK(binomial_irreducibility(5, 4, 2).direct);
    CHECK_THROWS_AS(binomial_irreducibility(3, 2, 0), std::invalid_argument);
}

TEST_CASE("odd non-Fermat binomial family") {
    const auto w = fermat_condition_search(7, 2);
    REQUIRE(w.size() == 2);
    CHECK(w[0].n == 3);
    CHECK(w[1].n == 9);
    CHECK(w[0].b == 3);
    CHECK(w[1].b == 3);
    CHECK(w[0].criterion);
    CHECK(w[0].direct.value_or(false));
    const auto w11 = fermat_condition_search(11, 1);
    REQUIRE(w11.size() == 1);
    CHECK(w11[0].n == 5);
    CHECK(w11[0].b == 2);
    CHECK(w11[0].criterion);
    CHECK_THROWS_AS(fermat_condition_search(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(fermat_condition_search(17, 1), std::invalid_argument);
    CHECK_THROWS_AS(fermat_condition_search(8, 1), std::invalid_argument);
}

TEST_CASE("fiber bounds in exact arithmetic") {
    const auto b = bounds_check(2, 2, 2, 8, 8);
    CHECK(b.L == Rational(16, 15));
    CHECK(b.U == Rational(14));
    CHECK(b.within());
    const auto c = bounds_check(3, 2, 2, 54, 54);
    CHECK(c.L == Rational(82 * 81, 160));
    CHECK(c.U == Rational(78));
    CHECK(c.within());
    CHECK(c.star_below());
    CHECK(to_string(c.L) == "3321/80");
    const auto one = bounds_check(2, 1, 4, 1, 1);
    CHECK(one.U == Rational(1));
    CHECK(one.within());
    CHECK_FALSE(bounds_check(2, 2, 2, 15, 15).within());
}

TEST_CASE("polynomial count scans") {
    for (std::uint64_t q : {2, 3})
        for (unsigned d : {1u, 2u, 3u, 4u, 6u}) {
            const auto c = polynomial_counts(q, d);
            CHECK(c.irreducible_scan == c.irreducible_formula);
            CHECK(c.primitive_scan == c.primitive_formula);
            if (d <= 4) CHECK(c.irreducible_scan == oracle::count_irreducible(oracle_field(q), d));
        }
}
