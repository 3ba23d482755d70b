#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcs/linalg.hpp"
#include "bcs/numtheory.hpp"
#include "oracles.hpp"

#include <random>

using namespace bcs;

namespace {

Matrix random_matrix(const FieldPtr& F, std::size_t n, std::mt19937& rng) {
    Matrix a(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng() % F->size();
    return a;
}

oracle::Vec entries(const Matrix& a) { return {a.data().begin(), a.data().end()}; }

} // namespace

TEST_CASE("determinant, rank and characteristic polynomial match Leibniz expansion") {
    std::mt19937 rng(11);
    for (const auto& [p, k] : {std::pair<std::uint32_t, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        const auto F = Field::canonical(p, k);
        const oracle::Field O(p, k);
        for (std::size_t n = 1; n <= 5; ++n)
            for (int t = 0; t < 40; ++t) {
                const Matrix a = random_matrix(F, n, rng);
                CHECK(determinant(a) == oracle::det(O, entries(a), n));
                CHECK(rank(a) == oracle::rank(O, entries(a), n, n));
                CHECK(is_nonsingular(a) == (oracle::det(O, entries(a), n) != 0));
                const Poly cp = char_poly(a);
                CHECK(cp.coeffs() == oracle::char_poly(O, entries(a), n));
            }
    }
}

TEST_CASE("companion matrix has the given characteristic polynomial") {
    const auto F = Field::canonical(3, 1);
    for (std::uint64_t i = 0; i < 81; ++i) {
        const Poly f = monic_from_index(F, 4, i);
        CHECK(char_poly(companion(f)) == f);
    }
}

TEST_CASE("orders and Singer cycles") {
    std::mt19937 rng(5);
    for (const auto& [p, n] : {std::pair<std::uint32_t, std::size_t>{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
        const auto F = Field::prime(p);
        const oracle::Field O(p, 1);
        const std::uint64_t full = checked_pow(p, n) - 1;
        for (int t = 0; t < 60; ++t) {
            const Matrix a = random_matrix(F, n, rng);
            const std::uint64_t ord = oracle::mat_order(O, entries(a), n);
            if (ord == 0) {
                CHECK_THROWS(matrix_order(a));
                CHECK_FALSE(is_singer_cycle(a));
                continue;
            }
            CHECK(matrix_order(a) == ord);
            CHECK(has_exact_order(a, ord));
            CHECK(is_singer_cycle(a) == (ord == full));
        }
    }
    const auto F2 = Field::prime(2);
    CHECK(is_singer_cycle(companion(poly_from_text(F2, "1,1,0,0,1"))));
    CHECK_FALSE(is_singer_cycle(companion(poly_from_text(F2, "1,1,1,1,1")))); // irreducible, order 5
}

TEST_CASE("block companion assembly and recognition") {
    const auto F = Field::prime(3);
    std::mt19937 rng(2);
    BlockCompanionSpec spec{2, 3, {}};
    for (int k = 0; k < 3; ++k) spec.blocks.push_back(random_matrix(F, 2, rng));
    const Matrix t = assemble_block_companion(spec);
    oracle::Vec flat;
    for (const auto& b : spec.blocks) flat.insert(flat.end(), b.data().begin(), b.data().end());
    CHECK(entries(t) == oracle::block_companion(flat, 2, 3));
    const auto back = recognize_block_companion(t, 2, 3);
    REQUIRE(back.has_value());
    CHECK(*back == spec);
    Matrix broken = t;
    broken(0, 0) = 1;
    CHECK_FALSE(recognize_block_companion(broken, 2, 3).has_value());
    CHECK_FALSE(recognize_block_companion(t, 3, 2).has_value());
}

TEST_CASE("subfield coordinates invert combination") {
    const FieldTower T = FieldTower::build(2, 2, 2, 2);
    const SubfieldCoordinates C = top_over_base(T);
    CHECK(C.dimension() == 4);
    for (Elem x = 0; x < T.top()->size(); ++x) {
        const auto c = C.coordinates(x);
        for (Elem v : c) CHECK(T.base()->contains(v));
        CHECK(C.combine(c) == x);
    }
    CHECK(C.rank(C.basis()) == 4);
    const SubfieldCoordinates D = mid_over_base(T);
    CHECK(D.dimension() == 2);
}

TEST_CASE("block companion lift of an irreducible polynomial") {
    for (const auto& [p, e, m, n] : {std::tuple<std::uint32_t, unsigned, unsigned, unsigned>{2, 1, 2, 2},
                                      {3, 1, 2, 2},
                                      {2, 1, 3, 2},
                                      {2, 1, 2, 3},
                                      {2, 2, 2, 1}}) {
        const FieldTower T = FieldTower::build(p, e, m, n);
        const unsigned d = m * n;
        for (std::uint64_t i = 0; i < checked_pow(T.q(), d); ++i) {
            const Poly f = monic_from_index(T.base(), d, i);
            if (!is_irreducible(f)) continue;
            const Matrix t = lift_to_block_companion(T, f);
            CHECK(recognize_block_companion(t, m, n).has_value());
            CHECK(char_poly(t) == f);
        }
    }
}

TEST_CASE("regular representation is a ring homomorphism") {
    const FieldTower T = FieldTower::build(3, 1, 2, 2);
    const auto& K = *T.mid();
    std::mt19937 rng(9);
    for (int t = 0; t < 50; ++t) {
        const Elem a = rng() % K.size(), b = rng() % K.size();
        CHECK(regular_representation(T, K.mul(a, b)) == regular_representation(T, a) * regular_representation(T, b));
        CHECK(regular_representation(T, K.add(a, b)) == regular_representation(T, a) + regular_representation(T, b));
    }
    CHECK(regular_representation(T, 1) == Matrix::identity(T.base(), 2));
}

TEST_CASE("centralizer of a cyclic matrix matches a brute-force count") {
    const auto F = Field::prime(2);
    const oracle::Field O(2, 1);
    const Matrix t = companion(poly_from_text(F, "1,1,0,0,1"));
    const oracle::Vec tv = entries(t);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < 65536; ++idx) {
        const oracle::Vec a = O.digits_of(idx, 16);
        if (oracle::mat_mul(O, a, tv, 4) == oracle::mat_mul(O, tv, a, 4) && oracle::det(O, a, 4)) ++count;
    }
    CHECK(centralizer_size(t) == count);
    CHECK(count == 15);
    CHECK_THROWS_AS(centralizer_size(Matrix::identity(F, 2)), std::domain_error);
}

TEST_CASE("nilpotent matrices match brute force") {
    for (const auto& [q, m] : {std::pair<std::uint32_t, unsigned>{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        const auto pp = prime_power_decompose(q);
        const oracle::Field O(static_cast<std::uint32_t>(pp.first), pp.second);
        const auto c = nilpotent_count(q, m);
        REQUIRE(c.verified());
        CHECK(*c.enumerated == oracle::nilpotent(O, m));
        CHECK(c.formula == checked_pow(q, m * (m - 1)));
    }
    CHECK_FALSE(nilpotent_count(2, 3, 100).verified());
}

TEST_CASE("matrix text form round trips") {
    const auto F = Field::canonical(3, 2);
    std::mt19937 rng(1);
    const Matrix a = random_matrix(F, 3, rng);
    CHECK(matrix_from_text(to_text(a)) == a);
    CHECK(to_text(Matrix::identity(Field::prime(2), 2)) == "2^1:2:2:1,0;0,1");
    CHECK_THROWS(matrix_from_text("2^1:2:2:1,0;0"));
}
