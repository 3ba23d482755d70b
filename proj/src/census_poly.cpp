#include "bcs/census.hpp"
#include "bcs/kernels.hpp"
#include "bcs/numtheory.hpp"

#include "census_util.hpp"

namespace bcs {

std::uint64_t coprime_monic_formula(std::uint64_t q, unsigned r, unsigned n) {
    return checked_pow(q, r * n) - checked_pow(q, r * (n - 1) + 1);
}

std::uint64_t coprime_all_formula(std::uint64_t q, unsigned r, unsigned n) {
    return checked_pow(q, r * n) - checked_pow(q, r * n - r + 1) + q - 1;
}

CoprimeCensus coprime_census(std::uint64_t q, unsigned r, unsigned n, const CensusOptions& opts) {
    if (r < 2 || n < 1) throw std::invalid_argument("coprime_census: need r >= 2 and n >= 1");
    const FieldPtr F = detail::field_for(q);
    search_space("coprime tuple scan", q, r * n, opts.ceiling);
    CoprimeCensus c;
    c.q = q;
    c.r = r;
    c.n = n;
    c.monic_coprime_count = kernels::coprime_monic(F, r, n, opts.workers);
    c.monic_formula = coprime_monic_formula(q, r, n);
    c.all_coprime_count = kernels::coprime_all(F, r, n, opts.workers);
    c.all_formula = coprime_all_formula(q, r, n);
    return c;
}

SigmaCensus sigma_census(std::uint64_t q, unsigned n, const CensusOptions& opts) {
    if (n < 1) throw std::invalid_argument("sigma_census: need n >= 1");
    const FieldPtr F = detail::field_for(q);
    search_space("coprime pair scan", q, 2 * n, opts.ceiling);
    SigmaCensus s;
    s.q = q;
    s.n = n;
    std::tie(s.sigma_count, s.sigma1_count) = kernels::sigma(F, n, opts.workers);
    s.sigma_formula = checked_pow(q, 2 * n - 1) - 1;
    s.sigma1_formula = checked_mul(s.sigma_formula, q - 1);
    return s;
}

ToeplitzCensus toeplitz_census(std::uint64_t q, unsigned n, const CensusOptions& opts) {
    if (n < 1) throw std::invalid_argument("toeplitz_census: need n >= 1");
    const FieldPtr F = detail::field_for(q);
    ToeplitzCensus t;
    t.q = q;
    t.n = n;
    search_space("Toeplitz scan", q, 2 * n - 1, opts.ceiling);
    t.nonsingular = kernels::toeplitz_nonsingular(*F, n, opts.workers);
    t.formula = checked_pow(q, 2 * n - 1) - checked_pow(q, 2 * n - 2);
    return t;
}

TrinomialRoute toeplitz_via_trinomial(std::uint64_t q, unsigned n, const CensusOptions& opts) {
    if (n < 1) throw std::invalid_argument("toeplitz_via_trinomial: need n >= 1");
    const FieldPtr F = detail::field_for(q);
    TrinomialRoute route;
    route.q = q;
    route.n = n;
    std::optional<Poly> f;
    for (Elem a = 0; a < F->size() && !f; ++a)
        for (Elem b = 0; b < F->size() && !f; ++b) {
            std::vector<Elem> c(2 * n + 1, 0);
            c[0] = F->neg(b);
            c[1] = F->add(c[1], F->neg(a));
            c[2 * n] = 1;
            Poly g(F, std::move(c));
            if (is_irreducible(g)) {
                f = std::move(g);
                route.ab = {a, b};
            }
        }
    if (!f) return route;

    search_space("trinomial route", q, 2 * n, opts.ceiling);
    const FieldTower tower = tower_for(q, 2, n);
    const Field& top = *tower.top();
    const auto alpha = least_root(top, *f, tower.base_top_table());
    if (!alpha) throw std::logic_error("toeplitz_via_trinomial: irreducible trinomial without a root");
    std::vector<Elem> powers(2 * n);
    powers[0] = 1;
    for (unsigned k = 1; k < 2 * n; ++k) powers[k] = top.mul(powers[k - 1], *alpha);
    const SubfieldCoordinates coords(tower.top(), tower.base(), {tower.base_top_table().begin(), tower.base_top_table().end()},
                                     powers);

    std::vector<Elem> s(2 * n);
    Matrix T(F, n, n);
    for (Elem beta = 0; beta < top.size(); ++beta) {
        for (unsigned k = 0; k < n; ++k) {
            s[2 * k] = powers[k];
            s[2 * k + 1] = top.mul(powers[k], beta);
        }
        const bool basis = coords.rank(s) == 2 * n;
        const auto c = coords.coordinates(beta); // c[k] is the coefficient of alpha^k
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) T(i, j) = c[n + i - j]; // (c_{n+i-j}) with 1-based i, j
        const bool toeplitz = is_nonsingular(T);
        route.basis_count += basis;
        route.equivalence_failures += basis != toeplitz;
    }
    route.tgl = route.basis_count / q;
    return route;
}

namespace {

bool binomial_criterion(const Field& F, unsigned d, Elem b) {
    const std::uint64_t q = F.size();
    const std::uint64_t e = F.element_order(b);
    for (auto l : factorize(d).primes())
        if (e % l != 0 || ((q - 1) / e) % l == 0) return false;
    return d % 4 != 0 || q % 4 == 1;
}

bool binomial_direct(const FieldPtr& F, unsigned d, Elem b) {
    std::vector<Elem> c(d + 1, 0);
    c[0] = F->neg(b);
    c[d] = 1;
    return is_irreducible(Poly(F, std::move(c)));
}

} // namespace

BinomialVerdict binomial_irreducibility(std::uint64_t q, unsigned d, Elem b) {
    if (d < 2) throw std::invalid_argument("binomial_irreducibility: need d >= 2");
    const FieldPtr F = detail::field_for(q);
    if (b == 0 || !F->contains(b)) throw std::invalid_argument("binomial_irreducibility: b must be a nonzero field element");
    return {binomial_criterion(*F, d, b), binomial_direct(F, d, b)};
}

std::vector<FermatWitness> fermat_condition_search(std::uint64_t q, unsigned count) {
    constexpr unsigned kDirectDegreeLimit = 64;
    if (q % 2 == 0 || !is_prime_power(q))
        throw std::invalid_argument("fermat_condition_search: q must be a power of an odd prime");
    std::uint64_t odd = q - 1;
    while (odd % 2 == 0) odd /= 2;
    if (odd == 1)
        throw std::invalid_argument("fermat_condition_search: q-1 = " + std::to_string(q - 1) +
                                    " has no odd prime factor (q is excluded like a Fermat prime)");
    const std::uint64_t ell = factorize(odd).factors.front().prime;
    const FieldPtr F = detail::field_for(q);
    const Elem b = F->primitive_element();
    std::vector<FermatWitness> out;
    std::uint64_t n = 1;
    for (unsigned i = 1; i <= count; ++i) {
        n = checked_mul(n, ell, std::uint64_t{1} << 31);
        FermatWitness w;
        w.n = static_cast<unsigned>(n);
        w.b = b;
        w.criterion = binomial_criterion(*F, 2 * w.n, b);
        if (2 * n <= kDirectDegreeLimit) w.direct = binomial_direct(F, 2 * w.n, b);
        out.push_back(w);
    }
    return out;
}

std::string to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

bool BoundsTriple::within() const {
    if (observed_min_fiber && L > Rational(*observed_min_fiber)) return false;
    if (observed_max_fiber && Rational(*observed_max_fiber) > U) return false;
    return true;
}

bool BoundsTriple::star_below() const { return L_star <= L; }

BoundsTriple bounds_check(std::uint64_t q, unsigned m, unsigned n, std::optional<std::uint64_t> min_fiber,
                          std::optional<std::uint64_t> max_fiber) {
    using boost::multiprecision::cpp_int;
    if (q < 2 || m == 0 || n == 0) throw std::invalid_argument("bounds_check: need q >= 2 and positive m, n");
    auto qpow = [&](long long e) {
        const cpp_int big = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(e < 0 ? -e : e));
        return e < 0 ? Rational(cpp_int(1), big) : Rational(big);
    };
    const long long mn = static_cast<long long>(m) * n;
    const Rational qmn = qpow(mn);
    const Rational head = Rational(cpp_int(q) - 2) * qmn + 1;
    BoundsTriple b;
    b.q = q;
    b.m = m;
    b.n = n;
    b.L = head * qpow(mn * (m - 1)) / (Rational(cpp_int(q - 1)) * (qmn - 1));
    b.U = 1;
    for (unsigned i = 1; i < m; ++i) b.U *= qmn - qpow(i);
    b.L_star = head * qpow(mn * (static_cast<long long>(m) - 2) - 1);
    b.observed_min_fiber = min_fiber;
    b.observed_max_fiber = max_fiber;
    return b;
}

PolynomialCounts polynomial_counts(std::uint64_t q, unsigned d, const CensusOptions& opts) {
    if (d < 1) throw std::invalid_argument("polynomial_counts: need d >= 1");
    const FieldPtr F = detail::field_for(q);
    const std::uint64_t total = search_space("monic polynomial scan", q, d, opts.ceiling);
    PolynomialCounts c;
    c.q = q;
    c.d = d;
    for (std::uint64_t i = 0; i < total; ++i) {
        const Poly f = monic_from_index(F, d, i);
        if (!is_irreducible(f)) continue;
        ++c.irreducible_scan;
        c.primitive_scan += is_primitive(f);
    }
    c.irreducible_formula = count_irreducible_polys(q, d);
    c.primitive_formula = count_primitive_polys(q, d);
    return c;
}

} // namespace bcs
