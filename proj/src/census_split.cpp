#include "bcs/census.hpp"
#include "bcs/kernels.hpp"
#include "bcs/numtheory.hpp"

#include "census_util.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace bcs {

namespace {

using Key = std::vector<Elem>;

/// Reduced echelon form of the span of `vectors`, returned as top-field elements.
Key rref_key(const SubfieldCoordinates& coords, std::span<const Elem> vectors) {
    const Field& F = coords.small();
    const std::size_t dim = coords.dimension();
    std::vector<std::vector<Elem>> rows;
    for (auto v : vectors) rows.push_back(coords.coordinates(v));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < dim && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const Elem inv = F.inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Elem f = rows[r][c];
            for (std::size_t k = 0; k < dim; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
        }
        ++rank;
    }
    Key key;
    for (std::size_t r = 0; r < rank; ++r) key.push_back(coords.combine(rows[r]));
    return key;
}

std::vector<Elem> scaled(const Field& top, Elem beta, std::span<const Elem> w) {
    std::vector<Elem> out(w.size());
    std::transform(w.begin(), w.end(), out.begin(), [&](Elem v) { return top.mul(beta, v); });
    return out;
}

} // namespace

FieldTower tower_for(std::uint64_t q, unsigned m, unsigned n) {
    const FieldPtr base = detail::field_for(q);
    return FieldTower::build(base->characteristic(), base->degree(), m, n);
}

Elem default_alpha(const FieldTower& tower) { return tower.top()->generator(); }

std::uint64_t count_ordered_bases_N(const FieldTower& tower, Elem alpha, const CensusOptions& opts) {
    detail::require_generator(tower, alpha);
    search_space("ordered basis scan", tower.top()->size(), tower.m(), opts.ceiling);
    const auto orbits = detail::orbit_table(tower, alpha, top_over_base(tower));
    return kernels::ordered_bases(*tower.base(), orbits, tower.m(), opts.workers);
}

std::uint64_t count_ordered_bases_N_serial(const FieldTower& tower, Elem alpha, const CensusOptions& opts) {
    detail::require_generator(tower, alpha);
    search_space("ordered basis scan", tower.top()->size(), tower.m(), opts.ceiling);
    const auto orbits = detail::orbit_table(tower, alpha, top_over_base(tower));
    return kernels::ordered_bases_serial(*tower.base(), orbits, tower.m());
}

std::uint64_t fiber_via_N(const FieldTower& tower, const Poly& f, const CensusOptions& opts) {
    const unsigned d = tower.m() * tower.n();
    if (!same_field(f.field(), *tower.base()) || !f.is_monic() || f.degree() != static_cast<int>(d) ||
        !is_irreducible(f))
        throw std::invalid_argument("fiber_via_N: need a monic irreducible polynomial of degree mn over the base");
    const auto alpha = least_root(*tower.top(), f, tower.base_top_table());
    if (!alpha) throw std::logic_error("fiber_via_N: irreducible polynomial has no root in the top field");
    const std::uint64_t N = count_ordered_bases_N(tower, *alpha, opts);
    const std::uint64_t units = tower.top()->size() - 1;
    if (N % units != 0) throw std::logic_error("fiber_via_N: N is not divisible by q^{mn}-1");
    return N / units;
}

BasisGrouping group_bases_by_matrix(const FieldTower& tower, Elem alpha, const CensusOptions& opts) {
    detail::require_generator(tower, alpha);
    const unsigned m = tower.m(), n = tower.n();
    const std::uint64_t total = search_space("basis grouping", tower.top()->size(), m, opts.ceiling);
    const auto coords = top_over_base(tower);
    const auto orbits = detail::orbit_table(tower, alpha, coords);

    std::vector<Elem> tuples(total * m);
    std::vector<std::uint32_t> digits(m, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        for (unsigned j = 0; j < m; ++j) tuples[i * m + j] = digits[j];
        detail::advance(digits, tower.top()->size());
    }
    const auto flags = kernels::basis_flags(*tower.base(), orbits, m, tuples, opts.workers);

    const Poly f = min_poly_over_base(tower, alpha);
    const Field& top = *tower.top();
    BasisGrouping g;
    g.all_block_companion = true;
    g.all_char_poly_match = true;
    std::map<std::vector<Elem>, std::uint64_t> classes;
    std::optional<Matrix> representative;
    std::vector<Elem> basis(std::size_t{m} * n);
    for (std::uint64_t i = 0; i < total; ++i) {
        if (!flags[i]) continue;
        ++g.bases;
        for (unsigned j = 0; j < m; ++j) {
            Elem cur = tuples[i * m + j];
            for (unsigned k = 0; k < n; ++k) {
                basis[k * m + j] = cur;
                cur = top.mul(cur, alpha);
            }
        }
        Matrix T = matrix_of_mult_in_basis(tower, alpha, basis);
        g.all_block_companion = g.all_block_companion && recognize_block_companion(T, m, n).has_value();
        g.all_char_poly_match = g.all_char_poly_match && char_poly(T) == f;
        ++classes[{T.data().begin(), T.data().end()}];
        if (!representative) representative = std::move(T);
    }
    g.classes = classes.size();
    if (!classes.empty()) {
        g.min_class = std::numeric_limits<std::uint64_t>::max();
        for (const auto& [k, c] : classes) {
            g.min_class = std::min(g.min_class, c);
            g.max_class = std::max(g.max_class, c);
        }
        g.centralizer = centralizer_size(*representative);
    }
    return g;
}

std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned k) {
    if (k > n) return 0;
    using boost::multiprecision::cpp_int;
    cpp_int num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= cpp_int(boost::multiprecision::pow(cpp_int(q), n - i)) - 1;
        den *= cpp_int(boost::multiprecision::pow(cpp_int(q), i + 1)) - 1;
    }
    const cpp_int v = num / den;
    if (v > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("gaussian_binomial: result exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

SplittingSet enumerate_splitting_subspaces(const FieldTower& tower, Elem alpha, const CensusOptions& opts) {
    detail::require_generator(tower, alpha);
    const unsigned m = tower.m(), D = tower.m() * tower.n();
    const std::uint64_t Q = tower.q();
    std::uint64_t total = 0;
    try {
        total = gaussian_binomial(Q, D, m);
    } catch (const OverflowError&) {
        throw CeilingExceeded("subspace enumeration", std::numeric_limits<std::uint64_t>::max(), opts.ceiling);
    }
    if (total > opts.ceiling) throw CeilingExceeded("subspace enumeration", total, opts.ceiling);

    const auto coords = top_over_base(tower);
    const auto orbits = detail::orbit_table(tower, alpha, coords);

    std::vector<Elem> tuples;
    tuples.reserve(total * m);
    std::vector<unsigned> piv(m);
    for (unsigned i = 0; i < m; ++i) piv[i] = i;
    std::vector<Elem> row(D);
    while (true) {
        // Free slots (row, column): columns right of the row's pivot that hold no pivot.
        std::vector<std::pair<unsigned, unsigned>> slots;
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = piv[r] + 1; c < D; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(r, c);
        std::vector<std::uint32_t> vals(slots.size(), 0);
        do {
            for (unsigned r = 0; r < m; ++r) {
                std::fill(row.begin(), row.end(), Elem{0});
                row[piv[r]] = 1;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (slots[s].first == r) row[slots[s].second] = vals[s];
                tuples.push_back(coords.combine(row));
            }
        } while (detail::advance(vals, Q));
        // Next pivot set in lexicographic order.
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && piv[static_cast<unsigned>(i)] == D - m + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++piv[static_cast<unsigned>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < m; ++j) piv[j] = piv[j - 1] + 1;
    }
    if (tuples.size() != total * m) throw std::logic_error("enumerate_splitting_subspaces: subspace count mismatch");

    const auto flags = kernels::basis_flags(*tower.base(), orbits, m, tuples, opts.workers);
    SplittingSet set;
    set.subspaces_scanned = total;
    for (std::uint64_t i = 0; i < total; ++i)
        if (flags[i]) set.subspaces.emplace_back(tuples.begin() + static_cast<std::ptrdiff_t>(i * m),
                                                 tuples.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
    return set;
}

std::uint64_t conjectured_splitting_count(std::uint64_t q, unsigned m, unsigned n) {
    const std::uint64_t ratio = (checked_pow(q, m * n) - 1) / (checked_pow(q, m) - 1);
    return checked_mul(ratio, conjectured_pointed_count(q, m, n));
}

std::uint64_t conjectured_pointed_count(std::uint64_t q, unsigned m, unsigned n) {
    return checked_pow(q, m * (m - 1) * (n - 1));
}

std::map<Elem, std::uint64_t> pointed_splitting_counts(const FieldTower& tower, const SplittingSet& set) {
    const Field& top = *tower.top();
    const auto embed = tower.base_top_table();
    const std::uint64_t Q = tower.q();
    std::vector<std::uint64_t> counts(top.size(), 0);
    for (const auto& W : set.subspaces) {
        std::vector<std::uint32_t> c(W.size(), 0);
        while (detail::advance(c, Q)) { // skips the all-zero combination
            Elem x = 0;
            for (std::size_t j = 0; j < W.size(); ++j) x = top.add(x, top.mul(embed[c[j]], W[j]));
            ++counts[x];
        }
    }
    std::map<Elem, std::uint64_t> out;
    for (Elem x = 1; x < top.size(); ++x) out[x] = counts[x];
    return out;
}

std::map<Elem, std::uint64_t> pointed_splitting_counts(const FieldTower& tower, const SplittingSet& set,
                                                       const std::vector<Elem>& base_points) {
    for (auto x : base_points)
        if (x == 0 || !tower.top()->contains(x))
            throw std::invalid_argument("pointed_splitting_counts: base point must be a nonzero top element");
    const auto all = pointed_splitting_counts(tower, set);
    std::map<Elem, std::uint64_t> out;
    for (auto x : base_points) out[x] = all.at(x);
    return out;
}

ElemSplitResult verify_elemsplit(const FieldTower& tower, Elem alpha, const SplittingSet& set,
                                 const CensusOptions& opts, std::uint64_t sample_size, std::uint64_t seed) {
    detail::require_generator(tower, alpha);
    const Field& top = *tower.top();
    const unsigned m = tower.m(), n = tower.n();
    const auto coords = top_over_base(tower);
    const auto orbits = detail::orbit_table(tower, alpha, coords);
    const std::set<Key> known(set.subspaces.begin(), set.subspaces.end());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> nonzero(1, static_cast<Elem>(top.size() - 1));
    ElemSplitResult res;

    std::vector<Elem> U(m);
    for (unsigned i = 0; i < m; ++i) U[i] = top.pow(alpha, std::uint64_t{i} * n);
    const bool u_splits = kernels::basis_flags(*tower.base(), orbits, m, U, opts.workers).at(0) != 0;
    const bool u_known = known.count(rref_key(coords, U)) > 0;

    // (i) U splits, and beta W splits for every splitting W and nonzero beta.
    {
        const std::uint64_t pairs = set.count() * (top.size() - 1);
        PartResult& p = res.span_closure;
        p.exhaustive = pairs <= opts.ceiling;
        std::vector<Elem> tuples;
        std::uint64_t members = 0, checked = 0;
        auto visit = [&](const std::vector<Elem>& W, Elem beta) {
            const auto bw = scaled(top, beta, W);
            tuples.insert(tuples.end(), bw.begin(), bw.end());
            members += known.count(rref_key(coords, bw));
            ++checked;
        };
        if (p.exhaustive) {
            for (const auto& W : set.subspaces)
                for (Elem beta = 1; beta < top.size(); ++beta) visit(W, beta);
        } else if (!set.subspaces.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, set.subspaces.size() - 1);
            for (std::uint64_t s = 0; s < sample_size; ++s) visit(set.subspaces[pick(rng)], nonzero(rng));
        }
        const auto flags = kernels::basis_flags(*tower.base(), orbits, m, tuples, opts.workers);
        const auto splitting = static_cast<std::uint64_t>(std::count(flags.begin(), flags.end(), 1));
        p.passed = u_splits && u_known && !set.subspaces.empty() && splitting == checked && members == checked;
        p.detail = std::string("U ") + (u_splits ? "splits" : "does not split") + "; " + std::to_string(splitting) +
                   "/" + std::to_string(checked) + " translates split, " + std::to_string(members) +
                   " found in the enumerated set";
    }

    // (ii) xU contains x and splits.
    {
        PartResult& p = res.translates;
        p.exhaustive = top.size() - 1 <= opts.ceiling;
        std::vector<Elem> xs;
        if (p.exhaustive)
            for (Elem x = 1; x < top.size(); ++x) xs.push_back(x);
        else
            for (std::uint64_t s = 0; s < sample_size; ++s) xs.push_back(nonzero(rng));
        std::vector<Elem> tuples;
        std::uint64_t contains = 0, members = 0;
        for (auto x : xs) {
            auto xu = scaled(top, x, U);
            auto with_x = xu;
            with_x.push_back(x);
            contains += coords.rank(with_x) == m;
            members += known.count(rref_key(coords, xu));
            tuples.insert(tuples.end(), xu.begin(), xu.end());
        }
        const auto flags = kernels::basis_flags(*tower.base(), orbits, m, tuples, opts.workers);
        const auto splitting = static_cast<std::uint64_t>(std::count(flags.begin(), flags.end(), 1));
        p.passed = splitting == xs.size() && contains == xs.size() && members == xs.size();
        p.detail = std::to_string(splitting) + "/" + std::to_string(xs.size()) + " translates xU split and contain x";
    }

    // (iii) and (iv) from the pointed counts over every nonzero x.
    const auto pointed = pointed_splitting_counts(tower, set);
    std::uint64_t lo = std::numeric_limits<std::uint64_t>::max(), hi = 0;
    bool ratio = true;
    const std::uint64_t lhs = set.count() * (checked_pow(tower.q(), m) - 1);
    for (const auto& [x, c] : pointed) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
        ratio = ratio && lhs == c * (top.size() - 1);
    }
    res.equal_pointed.passed = lo == hi && lo > 0;
    res.equal_pointed.detail = "pointed counts range " + std::to_string(lo) + ".." + std::to_string(hi) + " over " +
                               std::to_string(pointed.size()) + " base points";
    res.count_ratio.passed = ratio;
    res.count_ratio.detail = "|S|(q^m-1) = " + std::to_string(lhs) + ", |S^x|(q^mn-1) = " +
                             std::to_string(hi * (top.size() - 1));
    return res;
}

SampleEstimate sample_splitting_count(const FieldTower& tower, Elem alpha, std::uint64_t sample_size,
                                      std::uint64_t seed) {
    detail::require_generator(tower, alpha);
    const unsigned m = tower.m();
    const auto orbits = detail::orbit_table(tower, alpha, top_over_base(tower));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> elem(0, static_cast<Elem>(tower.top()->size() - 1));
    std::vector<Elem> tuples(sample_size * m);
    for (auto& v : tuples) v = elem(rng);
    const auto flags = kernels::basis_flags(*tower.base(), orbits, m, tuples, 1);
    const auto hits = static_cast<std::uint64_t>(std::count(flags.begin(), flags.end(), 1));
    const std::uint64_t population = checked_pow(tower.top()->size(), m);
    auto est = estimate_from_hits(population, sample_size, hits);
    const auto gl = static_cast<double>(general_linear_order(tower.q(), m));
    est.estimate /= gl;
    est.lower /= gl;
    est.upper /= gl;
    return est;
}

} // namespace bcs
