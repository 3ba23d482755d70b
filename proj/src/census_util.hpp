#pragma once

// Helpers shared by the census translation units.

#include "bcs/census.hpp"
#include "bcs/kernels.hpp"
#include "bcs/numtheory.hpp"

namespace bcs::detail {

/// Odometer step over base-`radix` digits, least significant first; false on wrap-around.
inline bool advance(std::vector<std::uint32_t>& digits, std::uint64_t radix) {
    for (auto& d : digits) {
        if (++d < radix) return true;
        d = 0;
    }
    return false;
}

inline FieldPtr field_for(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    const auto [p, e] = prime_power_decompose(q);
    return Field::canonical(static_cast<std::uint32_t>(p), e);
}

inline void require_generator(const FieldTower& tower, Elem alpha) {
    if (!tower.top()->contains(alpha) || alpha == 0 || degree_over_base(tower, alpha) != tower.m() * tower.n())
        throw std::invalid_argument("alpha is not a generator of the top field over the base field");
}

/// Coordinates of alpha^k v (k < n) over the base, for every top element v.
inline kernels::OrbitTable orbit_table(const FieldTower& tower, Elem alpha, const SubfieldCoordinates& coords) {
    constexpr std::uint64_t kMaxEntries = std::uint64_t{1} << 26;
    const Field& top = *tower.top();
    kernels::OrbitTable t;
    t.elements = top.size();
    t.rows = tower.n();
    t.dim = tower.m() * tower.n();
    const std::uint64_t entries = t.elements * t.rows * t.dim;
    if (entries > kMaxEntries) throw CeilingExceeded("orbit coordinate table", entries, kMaxEntries);
    t.coords.resize(entries);
    for (Elem v = 0; v < t.elements; ++v) {
        Elem cur = v;
        for (unsigned k = 0; k < t.rows; ++k) {
            coords.coordinates_into(cur, std::span<Elem>(t.coords).subspan((std::size_t{v} * t.rows + k) * t.dim, t.dim));
            cur = top.mul(cur, alpha);
        }
    }
    return t;
}

} // namespace bcs::detail
