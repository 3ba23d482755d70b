#include "bcs/gf.hpp"
#include "bcs/numtheory.hpp"

#include <algorithm>
#include <random>

namespace bcs {

namespace {

constexpr Elem kNoPreimage = ~Elem{0};

std::vector<Elem> identity_table(const Field& f) { return elements(f); }

// Sends the generator of `small` to gamma and extends F_p-linearly.
std::vector<Elem> embed_via_root(const Field& small, const Field& big, Elem gamma) {
    std::vector<Elem> powers(small.degree());
    Elem g = 1;
    for (auto& v : powers) {
        v = g;
        g = big.mul(g, gamma);
    }
    std::vector<Elem> table(small.size());
    for (Elem a = 0; a < small.size(); ++a) {
        const auto d = small.digits(a);
        Elem img = 0;
        for (unsigned i = 0; i < d.size(); ++i) img = big.add(img, big.mul(big.from_int(d[i]), powers[i]));
        table[a] = img;
    }
    return table;
}

std::vector<Elem> embed_subfield(const Field& small, const Field& big) {
    if (same_field(small, big)) return identity_table(small);
    if (small.is_prime_field()) return prime_subfield_embedding(big);
    const Poly mod(Field::prime(small.characteristic()), {small.modulus().begin(), small.modulus().end()});
    const auto prime_embed = prime_subfield_embedding(big);
    const auto root = least_root(big, mod, prime_embed);
    if (!root) throw std::logic_error("FieldTower: subfield modulus has no root in the extension");
    return embed_via_root(small, big, *root);
}

bool check_homomorphism(const Field& small, const Field& big, std::span<const Elem> table) {
    auto ok_pair = [&](Elem a, Elem b) {
        return table[small.add(a, b)] == big.add(table[a], table[b]) &&
               table[small.mul(a, b)] == big.mul(table[a], table[b]);
    };
    if (table[0] != 0 || table[1] != 1) return false;
    std::vector<Elem> sorted(table.begin(), table.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    const std::uint64_t s = small.size();
    if (s * s <= (1u << 16)) {
        for (Elem a = 0; a < s; ++a)
            for (Elem b = 0; b < s; ++b)
                if (!ok_pair(a, b)) return false;
        return true;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(s - 1));
    for (int i = 0; i < 4096; ++i)
        if (!ok_pair(pick(rng), pick(rng))) return false;
    return true;
}

std::vector<Elem> frobenius_orbit(const Field& F, Elem alpha, std::uint64_t power) {
    std::vector<Elem> orbit;
    Elem c = alpha;
    do {
        orbit.push_back(c);
        c = F.pow(c, power);
    } while (c != alpha);
    return orbit;
}

Poly product_of_linears(const FieldPtr& F, std::span<const Elem> roots) {
    Poly g = Poly::constant(F, 1);
    for (auto r : roots) g = g * Poly(F, {F->neg(r), 1});
    return g;
}

} // namespace

FieldTower FieldTower::build(std::uint32_t p, unsigned e, unsigned m, unsigned n) {
    if (e == 0 || m == 0 || n == 0) throw std::invalid_argument("FieldTower: e, m, n must be positive");
    checked_pow(p, e * m * n, kMaxFieldSize);
    FieldTower t;
    t.base_ = Field::canonical(p, e);
    t.mid_ = Field::canonical(p, e * m);
    t.top_ = Field::canonical(p, e * m * n);
    t.m_ = m;
    t.n_ = n;
    t.base_mid_ = embed_subfield(*t.base_, *t.mid_);
    t.mid_top_ = embed_subfield(*t.mid_, *t.top_);
    t.base_top_.resize(t.base_->size());
    for (Elem a = 0; a < t.base_->size(); ++a) t.base_top_[a] = t.mid_top_[t.base_mid_[a]];
    t.top_to_mid_.assign(t.top_->size(), kNoPreimage);
    for (Elem a = 0; a < t.mid_->size(); ++a) t.top_to_mid_[t.mid_top_[a]] = a;
    if (!t.verify()) throw std::logic_error("FieldTower: embedding verification failed");
    return t;
}

std::optional<Elem> FieldTower::mid_preimage(Elem top_elem) const {
    const Elem r = top_to_mid_.at(top_elem);
    if (r == kNoPreimage) return std::nullopt;
    return r;
}

std::optional<Elem> FieldTower::base_preimage(Elem top_elem) const {
    const auto mid = mid_preimage(top_elem);
    if (!mid) return std::nullopt;
    auto it = std::find(base_mid_.begin(), base_mid_.end(), *mid);
    if (it == base_mid_.end()) return std::nullopt;
    return static_cast<Elem>(it - base_mid_.begin());
}

bool FieldTower::verify() const {
    if (!check_homomorphism(*base_, *mid_, base_mid_)) return false;
    if (!check_homomorphism(*mid_, *top_, mid_top_)) return false;
    if (!check_homomorphism(*base_, *top_, base_top_)) return false;
    for (Elem a = 0; a < base_->size(); ++a)
        if (base_top_[a] != mid_top_[base_mid_[a]]) return false;
    return degree_over_base(*this, mid_top_[mid_->generator()]) == m_;
}

unsigned degree_over_base(const FieldTower& tower, Elem alpha) {
    return static_cast<unsigned>(frobenius_orbit(*tower.top(), alpha, tower.q()).size());
}

Poly min_poly_over_mid(const FieldTower& tower, Elem alpha) {
    const auto& top = tower.top();
    if (!top->contains(alpha)) throw std::invalid_argument("min_poly_over_mid: element outside top field");
    const auto orbit = frobenius_orbit(*top, alpha, tower.mid()->size());
    const Poly g = product_of_linears(top, orbit);
    std::vector<Elem> c;
    for (auto v : g.coeffs()) {
        const auto pre = tower.mid_preimage(v);
        if (!pre) throw std::logic_error("min_poly_over_mid: coefficient not in the mid field");
        c.push_back(*pre);
    }
    return Poly(tower.mid(), std::move(c));
}

Poly min_poly_over_base(const FieldTower& tower, Elem alpha) {
    const auto& top = tower.top();
    if (!top->contains(alpha)) throw std::invalid_argument("min_poly_over_base: element outside top field");
    const auto orbit = frobenius_orbit(*top, alpha, tower.q());
    const Poly g = product_of_linears(top, orbit);
    std::vector<Elem> c;
    for (auto v : g.coeffs()) {
        const auto pre = tower.base_preimage(v);
        if (!pre) throw std::logic_error("min_poly_over_base: coefficient not in the base field");
        c.push_back(*pre);
    }
    return Poly(tower.base(), std::move(c));
}

} // namespace bcs
