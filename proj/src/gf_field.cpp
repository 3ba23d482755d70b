#include "bcs/gf.hpp"
#include "bcs/numtheory.hpp"

#include <map>
#include <mutex>

namespace bcs {

namespace {

constexpr std::uint64_t kAddTableLimit = 1024;

} // namespace

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), degree_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    size_ = checked_pow(p_, degree_, kMaxFieldSize);

    neg_table_.resize(size_);
    for (Elem a = 0; a < size_; ++a) {
        auto d = digits(a);
        for (auto& v : d) v = (p_ - v) % p_;
        neg_table_[a] = from_digits(d);
    }
    if (p_ != 2 && size_ <= kAddTableLimit) {
        add_table_.resize(size_ * size_);
        for (Elem a = 0; a < size_; ++a)
            for (Elem b = 0; b < size_; ++b) add_table_[a * size_ + b] = add_digitwise(a, b);
    }

    const std::uint64_t group = size_ - 1;
    log_.assign(size_, 0);
    if (group == 1) {
        primitive_ = 1;
        exp_ = {1, 1};
        return;
    }
    const auto primes = factorize(group).primes();
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    bool found = false;
    for (Elem g = 1; g < size_ && !found; ++g) {
        bool ok = slow_pow(g, group) == 1;
        for (auto r : primes) ok = ok && slow_pow(g, group / r) != 1;
        if (ok) {
            primitive_ = g;
            found = true;
        }
    }
    if (!found) throw std::logic_error("Field: modulus is not irreducible");
    exp_.resize(2 * group);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
        exp_[i] = cur;
        exp_[i + group] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = slow_mul(cur, primitive_);
    }
    if (cur != 1) throw std::logic_error("Field: modulus is not irreducible");
}

FieldPtr Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    return canonical(p, 1);
}

FieldPtr Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("Field: characteristic must be prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("Field: modulus must be monic of positive degree");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("Field: modulus coefficient out of range");
    if (modulus.size() > 2) {
        Poly f(Field::prime(p), {modulus.begin(), modulus.end()});
        if (!is_irreducible(f)) throw std::invalid_argument("Field: modulus is reducible");
    } else {
        modulus = {0, 1};
    }
    return std::make_shared<const Field>(p, std::move(modulus));
}

FieldPtr Field::canonical(std::uint32_t p, unsigned degree) {
    if (degree == 0) throw std::invalid_argument("Field::canonical: degree must be positive");
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, degree}); it != cache.end()) return it->second;
    }
    if (!is_prime(p)) throw std::invalid_argument("Field: characteristic must be prime");
    checked_pow(p, degree, kMaxFieldSize);

    FieldPtr built;
    if (degree == 1) {
        built = std::make_shared<const Field>(p, std::vector<std::uint32_t>{0, 1});
    } else {
        const FieldPtr fp = canonical(p, 1);
        const std::uint64_t count = checked_pow(p, degree);
        for (std::uint64_t idx = 0; idx < count && !built; ++idx) {
            Poly f = monic_from_index(fp, degree, idx);
            if (is_irreducible(f)) {
                std::vector<std::uint32_t> mod(f.coeffs().begin(), f.coeffs().end());
                built = std::make_shared<const Field>(p, std::move(mod));
            }
        }
        if (!built) throw std::logic_error("Field::canonical: no irreducible modulus found");
    }
    std::lock_guard lock(mu);
    return cache.emplace(std::pair{p, degree}, built).first->second;
}

std::string Field::tag() const { return std::to_string(p_) + "^" + std::to_string(degree_); }

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
    const std::uint64_t group = size_ - 1;
    return exp_[(group - log_[a]) % group];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t group = size_ - 1;
    const auto l = static_cast<std::uint64_t>(log_[a]);
    return exp_[static_cast<std::size_t>(static_cast<unsigned __int128>(l) * (e % group) % group)];
}

Elem Field::from_int(std::int64_t v) const {
    const std::int64_t r = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
    return static_cast<Elem>(r);
}

std::uint64_t Field::element_order(Elem a) const {
    if (a == 0) throw std::domain_error("Field::element_order: zero");
    std::uint64_t order = size_ - 1;
    if (order == 1) return 1;
    for (auto r : factorize(order).primes()) {
        while (order % r == 0 && pow(a, order / r) == 1) order /= r;
    }
    return order;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
    std::vector<std::uint32_t> d(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
    Elem r = 0;
    for (std::size_t i = d.size(); i-- > 0;) r = r * p_ + d[i];
    return r;
}

Elem Field::add_digitwise(Elem a, Elem b) const {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::slow_mul(Elem a, Elem b) const {
    if (degree_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i)
        for (unsigned j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    // Reduce using x^degree = -sum modulus_i x^i.
    for (std::size_t k = prod.size(); k-- > degree_;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < degree_; ++i) {
            const std::uint64_t sub = c * modulus_[i] % p_;
            prod[k - degree_ + i] = (prod[k - degree_ + i] + p_ - sub) % p_;
        }
    }
    std::vector<std::uint32_t> out(degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits(out);
}

std::vector<Elem> elements(const Field& field) {
    std::vector<Elem> out(field.size());
    for (Elem a = 0; a < field.size(); ++a) out[a] = a;
    return out;
}

bool same_field(const Field& a, const Field& b) { return &a == &b || a == b; }

} // namespace bcs
