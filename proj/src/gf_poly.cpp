#include "bcs/gf.hpp"
#include "bcs/numtheory.hpp"

#include <algorithm>
#include <charconv>

namespace bcs {

namespace {

void require_same_field(const Poly& a, const Poly& b, const char* op) {
    if (!same_field(a.field(), b.field()))
        throw std::invalid_argument(std::string(op) + ": polynomials over different fields");
}

} // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (!field_->contains(c)) throw std::invalid_argument("Poly: coefficient outside field");
    trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, unsigned k) {
    std::vector<Elem> v(k + 1, 0);
    v[k] = c;
    return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scale(*this, field_->inv(lead()));
}

Elem Poly::evaluate(Elem at) const {
    Elem r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = field_->add(field_->mul(r, at), coeffs_[i]);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b, "add");
    const Field& F = a.field();
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a[i], b[i]);
    return Poly(a.field_ptr(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b, "sub");
    const Field& F = a.field();
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a[i], b[i]);
    return Poly(a.field_ptr(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b, "mul");
    if (a.is_zero() || b.is_zero()) return Poly(a.field_ptr());
    const Field& F = a.field();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<Elem> out(ca.size() + cb.size() - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(ca[i], cb[j]));
    }
    return Poly(a.field_ptr(), std::move(out));
}

Poly scale(const Poly& a, Elem c) {
    std::vector<Elem> out(a.coeffs());
    for (auto& v : out) v = a.field().mul(v, c);
    return Poly(a.field_ptr(), std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b, "divmod");
    if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    const Field& F = a.field();
    std::vector<Elem> rem(a.coeffs());
    const auto& cb = b.coeffs();
    const std::size_t db = cb.size() - 1;
    if (rem.size() < cb.size()) return {Poly(a.field_ptr()), a};
    std::vector<Elem> quot(rem.size() - db, 0);
    const Elem lead_inv = F.inv(cb.back());
    for (std::size_t k = rem.size(); k-- > db;) {
        const Elem c = F.mul(rem[k], lead_inv);
        if (c == 0) continue;
        quot[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = F.sub(rem[k - db + i], F.mul(c, cb[i]));
    }
    return {Poly(a.field_ptr(), std::move(quot)), Poly(a.field_ptr(), std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly poly_gcd(const Poly& f, const Poly& g) {
    require_same_field(f, g, "gcd");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t exp, const Poly& modulus) {
    Poly result = Poly::constant(base.field_ptr(), 1) % modulus;
    Poly b = base % modulus;
    while (exp > 0) {
        if (exp & 1) result = (result * b) % modulus;
        exp >>= 1;
        if (exp) b = (b * b) % modulus;
    }
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_irreducible: zero polynomial");
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly g = f.monic();
    const std::uint64_t Q = f.field().size();
    const Poly x = Poly::x(f.field_ptr());
    // frob[k] = X^{Q^k} mod g
    std::vector<Poly> frob{x};
    for (int k = 1; k <= d; ++k) frob.push_back(powmod(frob.back(), Q, g));
    if (!(frob[d] == x)) return false;
    for (auto r : factorize(static_cast<std::uint64_t>(d)).primes()) {
        const Poly h = poly_gcd(frob[d / r] - x, g);
        if (h.degree() != 0) return false;
    }
    return true;
}

bool is_primitive(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_primitive: zero polynomial");
    const Poly g = f.monic();
    const int d = g.degree();
    if (d < 1 || g[0] == 0 || !is_irreducible(g)) return false;
    const std::uint64_t order = checked_pow(f.field().size(), static_cast<unsigned>(d)) - 1;
    const Poly x = Poly::x(f.field_ptr());
    const Poly one = Poly::constant(f.field_ptr(), 1);
    if (!(powmod(x, order, g) == one)) return false;
    if (order == 1) return true;
    for (auto r : factorize(order).primes())
        if (powmod(x, order / r, g) == one) return false;
    return true;
}

Poly monic_from_index(const FieldPtr& field, unsigned degree, std::uint64_t index) {
    std::vector<Elem> c(degree + 1);
    const std::uint64_t Q = field->size();
    for (unsigned i = 0; i < degree; ++i) {
        c[i] = static_cast<Elem>(index % Q);
        index /= Q;
    }
    c[degree] = 1;
    return Poly(field, std::move(c));
}

Poly poly_from_index(const FieldPtr& field, unsigned length, std::uint64_t index) {
    std::vector<Elem> c(length);
    const std::uint64_t Q = field->size();
    for (unsigned i = 0; i < length; ++i) {
        c[i] = static_cast<Elem>(index % Q);
        index /= Q;
    }
    return Poly(field, std::move(c));
}

std::uint64_t monic_index(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("monic_index: polynomial is not monic");
    std::uint64_t idx = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size() - 1; i-- > 0;) idx = idx * f.field().size() + c[i];
    return idx;
}

std::string to_text(const Poly& f) {
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coeffs()[i]);
    }
    return out;
}

Poly poly_from_text(const FieldPtr& field, std::string_view text) {
    std::vector<Elem> c;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view tok = text.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        Elem v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || !field->contains(v))
            throw std::invalid_argument("poly_from_text: bad coefficient '" + std::string(tok) + "'");
        c.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Poly(field, std::move(c));
}

FieldPtr field_from_tag(std::string_view tag) {
    const auto caret = tag.find('^');
    if (caret == std::string_view::npos) throw std::invalid_argument("field tag must look like p^e");
    std::uint32_t p = 0;
    unsigned e = 0;
    auto r1 = std::from_chars(tag.data(), tag.data() + caret, p);
    auto r2 = std::from_chars(tag.data() + caret + 1, tag.data() + tag.size(), e);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != tag.data() + caret ||
        r2.ptr != tag.data() + tag.size() || e == 0)
        throw std::invalid_argument("field tag must look like p^e");
    return Field::canonical(p, e);
}

std::optional<Elem> least_root(const Field& big, const Poly& f, std::span<const Elem> embed) {
    std::vector<Elem> c;
    c.reserve(f.coeffs().size());
    for (auto v : f.coeffs()) c.push_back(embed[v]);
    for (Elem a = 0; a < big.size(); ++a) {
        Elem r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = big.add(big.mul(r, a), c[i]);
        if (r == 0) return a;
    }
    return std::nullopt;
}

std::vector<Elem> prime_subfield_embedding(const Field& big) {
    std::vector<Elem> t(big.characteristic());
    for (std::uint32_t i = 0; i < t.size(); ++i) t[i] = big.from_int(i);
    return t;
}

} // namespace bcs
