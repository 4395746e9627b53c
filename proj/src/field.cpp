#include "cremona/field.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace cremona {

std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::DuplicatePoint: return "DuplicatePoint";
        case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorKind::ZeroArgument: return "ZeroArgument";
        case ErrorKind::ProductNotOne: return "ProductNotOne";
        case ErrorKind::BadPose: return "BadPose";
        case ErrorKind::Reducible: return "Reducible";
        case ErrorKind::NotAPencil: return "NotAPencil";
        case ErrorKind::ShortOrbit: return "ShortOrbit";
        case ErrorKind::Collision: return "Collision";
        case ErrorKind::CheckpointCorrupt: return "CheckpointCorrupt";
        case ErrorKind::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
        case ErrorKind::BadNesting: return "BadNesting";
        case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
        case ErrorKind::NotBig: return "NotBig";
        case ErrorKind::NotNested: return "NotNested";
        case ErrorKind::NotRank3: return "NotRank3";
        case ErrorKind::RadiusTooLarge: return "RadiusTooLarge";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "euler_phi(0)");
    std::uint64_t r = n;
    for (auto f : prime_factors(n)) r = r / f * (f - 1);
    return r;
}

namespace {

// f mod g over F_p, both little-endian, g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        std::uint64_t lead = f.back();
        if (lead) {
            std::size_t shift = f.size() - 1 - dg;
            for (std::size_t i = 0; i < dg; ++i) {
                std::uint64_t t = (lead * g[i]) % p;
                f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - t) % p);
            }
        }
        f.pop_back();
    }
    return f;
}

Poly decode(std::uint64_t code, std::uint32_t p, unsigned len) {
    Poly c(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return c;
}

}  // namespace

bool is_irreducible(const Poly& f, std::uint32_t p) {
    if (f.size() < 2 || f.back() != 1) throw Error(ErrorKind::InvalidArgument, "expected monic polynomial");
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= n / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t c = 0; c < count; ++c) {
            Poly g = decode(c, p, d);
            g.push_back(1);
            Poly r = poly_mod(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](auto v) { return v == 0; })) return false;
        }
    }
    return true;
}

Poly find_modulus(std::uint32_t p, unsigned n) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
    if (n < 1 || n > 16) throw Error(ErrorKind::InvalidArgument, "degree must be in 1..16");
    const std::uint64_t count = ipow(p, n);
    for (std::uint64_t c = 0; c < count; ++c) {
        Poly f = decode(c, p, n);
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
    }
    throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

Field::Field(std::uint32_t p, unsigned n) : Field(p, n, find_modulus(p, n)) {}

Field::Field(std::uint32_t p, unsigned n, Poly modulus) : p_(p), n_(n), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
    if (n < 1 || n > 16) throw Error(ErrorKind::InvalidArgument, "degree must be in 1..16");
    if (modulus_.size() != n + 1 || !is_irreducible(modulus_, p))
        throw Error(ErrorKind::InvalidArgument, "modulus is not a monic irreducible of degree n");
    std::uint64_t s = ipow(p, n);
    if (s > std::numeric_limits<std::uint32_t>::max() / 2)
        throw Error(ErrorKind::InvalidArgument, "field too large");
    size_ = static_cast<std::uint32_t>(s);
    ord_ = size_ - 1;
    pw_.resize(n + 1);
    for (unsigned i = 0; i <= n; ++i) pw_[i] = static_cast<std::uint32_t>(ipow(p, i));
    ord_factors_ = prime_factors(ord_);
    build();
}

void Field::build() {
    // Primitive element by exponent reduction over the slow path.
    for (std::uint32_t c = 1; c < size_; ++c) {
        Fe g{c};
        if (ord_ == 1) { gen_ = g; break; }
        bool prim = true;
        for (auto f : ord_factors_)
            if (pow_slow(g, ord_ / f).code == 1) { prim = false; break; }
        if (prim) { gen_ = g; break; }
    }
    if (size_ > (1u << 20)) return;
    exp_.assign(2 * static_cast<std::size_t>(ord_), 0);
    log_.assign(size_, 0);
    Fe x{1};
    for (std::uint32_t k = 0; k < ord_; ++k) {
        exp_[k] = exp_[k + ord_] = x.code;
        log_[x.code] = k;
        x = mul_slow(x, gen_);
    }
    zech_.assign(ord_, -1);
    for (std::uint32_t k = 0; k < ord_; ++k) {
        Fe s = add_slow(Fe{1}, Fe{exp_[k]});
        zech_[k] = s.code ? static_cast<std::int32_t>(log_[s.code]) : -1;
    }
    frob_.resize(size_);
    for (std::uint32_t c = 0; c < size_; ++c) frob_[c] = pow_slow(Fe{c}, p_).code;
    tabled_ = true;
}

Fe Field::from_int(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

Fe Field::from_code(std::uint64_t code) const {
    if (code >= size_) throw Error(ErrorKind::InvalidArgument, "code out of range: " + std::to_string(code));
    return {static_cast<std::uint32_t>(code)};
}

Fe Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > n_) throw Error(ErrorKind::InvalidArgument, "too many coefficients");
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < c.size(); ++i) code += (c[i] % p_) * pw_[i];
    return {code};
}

Poly Field::coeffs(Fe x) const { return decode(x.code, p_, n_); }

Fe Field::add_slow(Fe a, Fe b) const {
    std::uint32_t r = 0, x = a.code, y = b.code;
    for (unsigned i = 0; i < n_; ++i) {
        r += ((x % p_ + y % p_) % p_) * pw_[i];
        x /= p_;
        y /= p_;
    }
    return {r};
}

Fe Field::neg_slow(Fe a) const {
    std::uint32_t r = 0, x = a.code;
    for (unsigned i = 0; i < n_; ++i) {
        r += ((p_ - x % p_) % p_) * pw_[i];
        x /= p_;
    }
    return {r};
}

Fe Field::mul_slow(Fe a, Fe b) const {
    Poly x = coeffs(a), y = coeffs(b);
    Poly prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < n_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(x[i]) * y[j]) % p_);
    }
    Poly r = poly_mod(std::move(prod), modulus_, p_);
    return from_coeffs(r);
}

Fe Field::pow_slow(Fe a, std::uint64_t e) const {
    Fe r{1};
    while (e) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return r;
}

Fe Field::pow(Fe a, std::uint64_t e) const {
    if (e == 0) return {1};
    if (a.code == 0) return {0};
    if (tabled_) return {exp_[(static_cast<std::uint64_t>(log_[a.code]) * (e % ord_)) % ord_]};
    return pow_slow(a, e);
}

bool Field::in_subfield(Fe x, unsigned d) const { return frobenius(x, d) == x; }

std::vector<Fe> Field::galois_orbit(Fe x) const {
    std::vector<Fe> out{x};
    for (Fe y = frobenius(x); y != x; y = frobenius(y)) out.push_back(y);
    return out;
}

std::uint64_t Field::element_order(Fe x) const {
    if (x.code == 0) throw Error(ErrorKind::ZeroElement, "order of zero");
    std::uint64_t o = ord_;
    for (auto f : ord_factors_)
        while (o % f == 0 && pow(x, o / f).code == 1) o /= f;
    return o;
}

std::uint32_t Field::log(Fe x) const {
    if (x.code == 0) throw Error(ErrorKind::ZeroElement, "log of zero");
    if (!tabled_) throw Error(ErrorKind::InvalidArgument, "log requires a tabled field");
    return log_[x.code];
}

Fe Field::exp(std::uint64_t k) const {
    if (tabled_) return {exp_[k % ord_]};
    return pow_slow(gen_, k % ord_);
}

}  // namespace cremona
