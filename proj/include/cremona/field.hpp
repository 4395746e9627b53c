#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

/// Element of F_{p^n}, stored as its base-p little-endian encoding.
/// Prime-field constants c < p encode as themselves.
struct Fe {
    std::uint32_t code = 0;
    friend constexpr auto operator<=>(Fe, Fe) = default;
};

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, little-endian

bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t b, unsigned e);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Monic irreducibility over F_p by trial division with every monic factor of degree <= n/2.
bool is_irreducible(const Poly& f, std::uint32_t p);

/// Monic irreducible of degree n over F_p with minimal integer encoding
/// (lower coefficients read base p, little-endian; leading 1 implicit).
Poly find_modulus(std::uint32_t p, unsigned n);

class Field {
public:
    Field(std::uint32_t p, unsigned n);
    Field(std::uint32_t p, unsigned n, Poly modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t q() const { return p_; }
    unsigned n() const { return n_; }
    std::uint32_t size() const { return size_; }
    const Poly& modulus() const { return modulus_; }
    bool tabled() const { return tabled_; }

    Fe zero() const { return {0}; }
    Fe one() const { return {1}; }
    Fe from_int(std::int64_t k) const;
    Fe from_code(std::uint64_t code) const;
    Fe from_coeffs(std::span<const std::uint32_t> c) const;
    Poly coeffs(Fe x) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, std::uint64_t e) const;

    /// x^q, applied `times` times.
    Fe frobenius(Fe x, unsigned times = 1) const;
    /// x^{q^d} == x.
    bool in_subfield(Fe x, unsigned d) const;
    bool in_prime_field(Fe x) const { return x.code < p_; }
    std::vector<Fe> galois_orbit(Fe x) const;
    std::uint64_t element_order(Fe x) const;
    /// Primitive element with minimal code.
    Fe primitive() const { return gen_; }
    /// Discrete log base primitive(); only for tabled fields.
    std::uint32_t log(Fe x) const;
    Fe exp(std::uint64_t k) const;

private:
    void build();
    Fe add_slow(Fe a, Fe b) const;
    Fe neg_slow(Fe a) const;
    Fe mul_slow(Fe a, Fe b) const;
    Fe pow_slow(Fe a, std::uint64_t e) const;

    std::uint32_t p_;
    unsigned n_;
    std::uint32_t size_;
    std::uint32_t ord_;  // size_ - 1
    Poly modulus_;
    std::vector<std::uint32_t> pw_;  // p^i
    std::vector<std::uint64_t> ord_factors_;
    bool tabled_ = false;
    Fe gen_{};
    std::vector<std::uint32_t> exp_;  // length 2*ord_
    std::vector<std::uint32_t> log_;
    std::vector<std::int32_t> zech_;  // log(1 + g^k), -1 when zero
    std::vector<std::uint32_t> frob_;
};

inline Fe Field::mul(Fe a, Fe b) const {
    if (a.code == 0 || b.code == 0) return {0};
    if (tabled_) return {exp_[log_[a.code] + log_[b.code]]};
    return mul_slow(a, b);
}

inline Fe Field::add(Fe a, Fe b) const {
    if (p_ == 2) return {a.code ^ b.code};
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    if (tabled_) {
        std::uint32_t la = log_[a.code], lb = log_[b.code];
        std::uint32_t d = lb >= la ? lb - la : lb + ord_ - la;
        std::int32_t z = zech_[d];
        if (z < 0) return {0};
        return {exp_[la + static_cast<std::uint32_t>(z)]};
    }
    return add_slow(a, b);
}

inline Fe Field::neg(Fe a) const {
    if (p_ == 2 || a.code == 0) return a;
    if (tabled_) return {exp_[log_[a.code] + ord_ / 2]};
    return neg_slow(a);
}

inline Fe Field::inv(Fe a) const {
    if (a.code == 0) throw Error(ErrorKind::ZeroElement, "inverse of zero");
    if (tabled_) return {exp_[ord_ - log_[a.code]]};
    return pow_slow(a, ord_ - 1);
}

inline Fe Field::frobenius(Fe x, unsigned times) const {
    times %= n_;
    if (tabled_) {
        for (unsigned i = 0; i < times; ++i) x = {frob_[x.code]};
        return x;
    }
    for (unsigned i = 0; i < times; ++i) x = pow_slow(x, p_);
    return x;
}

}  // namespace cremona

template <>
struct std::hash<cremona::Fe> {
    std::size_t operator()(cremona::Fe x) const noexcept { return std::hash<std::uint32_t>{}(x.code); }
};
