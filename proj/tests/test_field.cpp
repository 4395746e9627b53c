#include <algorithm>
#include <numeric>
#include <set>

#include "cremona/field.hpp"
#include "cremona/linalg.hpp"
#include "cremona/plane.hpp"
#include "test_util.hpp"

using namespace cremona;
using testutil::throws_kind;

namespace {

// Oracle: mark every monic degree-n product of two lower-degree monics, return the first unmarked.
Poly sieve_min_irreducible(std::uint32_t p, unsigned n) {
    auto enc = [&](const Poly& f) {
        std::uint64_t c = 0, w = 1;
        for (std::size_t i = 0; i + 1 < f.size(); ++i, w *= p) c += f[i] * w;
        return c;
    };
    auto monics = [&](unsigned d) {
        std::vector<Poly> out;
        std::uint64_t cnt = ipow(p, d);
        for (std::uint64_t c = 0; c < cnt; ++c) {
            Poly f(d + 1, 0);
            std::uint64_t t = c;
            for (unsigned i = 0; i < d; ++i) f[i] = t % p, t /= p;
            f[d] = 1;
            out.push_back(f);
        }
        return out;
    };
    std::vector<bool> reducible(ipow(p, n), false);
    for (unsigned d = 1; d <= n / 2; ++d)
        for (const auto& a : monics(d))
            for (const auto& b : monics(n - d)) {
                Poly c(n + 1, 0);
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
                reducible[enc(c)] = true;
            }
    for (std::uint64_t c = 0; c < reducible.size(); ++c)
        if (!reducible[c]) {
            Poly f(n + 1, 0);
            std::uint64_t t = c;
            for (unsigned i = 0; i < n; ++i) f[i] = t % p, t /= p;
            f[n] = 1;
            return f;
        }
    return {};
}

Fe naive_pow(const Field& F, Fe x, std::uint64_t e) {
    Fe r = F.one();
    for (std::uint64_t i = 0; i < e; ++i) r = F.mul(r, x);
    return r;
}

}  // namespace

TEST_CASE("find_modulus golden octics") {
    CHECK(find_modulus(2, 1) == Poly{0, 1});
    const Poly f2{1, 1, 0, 1, 1, 0, 0, 0, 1};
    const Poly f3{2, 0, 1, 0, 0, 0, 0, 0, 1};
    const Poly f7{3, 1, 0, 0, 0, 0, 0, 0, 1};
    CHECK(sieve_min_irreducible(2, 8) == f2);
    CHECK(sieve_min_irreducible(3, 8) == f3);
    CHECK(find_modulus(2, 8) == f2);
    CHECK(find_modulus(3, 8) == f3);
    CHECK(find_modulus(7, 8) == f7);
    CHECK_FALSE(is_irreducible(Poly{1, 0, 1}, 2));
    CHECK(throws_kind(ErrorKind::InvalidArgument, [] { Field(2, 2, Poly{1, 0, 1}); }));
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6560) == 2560);
    std::uint64_t units = 0;
    for (std::uint64_t k = 1; k <= 255; ++k) units += std::gcd(k, std::uint64_t{255}) == 1;
    CHECK(euler_phi(255) == units);
    CHECK(units == 128);
}

TEST_CASE("encoding round trip and table agreement") {
    for (auto [p, n] : {std::pair{2u, 8u}, {3u, 8u}, {5u, 3u}}) {
        Field F(p, n);
        for (std::uint32_t c = 0; c < F.size(); ++c) {
            Fe x = F.from_code(c);
            REQUIRE(F.from_coeffs(F.coeffs(x)) == x);
        }
    }
    // Table-driven addition against digitwise addition of coefficient vectors.
    Field F(3, 8);
    CHECK(F.tabled());
    auto rng = testutil::rng(7);
    std::uniform_int_distribution<std::uint32_t> d(0, F.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        Fe a{d(rng)}, b{d(rng)};
        Poly ca = F.coeffs(a), cb = F.coeffs(b);
        for (std::size_t k = 0; k < ca.size(); ++k) ca[k] = (ca[k] + cb[k]) % 3;
        CHECK(F.add(a, b) == F.from_coeffs(ca));
    }
    CHECK_FALSE(Field(7, 8).tabled());
}

TEST_CASE("field axioms on random elements") {
    auto rng = testutil::rng(1);
    for (auto [p, n] : {std::pair{2u, 8u}, {3u, 8u}, {7u, 8u}}) {
        Field F(p, n);
        std::uniform_int_distribution<std::uint32_t> d(0, F.size() - 1);
        for (int i = 0; i < 300; ++i) {
            Fe a{d(rng)}, b{d(rng)}, c{d(rng)};
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, F.neg(a)) == F.zero());
            CHECK(F.sub(F.add(a, b), b) == a);
            if (a.code) CHECK(F.mul(a, F.inv(a)) == F.one());
        }
    }
}

TEST_CASE("frobenius") {
    auto rng = testutil::rng(2);
    for (std::uint32_t p : {2u, 3u}) {
        Field F(p, 8);
        std::uniform_int_distribution<std::uint32_t> d(0, F.size() - 1);
        for (int i = 0; i < 1000; ++i) {
            Fe a{d(rng)}, b{d(rng)};
            CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
            CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
            CHECK(F.frobenius(a) == naive_pow(F, a, p));
            CHECK(F.frobenius(a, 8) == a);
            CHECK(F.pow(a, ipow(p, 8)) == a);
        }
        std::size_t fixed = 0;
        for (std::uint32_t c = 0; c < F.size(); ++c) fixed += F.frobenius(Fe{c}) == Fe{c};
        CHECK(fixed == p);
        CHECK(F.frobenius(F.zero()) == F.zero());
        CHECK(F.frobenius(F.one()) == F.one());
    }
    Field F(2, 8);
    Fe g = F.primitive();
    CHECK(F.element_order(g) == 255);
    CHECK(F.element_order(F.frobenius(g)) == 255);
}

TEST_CASE("galois orbits and subfields over F_256") {
    Field F(2, 8);
    std::size_t full = 0;
    for (std::uint32_t c = 0; c < F.size(); ++c) {
        Fe x{c};
        auto orb = F.galois_orbit(x);
        CHECK(8 % orb.size() == 0);
        CHECK(F.in_subfield(x, 4) == (orb.size() <= 4));
        CHECK(F.in_subfield(x, 1) == (orb.size() == 1));
        full += orb.size() == 8;
        if (c && F.element_order(x) % 17 == 0) CHECK(orb.size() == 8);
        if (c && orb.size() == 8) CHECK(F.element_order(x) % 17 == 0);
    }
    CHECK(full == 240);
    CHECK(F.galois_orbit(F.one()).size() == 1);
}

TEST_CASE("element orders") {
    Field F2(2, 8);
    CHECK(F2.element_order(F2.one()) == 1);
    CHECK(throws_kind(ErrorKind::ZeroElement, [&] { F2.element_order(F2.zero()); }));
    Field F3(3, 8);
    std::size_t gens = 0;
    for (std::uint32_t c = 1; c < F3.size(); ++c) gens += F3.element_order(Fe{c}) == 6560;
    CHECK(gens == 2560);
    CHECK(gens == euler_phi(6560));
}

TEST_CASE("nullspace") {
    Field F(3, 8);
    CHECK(nullspace(F, Matrix::identity(3)).empty());
    CHECK(nullspace(F, Matrix(2, 3)).size() == 3);

    // Six points on x z - y^2: [t^2 : t : 1].
    Matrix m;
    for (std::uint32_t t : {0u, 1u, 2u, 5u, 17u, 100u})
        m.push_row(monomial_values(F, 2, make_point(F, F.mul(Fe{t}, Fe{t}), Fe{t}, F.one())));
    auto ker = nullspace(F, m);
    REQUIRE(ker.size() == 1);
    // Conic xz - y^2 in lex order x^2, xy, xz, y^2, yz, z^2.
    std::vector<Fe> expect{F.zero(), F.zero(), F.one(), F.neg(F.one()), F.zero(), F.zero()};
    CHECK(ker[0] == expect);

    // Basis is reduced echelon and lies in the kernel.
    auto rng = testutil::rng(3);
    std::uniform_int_distribution<std::uint32_t> d(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a(3, 6);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 6; ++j) a(i, j) = Fe{d(rng)};
        auto k = nullspace(F, a);
        CHECK(k.size() == 6 - rank(F, a));
        for (const auto& v : k)
            for (std::size_t i = 0; i < 3; ++i) {
                Fe s = F.zero();
                for (std::size_t j = 0; j < 6; ++j) s = F.add(s, F.mul(a(i, j), v[j]));
                CHECK(s == F.zero());
            }
    }
}
