#include <set>

#include "cremona/general_position.hpp"
#include "cremona/nodal_cubic.hpp"
#include "test_util.hpp"

using namespace cremona;
using testutil::throws_kind;

namespace {

// xyz = c0 x^3 + c1 x^2 z + c2 x z^2 + c3 z^3 in the cubic monomial order.
PlaneCurve pose_cubic(const Field& F, std::int64_t c0, std::int64_t c1, std::int64_t c2, std::int64_t c3) {
    std::vector<Fe> c(10, F.zero());
    c[4] = F.one();
    c[0] = F.from_int(-c0);
    c[2] = F.from_int(-c1);
    c[5] = F.from_int(-c2);
    c[9] = F.from_int(-c3);
    return make_curve(F, 3, c);
}

Mat3 diag(const Field& F, Fe a, Fe b, Fe c) { return {a, F.zero(), F.zero(), F.zero(), b, F.zero(), F.zero(), F.zero(), c}; }

// y -> y + s x + t z.
Mat3 shear(const Field& F, Fe s, Fe t) { return {F.one(), F.zero(), F.zero(), s, F.one(), t, F.zero(), F.zero(), F.one()}; }

}  // namespace

TEST_CASE("param points lie on the normal form") {
    for (std::uint32_t p : {2u, 3u, 7u}) {
        Field F(p, 8);
        auto rng = testutil::rng(p);
        std::uniform_int_distribution<std::uint32_t> d(1, F.size() - 1);
        for (std::uint32_t c0 = 1; c0 < p; ++c0) {
            auto nf = make_nodal_nf(F, Fe{c0});
            auto C = nf_curve(F, nf);
            CHECK(node_check(F, C, point_from_codes(F, 0, 1, 0)));
            for (int i = 0; i < (p == 7 ? 100 : 1000); ++i) {
                Fe a{d(rng)};
                CHECK(evaluate(F, C, param_point(F, nf, a)) == F.zero());
            }
            CHECK(param_point(F, nf, F.one()) == point_from_codes(F, 1, 0, 1));
            CHECK(throws_kind(ErrorKind::ZeroArgument, [&] { param_point(F, nf, F.zero()); }));
        }
    }
    Field F(3, 8);
    CHECK(throws_kind(ErrorKind::ZeroArgument, [&] { make_nodal_nf(F, F.zero()); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { make_nodal_nf(F, Fe{5}); }));
}

TEST_CASE("three param points are collinear iff their product is one (all triples over F_256)") {
    Field F(2, 8);
    auto nf = make_nodal_nf(F, F.one());
    std::vector<ProjPoint> P(256);
    for (std::uint32_t a = 1; a < 256; ++a) P[a] = param_point(F, nf, Fe{a});
    std::uint64_t lines = 0, bad = 0;
    for (std::uint32_t a = 1; a < 256; ++a)
        for (std::uint32_t b = a + 1; b < 256; ++b) {
            const Fe ab = F.mul(Fe{a}, Fe{b});
            for (std::uint32_t c = b + 1; c < 256; ++c) {
                const bool unit = F.mul(ab, Fe{c}) == F.one();
                const bool col = collinear(F, P[a], P[b], P[c]);
                lines += col;
                bad += col != unit;
            }
        }
    CHECK(bad == 0);
    CHECK(lines > 0);
}

TEST_CASE("six param points are on a conic iff their product is one") {
    Field F(3, 8);
    auto rng = testutil::rng(66);
    std::uniform_int_distribution<std::uint32_t> d(1, F.size() - 1);
    auto nf = make_nodal_nf(F, Fe{2});
    int coconic = 0;
    for (int i = 0; i < 2000; ++i) {
        std::set<std::uint32_t> s;
        Fe prod = F.one();
        while (s.size() < 5) s.insert(d(rng));
        for (auto a : s) prod = F.mul(prod, Fe{a});
        Fe last = (i % 2) ? Fe{d(rng)} : F.inv(prod);
        if (s.count(last.code)) continue;
        std::vector<ProjPoint> pts;
        for (auto a : s) pts.push_back(param_point(F, nf, Fe{a}));
        pts.push_back(param_point(F, nf, last));
        const bool on = six_on_conic(F, pts);
        CHECK(on == (F.mul(prod, last) == F.one()));
        coconic += on;
    }
    CHECK(coconic > 500);
}

TEST_CASE("line witness") {
    for (std::uint32_t p : {2u, 3u}) {
        Field F(p, 8);
        auto rng = testutil::rng(70 + p);
        std::uniform_int_distribution<std::uint32_t> d(1, F.size() - 1);
        auto nf = make_nodal_nf(F, F.from_int(p - 1));
        for (int i = 0; i < 200; ++i) {
            Fe a1{d(rng)}, a2{d(rng)};
            Fe a3 = F.inv(F.mul(a1, a2));
            if (a1 == a2 || a1 == a3 || a2 == a3) continue;
            auto L = line_witness(F, nf, a1, a2, a3);
            for (Fe a : {a1, a2, a3}) CHECK(evaluate(F, L, param_point(F, nf, a)) == F.zero());
            // Expanding c0 (x-a1)(x-a2)(x-a3) - P(x,1) gives A = -c0 e1, B = c0 e2.
            const Fe e1 = F.add(F.add(a1, a2), a3);
            const Fe e2 = F.add(F.add(F.mul(a1, a2), F.mul(a1, a3)), F.mul(a2, a3));
            const Fe A = F.neg(F.mul(nf.c0, e1)), B = F.mul(nf.c0, e2);
            CHECK(L == make_curve(F, 1, {A, F.one(), B}));
        }
        // (a, 1/a, 1) passes through [1:0:1].
        Fe a{7};
        auto L = line_witness(F, nf, a, F.inv(a), F.one());
        CHECK(evaluate(F, L, point_from_codes(F, 1, 0, 1)) == F.zero());
        CHECK(throws_kind(ErrorKind::ProductNotOne, [&] { line_witness(F, nf, Fe{2}, Fe{3}, Fe{4}); }));
    }
}

TEST_CASE("cubes in the prime field") {
    Field F2(2, 8);
    CHECK(is_cube(F2, F2.one()));
    Field F7(7, 1);
    std::set<std::uint32_t> cubes;
    for (std::uint32_t x = 1; x < 7; ++x) cubes.insert(F7.pow(Fe{x}, 3).code);
    CHECK(cubes.size() == 2);
    int count = 0;
    for (std::uint32_t x = 1; x < 7; ++x) {
        CHECK(is_cube(F7, Fe{x}) == (cubes.count(x) == 1));
        count += is_cube(F7, Fe{x});
    }
    CHECK(count == 2);
    Field F5(5, 1);
    for (std::uint32_t x = 1; x < 5; ++x) CHECK(is_cube(F5, Fe{x}));
    CHECK(throws_kind(ErrorKind::ZeroArgument, [&] { is_cube(F7, F7.zero()); }));
}

TEST_CASE("normalization to xyz = c0 x^3 - c0 z^3") {
    Field F(7, 1);
    auto id = normalize(F, pose_cubic(F, 1, 0, 0, -1));
    REQUIRE(id);
    CHECK(id->g == identity_transform());
    CHECK(id->nf.c0 == F.one());

    // -c0/c3 = 1 is a cube; c1, c2 nonzero.
    auto C = pose_cubic(F, 2, 3, 5, -2);
    auto n = normalize(F, C);
    REQUIRE(n);
    CHECK(apply_curve(F, n->g, C) == nf_curve(F, n->nf));

    // -c0/c3 = 3 is not a cube in F_7.
    CHECK(!normalize(F, pose_cubic(F, 3, 1, 1, -1)));
    CHECK(throws_kind(ErrorKind::Reducible, [&] { normalize(F, pose_cubic(F, 0, 1, 1, 1)); }));
    CHECK(throws_kind(ErrorKind::BadPose, [&] {
        normalize(F, apply_curve(F, make_transform(F, {F.one(), F.one(), F.zero(), F.zero(), F.one(), F.zero(),
                                                        F.zero(), F.zero(), F.one()}),
                                 pose_cubic(F, 1, 0, 0, -1)));
    }));
}

TEST_CASE("normalization is pose independent") {
    Field F(7, 1);
    auto rng = testutil::rng(77);
    std::uniform_int_distribution<std::uint32_t> nz(1, 6), any(0, 6);
    const auto C = nf_curve(F, make_nodal_nf(F, Fe{3}));
    int normalized = 0;
    for (int i = 0; i < 200; ++i) {
        Mat3 m = mat_mul(F, diag(F, Fe{nz(rng)}, Fe{nz(rng)}, Fe{nz(rng)}), shear(F, Fe{any(rng)}, Fe{any(rng)}));
        auto gC = apply_curve(F, make_transform(F, m), C);
        auto n = normalize(F, gC);
        if (!n) continue;
        ++normalized;
        CHECK(apply_curve(F, n->g, gC) == nf_curve(F, n->nf));
        // Some rescaling of y carries the original normal form to the new one.
        bool equivalent = false;
        for (std::uint32_t mu = 1; mu < 7; ++mu)
            equivalent |= apply_curve(F, make_transform(F, diag(F, F.one(), Fe{mu}, F.one())), C) == nf_curve(F, n->nf);
        CHECK(equivalent);
    }
    CHECK(normalized > 0);
}

TEST_CASE("nodal members of the pencil through a nodal orbit") {
    Field F(2, 8);
    auto nf = make_nodal_nf(F, F.one());
    // Regression values from the pencil enumeration itself.
    CHECK(count_nodal_members(F, orbit_from_seed(F, nf, Fe{2})) == 1);
    CHECK(count_nodal_members(F, orbit_from_seed(F, nf, Fe{3})) == 3);
    int tested = 0;
    for (std::uint32_t a = 2; a < 256 && tested < 8; ++a) {
        if (F.in_subfield(Fe{a}, 4)) continue;
        auto o = orbit_from_seed(F, nf, Fe{a});
        if (!test_general_position(F, o).ok) continue;
        const int n = count_nodal_members(F, o);
        CHECK(n >= 1);
        CHECK(n <= 12);
        ++tested;
    }
    CHECK(tested == 8);
    // Eight points on the line z = 0: too many cubics.
    Fe a{2};
    auto line_orbit = orbit_from_point(F, make_point(F, F.one(), a, F.zero()));
    REQUIRE(line_orbit);
    CHECK(throws_kind(ErrorKind::NotAPencil, [&] { count_nodal_members(F, *line_orbit); }));
}
