#include <algorithm>
#include <map>
#include <set>

#include "cremona/sarkisov.hpp"
#include "test_util.hpp"

using namespace cremona;
using testutil::throws_kind;

namespace {

std::map<int, int> rank_counts(const SquareComplex& X) {
    std::map<int, int> m;
    for (const auto& v : X.vertices) ++m[v.rank];
    return m;
}

bool has_edge(const SquareComplex& X, int a, int b) {
    return std::any_of(X.edges.begin(), X.edges.end(), [&](const ComplexEdge& e) {
        return (e.from == a && e.to == b) || (e.from == b && e.to == a);
    });
}

// Squares having both ends of the edge a - b as adjacent corners.
int squares_on_edge(const SquareComplex& X, int a, int b) {
    int n = 0;
    for (const auto& s : X.squares)
        for (int k = 0; k < 4; ++k) {
            const int u = s[k], v = s[(k + 1) % 4];
            if ((u == a && v == b) || (u == b && v == a)) ++n;
        }
    return n;
}

// Structural checks that do not depend on how the complex was built.
void check_shape(const SquareComplex& X) {
    const Lattice& L = X.ambient;
    for (const auto& v : X.vertices) {
        const auto rho = static_cast<int>(L.rank() - v.contracted.size());
        if (v.fibre) {
            CHECK(v.rank + 1 == rho);
            CHECK(L.self(*v.fibre) == 0);
            CHECK(L.dot(L.K, *v.fibre) == -2);
        } else {
            CHECK(v.rank == rho);
        }
        CHECK(v.rank >= 1);
        CHECK(v.rank <= 3);
    }
    for (const auto& e : X.edges) {
        CHECK(X.vertices[e.from].rank == e.type_hi);
        CHECK(X.vertices[e.to].rank == e.type_lo);
        CHECK(e.type_hi == e.type_lo + 1);
    }
    for (const auto& s : X.squares) {
        CHECK(X.vertices[s[0]].rank == 3);
        CHECK(X.vertices[s[1]].rank == 2);
        CHECK(X.vertices[s[2]].rank == 1);
        CHECK(X.vertices[s[3]].rank == 2);
        for (int k = 0; k < 4; ++k) CHECK(has_edge(X, s[k], s[(k + 1) % 4]));
    }
    CHECK(rank_counts(X)[1] == static_cast<int>(windows(L).size()));
}

}  // namespace

TEST_CASE("one blow-up gives a path") {
    auto X = build_local(blowup_lattice({1}));
    check_shape(X);
    CHECK(X.vertices.size() == 3);
    CHECK(X.edges.size() == 2);
    CHECK(X.squares.empty());
    const int p2 = X.find("{E1}/pt"), f1 = X.find("{}/pt");
    REQUIRE(p2 >= 0);
    REQUIRE(f1 >= 0);
    CHECK(X.vertices[p2].rank == 1);
    CHECK(X.vertices[f1].rank == 2);
    CHECK(has_edge(X, f1, p2));
    CHECK(X.find("{}/P1[H-E1]") >= 0);
    CHECK(X.find("nothing") == -1);
}

TEST_CASE("two points: five squares around one rank 3 vertex") {
    auto X = build_local(blowup_lattice({1, 1}));
    check_shape(X);
    CHECK(X.vertices.size() == 11);
    CHECK(X.edges.size() == 15);
    CHECK(X.squares.size() == 5);
    CHECK(rank_counts(X) == std::map<int, int>{{1, 5}, {2, 5}, {3, 1}});
    const int top = X.find("{}/pt");
    REQUIRE(top >= 0);
    CHECK(squares_at(X, top) == 5);
    auto cycle = elementary_relation(X, top);
    CHECK(cycle.size() == 10);
    // Alternating ranks around the disk, consecutive entries joined by edges.
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        CHECK(X.vertices[cycle[i]].rank == (i % 2 == 0 ? 1 : 2));
        CHECK(has_edge(X, cycle[i], cycle[(i + 1) % cycle.size()]));
    }
    std::set<int> distinct(cycle.begin(), cycle.end());
    CHECK(distinct.size() == cycle.size());
    // Both rulings of F_0 appear as distinct rank 1 vertices.
    CHECK(distinct.count(X.find("{H-E1-E2}/P1[H-E1]")));
    CHECK(distinct.count(X.find("{H-E1-E2}/P1[H-E2]")));
    CHECK(throws_kind(ErrorKind::NotRank3, [&] { elementary_relation(X, X.find("{E1,E2}/pt")); }));

    // Points of degree one and two give the same combinatorics.
    auto Y = build_local(blowup_lattice({1, 2}));
    check_shape(Y);
    CHECK(Y.squares.size() == 5);
    CHECK(rank_counts(Y) == std::map<int, int>{{1, 5}, {2, 5}, {3, 1}});
}

TEST_CASE("three points") {
    auto X = build_local(blowup_lattice({1, 1, 1}));
    check_shape(X);
    CHECK(X.vertices.size() == 44);
    CHECK(X.edges.size() == 84);
    CHECK(X.squares.size() == 42);
    const int p2 = X.find("{E1,E2,E3}/pt");
    REQUIRE(p2 >= 0);
    CHECK(squares_at(X, p2) == 3);
    int point_base = 0, curve_base = 0;
    for (int v = 0; v < static_cast<int>(X.vertices.size()); ++v) {
        if (X.vertices[v].rank != 3) continue;
        const int n = squares_at(X, v);
        CHECK(elementary_relation(X, v).size() == static_cast<std::size_t>(2 * n));
        if (X.vertices[v].fibre) {
            CHECK(n == 4);
            ++curve_base;
        } else {
            CHECK(n == 5);
            ++point_base;
        }
    }
    CHECK(curve_base == 3);
    CHECK(point_base == 6);
}

TEST_CASE("no squares without a rank 3 vertex") {
    for (const auto& L : {blowup_lattice({8}), blowup_lattice({2}), example_3_8()}) {
        auto X = build_local(L);
        check_shape(X);
        CHECK(X.squares.empty());
        CHECK(rank_counts(X)[3] == 0);
    }
    CHECK(build_local(example_3_8()).vertices.size() == 5);
}

TEST_CASE("bertini edge lies in no square") {
    CHECK(bertini_edge_square_count(8) == 0);
    for (int extra = 1; extra <= 8; ++extra) CHECK(bertini_edge_square_count(8, extra) == 0);
    // Positive control: the edge F_1/pt -> P^2/pt of the two point complex.
    auto X = build_local(blowup_lattice({1, 1}));
    const int f1 = X.find("{E2}/pt"), p2 = X.find("{E1,E2}/pt");
    REQUIRE(has_edge(X, f1, p2));
    CHECK(squares_on_edge(X, f1, p2) >= 1);
    CHECK(bertini_edge_square_count(1, 1) == squares_on_edge(X, f1, p2));
    CHECK(bertini_edge_square_count(1) >= 1);
}

TEST_CASE("exports") {
    auto X = build_local(blowup_lattice({1, 1}));
    const auto dot = export_dot(X);
    CHECK(dot.rfind("digraph complex {", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 11 + 15 + 1);
    CHECK(dot == export_dot(build_local(blowup_lattice({1, 1}))));
    CHECK(import_json(export_json(X)) == X);

    SquareComplex empty;
    CHECK(import_json(export_json(empty)) == empty);
    CHECK(export_dot(empty) == "digraph complex {\n}\n");
}
