#include <algorithm>
#include <set>

#include "cremona/amalgam.hpp"
#include "test_util.hpp"

using namespace cremona;
using testutil::throws_kind;

namespace {

Word random_word(std::mt19937_64& rng, int max_len, int bertini = 3) {
    static const char* toks[] = {"g", "h", "k"};
    std::uniform_int_distribution<int> len(0, max_len), kind(0, 2), id(1, bertini), tok(0, 2), inv(0, 1);
    Word w;
    for (int n = len(rng); n > 0; --n) {
        if (kind(rng) == 0) w.push_back(b(id(rng)));
        else w.push_back(e(toks[tok(rng)], inv(rng) == 1));
    }
    return w;
}

// Stack reduction; free-product normal forms are unique, so this is an independent oracle.
Word stack_reduce(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (!l.bertini && l.token == "1") continue;
        if (!out.empty() && out.back() == inverse(l)) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

Word alternating(int n) {
    Word w;
    for (int i = 0; i < n; ++i) {
        w.push_back(b(1));
        w.push_back(e("j"));
    }
    return w;
}

}  // namespace

TEST_CASE("parsing and formatting") {
    auto w = parse_word("b1 e:g e:h^-1 b2 e:1");
    REQUIRE(w.size() == 5);
    CHECK(w[0] == b(1));
    CHECK(w[2] == e("h", true));
    CHECK(format_word(w) == "b1 e:g e:h^-1 b2 e:1");
    CHECK(parse_word("").empty());
    CHECK(parse_word("  b3   e:x ").size() == 2);
    CHECK(inverse(b(4)) == b(4));
    CHECK(inverse(e("g")) == e("g", true));
    for (const char* bad : {"b", "bx", "x1", "e:", "e:g^2", "b1b2"})
        CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { parse_word(bad); }));
}

TEST_CASE("normal form examples") {
    CHECK(normal_form(parse_word("b1 b1")).empty());
    CHECK(format_word(normal_form(parse_word("e:g e:h e:h^-1 b1"))) == "e:g b1");
    CHECK(format_word(normal_form(parse_word("b1 e:g e:g^-1 b1 b2 e:1"))) == "b2");
    CHECK(is_normal(parse_word("b1 b2 b1")));
    CHECK(!is_normal(parse_word("e:g e:g^-1")));
}

TEST_CASE("normal form is idempotent and confluent") {
    auto rng = testutil::rng(81);
    for (int i = 0; i < 1000; ++i) {
        const Word w = random_word(rng, 24);
        const Word n = normal_form(w);
        CHECK(is_normal(n));
        CHECK(normal_form(n) == n);
        CHECK(n == stack_reduce(w));
        std::uint64_t state = rng();
        std::function<std::size_t(std::size_t)> choose = [&](std::size_t k) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<std::size_t>((state >> 33) % k);
        };
        CHECK(normal_form_in_order(w, choose) == n);
        CHECK(normal_form(concat(w, invert(w))).empty());
    }
}

TEST_CASE("alternating words do not collapse") {
    for (int n = 0; n <= 100; ++n) {
        const Word w = normal_form(alternating(n));
        CHECK(w.size() == static_cast<std::size_t>(2 * n));
        CHECK(syllable_length(w) == static_cast<std::size_t>(2 * n));
    }
    CHECK(syllable_length(parse_word("e:g e:h b1")) == 2);
}

TEST_CASE("signature") {
    CHECK(signature(parse_word("e:g e:h^-1")).empty());
    CHECK(format_word(signature(parse_word("b1 e:g b2 e:h b1"))) == "b1 b2 b1");
    CHECK(signature(parse_word("b1")) == Word{b(1)});
    CHECK(signature(parse_word("b1 e:g b1")).empty());
    auto rng = testutil::rng(82);
    for (int i = 0; i < 1000; ++i) {
        const Word u = random_word(rng, 16), v = random_word(rng, 16);
        CHECK(signature(concat(u, v)) == normal_form(concat(signature(u), signature(v))));
        // Kernel: exactly the words whose b-letters reduce away.
        Word bs;
        for (const auto& l : u)
            if (l.bertini) bs.push_back(l);
        CHECK(signature(u).empty() == stack_reduce(bs).empty());
    }
}

TEST_CASE("abelianization") {
    FactorTable t({1, 2, 3});
    CHECK(abelianize(t, {}) == std::vector<int>{0, 0, 0});
    CHECK(abelianize(t, parse_word("b1 b2 b1")) == std::vector<int>{0, 1, 0});
    auto rng = testutil::rng(83);
    for (int i = 0; i < 1000; ++i) {
        const Word w = random_word(rng, 20);
        CHECK(abelianize(t, w) == abelianize(t, signature(w)));
    }
    CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { abelianize(t, parse_word("b9")); }));
}

TEST_CASE("factor table validation") {
    CHECK(throws_kind(ErrorKind::InvalidArgument, [] { FactorTable({1, 1}); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument, [] { FactorTable({1}, {"g", "g"}); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument, [] { FactorTable({1}, {"1"}); }));
    FactorTable t({4, 7});
    CHECK(t.index_of(7) == 1);
    CHECK(t.index_of(5) == -1);
}

TEST_CASE("bass-serre balls") {
    FactorTable two({1, 2});
    auto star = bass_serre_ball(two, 1);
    CHECK(star.vertices.size() == 4);
    CHECK(star.edges.size() == 3);
    const int root = star.index.at(TreeVertex{VertexKind::Plane, 0, {}});
    CHECK(star.degree(root) == 3);
    CHECK(star.is_tree());

    const std::vector<std::size_t> sizes{1, 5, 10, 25, 43, 97, 163};
    for (std::size_t nb = 1; nb <= 3; ++nb) {
        std::vector<int> ids;
        for (std::size_t i = 1; i <= nb; ++i) ids.push_back(static_cast<int>(i));
        FactorTable t(ids);
        for (int r = 0; r <= 4; ++r) {
            auto ball = bass_serre_ball(t, r);
            CHECK(ball.is_tree());
            CHECK(ball.edges.size() + 1 == ball.vertices.size());
            if (nb == 3) CHECK(ball.vertices.size() == sizes[r]);
            for (int v = 0; v < static_cast<int>(ball.vertices.size()); ++v) {
                CHECK(ball.distance_from_root(v) <= r);
                if (ball.vertices[v].kind == VertexKind::Plane && ball.distance_from_root(v) < r)
                    CHECK(ball.degree(v) == nb + 1);
            }
        }
    }
    FactorTable three({1, 2, 3});
    CHECK(bass_serre_ball(three, 6).vertices.size() == 163);
    CHECK(throws_kind(ErrorKind::RadiusTooLarge, [&] { bass_serre_ball(three, 7); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { bass_serre_ball(three, -1); }));
}

TEST_CASE("translation acts on the tree") {
    FactorTable t({1, 2, 3});
    // e-centres only carry single letters, so translate by Bertini letters.
    auto small = bass_serre_ball(t, 4), big = bass_serre_ball(t, 6);
    for (const Word& g : {Word{b(1)}, Word{b(3)}}) {
        std::size_t missing = 0;
        for (const auto& v : small.vertices) missing += !big.index.count(translate(g, v));
        for (auto [u, v] : small.edges) {
            const auto gu = translate(g, small.vertices[u]), gv = translate(g, small.vertices[v]);
            if (!big.index.count(gu) || !big.index.count(gv)) {
                ++missing;
                continue;
            }
            const std::pair<int, int> img = std::minmax(big.index.at(gu), big.index.at(gv));
            missing += !std::binary_search(big.edges.begin(), big.edges.end(), img);
        }
        CHECK(missing == 0);
    }
    // Only the identity fixes both ends of the edge between (P^2, id) and (P^2, b1).
    const TreeVertex p{VertexKind::Plane, 0, {}}, pb{VertexKind::Plane, 0, {b(1)}};
    auto rng = testutil::rng(84);
    for (int i = 0; i < 1000; ++i) {
        const Word g = random_word(rng, 10);
        const bool fixes = translate(g, p) == p && translate(g, pb) == pb;
        CHECK(fixes == normal_form(g).empty());
    }
    const auto dot = export_dot(bass_serre_ball(FactorTable({1, 2}), 1));
    CHECK(dot.find("color") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') >= 4 + 3);
}
