#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

/// Finite model of the free product G_e * (*_B Z/2Z). G_e is free on opaque tokens.
struct FactorTable {
    std::vector<int> bertini_ids;
    std::vector<std::string> tokens;  // alphabet used by Bass–Serre balls

    FactorTable(std::vector<int> ids, std::vector<std::string> toks = {"g"});
    int index_of(int id) const;  // position in bertini_ids, -1 when absent
};

struct Letter {
    bool bertini = false;
    int id = 0;           // bertini label
    std::string token;    // e-token name
    bool inverse = false; // formal inverse of an e-token

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Letter b(int id);
Letter e(std::string token, bool inverse = false);
Letter inverse(const Letter& l);

/// Grammar: space-separated "b<i>", "e:<name>", "e:<name>^-1"; "e:1" is the identity.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

/// True when no two adjacent letters cancel (b_i b_i or t t^-1).
bool is_normal(const Word& w);

/// Free-product normal form: cancels b_i b_i and t t^-1, drops identity letters.
Word normal_form(const Word& w);

/// Same rewriting, applying cancellations at positions chosen by `choose(count)`.
Word normal_form_in_order(const Word& w, const std::function<std::size_t(std::size_t)>& choose);

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);

/// Image in *_B Z/2Z: drop e-letters, reduce.
Word signature(const Word& w);

/// Parity of each b-letter count, indexed like table.bertini_ids.
std::vector<int> abelianize(const FactorTable& table, const Word& w);

/// Number of e-syllables plus b-letters in the normal form (alternating length).
std::size_t syllable_length(const Word& w);

enum class VertexKind { Plane, CentreE, CentreB };

struct TreeVertex {
    VertexKind kind = VertexKind::Plane;
    int id = 0;   // bertini label for CentreB
    Word rep;     // normal form; for centres, without the trailing letter of that factor
    friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
};

struct TreeBall {
    std::vector<TreeVertex> vertices;  // sorted
    std::vector<std::pair<int, int>> edges;
    std::map<TreeVertex, int> index;
    int radius = 0;

    int distance_from_root(int v) const;
    bool is_tree() const;
    std::size_t degree(int v) const;
};

/// Ball of the given radius (graph distance) around the plane vertex of the empty word.
/// The e-centres are restricted to single-letter syllables over table.tokens.
TreeBall bass_serre_ball(const FactorTable& table, int radius);

/// Left translate of a vertex by a word.
TreeVertex translate(const Word& g, const TreeVertex& v);

std::string export_dot(const TreeBall& ball);

}  // namespace cremona
