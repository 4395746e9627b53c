#include "cremona/amalgam.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace cremona {

namespace {

bool is_identity(const Letter& l) { return !l.bertini && l.token == "1"; }

bool cancels(const Letter& x, const Letter& y) {
    if (x.bertini != y.bertini) return false;
    if (x.bertini) return x.id == y.id;
    return x.token == y.token && x.inverse != y.inverse;
}

Word strip_e(Word w) {
    while (!w.empty() && !w.back().bertini) w.pop_back();
    return w;
}

Word strip_b(Word w, int id) {
    if (!w.empty() && w.back().bertini && w.back().id == id) w.pop_back();
    return w;
}

std::string vertex_label(const TreeVertex& v) {
    const std::string w = v.rep.empty() ? "id" : format_word(v.rep);
    switch (v.kind) {
        case VertexKind::Plane: return "P2 " + w;
        case VertexKind::CentreE: return "Ge " + w;
        case VertexKind::CentreB: return "Gb" + std::to_string(v.id) + " " + w;
    }
    return w;
}

}  // namespace

FactorTable::FactorTable(std::vector<int> ids, std::vector<std::string> toks)
    : bertini_ids(std::move(ids)), tokens(std::move(toks)) {
    std::set<int> seen(bertini_ids.begin(), bertini_ids.end());
    if (seen.size() != bertini_ids.size()) throw Error(ErrorKind::InvalidArgument, "bertini labels must be distinct");
    std::set<std::string> ts(tokens.begin(), tokens.end());
    if (ts.size() != tokens.size() || ts.count("1"))
        throw Error(ErrorKind::InvalidArgument, "tokens must be distinct and not the identity");
}

int FactorTable::index_of(int id) const {
    auto it = std::find(bertini_ids.begin(), bertini_ids.end(), id);
    return it == bertini_ids.end() ? -1 : static_cast<int>(it - bertini_ids.begin());
}

Letter b(int id) { return Letter{true, id, "", false}; }
Letter e(std::string token, bool inv) { return Letter{false, 0, std::move(token), inv}; }

Letter inverse(const Letter& l) {
    if (l.bertini || is_identity(l)) return l;
    Letter r = l;
    r.inverse = !r.inverse;
    return r;
}

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    Word w;
    while (in >> tok) {
        if (tok.size() > 1 && tok[0] == 'b' && std::all_of(tok.begin() + 1, tok.end(), ::isdigit)) {
            w.push_back(b(std::stoi(tok.substr(1))));
        } else if (tok.rfind("e:", 0) == 0 && tok.size() > 2) {
            std::string name = tok.substr(2);
            bool inv = false;
            if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
                name.resize(name.size() - 3);
                inv = true;
            }
            if (name.empty() || name.find('^') != std::string::npos)
                throw Error(ErrorKind::InvalidArgument, "bad e-token '" + tok + "'");
            w.push_back(e(name, inv));
        } else {
            throw Error(ErrorKind::InvalidArgument, "bad letter '" + tok + "'");
        }
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += l.bertini ? "b" + std::to_string(l.id) : "e:" + l.token + (l.inverse ? "^-1" : "");
    }
    return s;
}

bool is_normal(const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (is_identity(w[i])) return false;
        if (i + 1 < w.size() && cancels(w[i], w[i + 1])) return false;
    }
    return true;
}

Word normal_form(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (is_identity(l)) continue;
        if (!out.empty() && cancels(out.back(), l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word normal_form_in_order(const Word& w, const std::function<std::size_t(std::size_t)>& choose) {
    Word cur;
    for (const auto& l : w)
        if (!is_identity(l)) cur.push_back(l);
    for (;;) {
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            if (cancels(cur[i], cur[i + 1])) sites.push_back(i);
        if (sites.empty()) return cur;
        const std::size_t i = sites[choose(sites.size()) % sites.size()];
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    }
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

Word invert(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

Word signature(const Word& w) {
    Word bs;
    for (const auto& l : w)
        if (l.bertini) bs.push_back(l);
    return normal_form(bs);
}

std::vector<int> abelianize(const FactorTable& table, const Word& w) {
    std::vector<int> v(table.bertini_ids.size(), 0);
    for (const auto& l : w) {
        if (!l.bertini) continue;
        const int i = table.index_of(l.id);
        if (i < 0) throw Error(ErrorKind::InvalidArgument, "letter b" + std::to_string(l.id) + " is not in the table");
        v[i] ^= 1;
    }
    return v;
}

std::size_t syllable_length(const Word& w) {
    const Word n = normal_form(w);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n[i].bertini || i == 0 || n[i - 1].bertini) ++count;
    return count;
}

TreeVertex translate(const Word& g, const TreeVertex& v) {
    const Word w = normal_form(concat(g, v.rep));
    switch (v.kind) {
        case VertexKind::Plane: return {VertexKind::Plane, 0, w};
        case VertexKind::CentreE: return {VertexKind::CentreE, 0, strip_e(w)};
        case VertexKind::CentreB: return {VertexKind::CentreB, v.id, strip_b(w, v.id)};
    }
    return v;
}

namespace {

std::vector<TreeVertex> neighbours(const FactorTable& table, const TreeVertex& v) {
    std::vector<TreeVertex> out;
    switch (v.kind) {
        case VertexKind::Plane:
            out.push_back({VertexKind::CentreE, 0, strip_e(v.rep)});
            for (int id : table.bertini_ids) out.push_back({VertexKind::CentreB, id, strip_b(v.rep, id)});
            break;
        case VertexKind::CentreE:
            out.push_back({VertexKind::Plane, 0, v.rep});
            for (const auto& t : table.tokens)
                for (bool inv : {false, true}) out.push_back({VertexKind::Plane, 0, concat(v.rep, {e(t, inv)})});
            break;
        case VertexKind::CentreB:
            out.push_back({VertexKind::Plane, 0, v.rep});
            out.push_back({VertexKind::Plane, 0, normal_form(concat(v.rep, {b(v.id)}))});
            break;
    }
    return out;
}

}  // namespace

int TreeBall::distance_from_root(int v) const {
    const auto& r = vertices[v].rep;
    // Path from the root alternates plane vertices and centres; each syllable costs 2 edges.
    const int d = 2 * static_cast<int>(syllable_length(r));
    return vertices[v].kind == VertexKind::Plane ? d : d + 1;
}

bool TreeBall::is_tree() const {
    if (vertices.empty()) return false;
    if (edges.size() + 1 != vertices.size()) return false;
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [a, c] : edges) adj[a].push_back(c), adj[c].push_back(a);
    std::vector<char> seen(vertices.size(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (!seen[w]) seen[w] = 1, ++count, q.push_back(w);
    }
    return count == vertices.size();
}

std::size_t TreeBall::degree(int v) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [&](auto e) { return e.first == v || e.second == v; }));
}

TreeBall bass_serre_ball(const FactorTable& table, int radius) {
    if (radius < 0) throw Error(ErrorKind::InvalidArgument, "radius must be non-negative");
    if (radius > 6) throw Error(ErrorKind::RadiusTooLarge, "radius is limited to 6");
    std::map<TreeVertex, int> dist;
    const TreeVertex root{VertexKind::Plane, 0, {}};
    dist[root] = 0;
    std::deque<TreeVertex> q{root};
    std::set<std::pair<TreeVertex, TreeVertex>> edges;
    while (!q.empty()) {
        TreeVertex v = q.front();
        q.pop_front();
        const int d = dist[v];
        if (d == radius) continue;
        for (const auto& w : neighbours(table, v)) {
            if (w == v) continue;
            edges.insert(std::minmax(v, w));
            if (!dist.count(w)) {
                dist[w] = d + 1;
                q.push_back(w);
            }
        }
    }
    TreeBall ball;
    ball.radius = radius;
    for (const auto& [v, d] : dist) ball.vertices.push_back(v);
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) ball.index[ball.vertices[i]] = static_cast<int>(i);
    for (const auto& [a, c] : edges) ball.edges.emplace_back(ball.index.at(a), ball.index.at(c));
    std::sort(ball.edges.begin(), ball.edges.end());
    return ball;
}

std::string export_dot(const TreeBall& ball) {
    std::ostringstream out;
    out << "graph ball {\n";
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        const auto& v = ball.vertices[i];
        const char* color = v.kind == VertexKind::Plane ? "black" : v.kind == VertexKind::CentreE ? "blue" : "red";
        out << "  n" << i << " [label=\"" << vertex_label(v) << "\", color=" << color << "];\n";
    }
    for (auto [a, c] : ball.edges) out << "  n" << a << " -- n" << c << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace cremona
