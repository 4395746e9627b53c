#include "cremona/sarkisov.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cremona/serialize.hpp"

namespace cremona {

namespace {

std::string vertex_name(const Lattice& Z, const std::vector<IntVec>& neg, const std::vector<int>& I,
                        const std::optional<IntVec>& fibre) {
    std::string s = "{";
    for (std::size_t k = 0; k < I.size(); ++k) s += (k ? "," : "") + format_class(Z, neg[I[k]]);
    s += "}/";
    s += fibre ? "P1[" + format_class(Z, *fibre) + "]" : "pt";
    return s;
}

// Higher-rank vertex `hi` factorises through `lo`.
bool factorises(const FibrationVertex& hi, const FibrationVertex& lo) {
    if (hi.rank <= lo.rank) return false;
    if (!std::includes(lo.contracted.begin(), lo.contracted.end(), hi.contracted.begin(), hi.contracted.end()))
        return false;
    if (hi.fibre) return lo.fibre == hi.fibre;
    return true;
}

}  // namespace

int SquareComplex::find(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].name == name) return static_cast<int>(i);
    return -1;
}

SquareComplex build_local(const Lattice& Z) {
    ChamberModel M(Z);
    SquareComplex X;
    X.ambient = Z;
    X.negatives = M.negatives();
    for (const auto& I : M.contractible_sets()) {
        const auto s = M.surface(I);
        if (s.rho >= 1 && s.rho <= 3 && s.K2 >= 1 && s.rigid.empty())
            X.vertices.push_back({I, std::nullopt, static_cast<int>(s.rho), ""});
        const auto r = s.rho - 1;
        if (r < 1 || r > 3) continue;
        for (const auto& F : s.conics) {
            const bool rel_ample =
                std::none_of(s.rigid.begin(), s.rigid.end(), [&](const IntVec& R) { return Z.dot(R, F) == 0; });
            if (rel_ample) X.vertices.push_back({I, F, static_cast<int>(r), ""});
        }
    }
    for (auto& v : X.vertices) v.name = vertex_name(Z, X.negatives, v.contracted, v.fibre);
    std::sort(X.vertices.begin(), X.vertices.end(), [](const FibrationVertex& a, const FibrationVertex& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.name < b.name;
    });

    const int n = static_cast<int>(X.vertices.size());
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) adj[a][b] = factorises(X.vertices[a], X.vertices[b]);
    for (int a = 0; a < n; ++a) {
        const int ra = X.vertices[a].rank;
        for (int b = 0; b < n; ++b) {
            if (!adj[a][b]) continue;
            const int rb = X.vertices[b].rank;
            if (ra == 3 && rb == 1) {
                std::vector<int> mids;
                for (int m = 0; m < n; ++m)
                    if (X.vertices[m].rank == 2 && adj[a][m] && adj[m][b]) mids.push_back(m);
                // Two-rays game: a (3,1) edge bounds exactly two triangles.
                if (mids.size() != 2)
                    throw Error(ErrorKind::InvalidArgument, "edge " + X.vertices[a].name + " -> " +
                                                                X.vertices[b].name + " bounds " +
                                                                std::to_string(mids.size()) + " triangles");
                X.squares.push_back({a, mids[0], b, mids[1]});
            } else {
                X.edges.push_back({a, b, ra, rb});
            }
        }
    }
    return X;
}

int squares_at(const SquareComplex& X, int v) {
    return static_cast<int>(std::count_if(X.squares.begin(), X.squares.end(), [&](const Square& s) {
        return std::find(s.begin(), s.end(), v) != s.end();
    }));
}

std::vector<int> elementary_relation(const SquareComplex& X, int vertex) {
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= X.vertices.size() || X.vertices[vertex].rank != 3)
        throw Error(ErrorKind::NotRank3, "elementary relations are centred at rank 3 vertices");
    std::map<int, std::vector<int>> link;
    for (const auto& s : X.squares) {
        if (s[0] != vertex) continue;
        for (int m : {s[1], s[3]}) {
            link[m].push_back(s[2]);
            link[s[2]].push_back(m);
        }
    }
    if (link.empty()) return {};
    for (const auto& [v, nb] : link)
        if (nb.size() != 2) throw Error(ErrorKind::InvalidArgument, "disk around " + X.vertices[vertex].name + " does not close");
    int start = -1;
    for (const auto& [v, nb] : link)
        if (X.vertices[v].rank == 1) {
            start = v;
            break;
        }
    std::vector<int> cycle{start};
    int prev = start, cur = std::min(link[start][0], link[start][1]);
    while (cur != start) {
        cycle.push_back(cur);
        const auto& nb = link[cur];
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != link.size())
        throw Error(ErrorKind::InvalidArgument, "link of " + X.vertices[vertex].name + " is not a single cycle");
    return cycle;
}

int bertini_edge_square_count(int degree, int max_extra) {
    int total = 0;
    for (int d = 1; d <= max_extra; ++d) {
        // A square through the edge needs a rank 3 del Pezzo vertex over it: K^2 = 9 - degree - d.
        if (9 - degree - d <= 0) continue;
        const Lattice Z = blowup_lattice({degree, d});
        const SquareComplex X = build_local(Z);
        const auto idx = [&](const IntVec& s) {
            const IntVec c = Z.from_standard(s);
            return static_cast<int>(std::find(X.negatives.begin(), X.negatives.end(), c) - X.negatives.begin());
        };
        std::vector<int> extra{idx({0, 0, 1})};
        std::vector<int> both{idx({0, 1, 0}), extra[0]};
        std::sort(both.begin(), both.end());
        int hi = -1, lo = -1;
        for (std::size_t v = 0; v < X.vertices.size(); ++v) {
            const auto& fv = X.vertices[v];
            if (fv.fibre) continue;
            if (fv.contracted == extra) hi = static_cast<int>(v);
            if (fv.contracted == both) lo = static_cast<int>(v);
        }
        if (hi < 0 || lo < 0) continue;
        for (const auto& s : X.squares)
            if (s[2] == lo && (s[1] == hi || s[3] == hi)) ++total;
    }
    return total;
}

std::string export_dot(const SquareComplex& X) {
    std::ostringstream out;
    out << "digraph complex {\n";
    for (std::size_t v = 0; v < X.vertices.size(); ++v) {
        const auto& fv = X.vertices[v];
        out << "  v" << v << " [label=\"" << fv.name << "\\nr=" << fv.rank << "\", shape="
            << (fv.fibre ? "box" : "ellipse") << "];\n";
    }
    for (const auto& e : X.edges)
        out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.type_hi << "," << e.type_lo << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string export_json(const SquareComplex& X) { return to_json(X).dump(2) + "\n"; }

SquareComplex import_json(const std::string& text) { return complex_from_json(json::parse(text)); }

}  // namespace cremona
