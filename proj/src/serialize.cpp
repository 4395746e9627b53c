#include "cremona/serialize.hpp"

#include <sstream>

namespace cremona {

json to_json(const Poly& modulus) {
    json j = json::array();
    for (auto c : modulus) j.push_back(c);
    return j;
}

json to_json(const ProjPoint& p) { return json::array({p.c[0].code, p.c[1].code, p.c[2].code}); }

json to_json(const GaloisOrbit8& orbit) {
    json j = json::array();
    for (const auto& p : orbit.points) j.push_back(to_json(p));
    return j;
}

json to_json(const GeneralPositionReport& r) {
    return json{{"ok", r.ok},
                {"failed_lines", r.failed_lines},
                {"failed_conics", r.failed_conics},
                {"failed_cubics", r.failed_cubics}};
}

json to_json(const Rational& r) {
    std::ostringstream s;
    s << r;
    return s.str();
}

json to_json(const Q& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json to_json(const QVec& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(to_json(x));
    return j;
}

json to_json(const Lattice& L) {
    return json{{"labels", L.labels}, {"gram", L.gram},     {"K", L.K},
                {"degrees", L.degrees}, {"parent", L.parent}, {"basis", L.basis}};
}

Lattice lattice_from_json(const json& j) {
    Lattice L;
    j.at("labels").get_to(L.labels);
    j.at("gram").get_to(L.gram);
    j.at("K").get_to(L.K);
    j.at("degrees").get_to(L.degrees);
    j.at("parent").get_to(L.parent);
    j.at("basis").get_to(L.basis);
    return L;
}

json to_json(const Lattice& L, const Chamber& c, const std::vector<IntVec>& negatives) {
    json contracted = json::array();
    for (int i : c.contracted) contracted.push_back(format_class(L, negatives[i]));
    return json{{"contracted", contracted}, {"certificate", to_json(c.certificate)}, {"target", to_json(c.target)}};
}

json to_json(const CensusResult& r) {
    json classes = json::array();
    for (const auto& c : r.classes) {
        json e{{"key", c.key}, {"representative", to_json(c.representative)}, {"nodal", c.nodal}};
        if (c.canonical) {
            e["canonical"] = c.canonical->canonical;
            if (c.canonical->prefix >= 0) e["nodal_members"] = c.canonical->prefix;
        }
        classes.push_back(e);
    }
    return json{{"q", r.q},
                {"mode", r.mode == CensusMode::Exact ? "exact" : "sampled"},
                {"modulus", to_json(r.modulus)},
                {"total_degree8_orbits", r.total_degree8_orbits},
                {"orbits_examined", r.orbits_examined},
                {"general_position_count", r.general_position_count},
                {"pgl3_class_count", r.pgl3_class_count},
                {"nodal_class_count", r.nodal_class_count},
                {"mq_bound", to_json(r.mq_bound)},
                {"mq_ceil", r.mq_ceil},
                {"bound_satisfied", r.bound_satisfied},
                {"budget_exceeded", r.budget_exceeded},
                {"elapsed_ms", r.elapsed_ms},
                {"checkpoint", {{"path", r.checkpoint_path},
                                {"batches", r.checkpoint_batches},
                                {"resumed_batches", r.resumed_batches}}},
                {"classes", classes}};
}

std::string census_csv(const CensusResult& r) {
    std::ostringstream out;
    out << "class,nodal";
    for (int i = 0; i < 8; ++i) out << ",p" << i;
    out << "\n";
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
        const auto& c = r.classes[k];
        out << k << "," << (c.nodal ? 1 : 0);
        for (const auto& p : c.representative.points)
            out << "," << p.c[0].code << ":" << p.c[1].code << ":" << p.c[2].code;
        out << "\n";
    }
    return out.str();
}

json to_json(const SquareComplex& X) {
    json vertices = json::array();
    for (const auto& v : X.vertices) {
        json e{{"name", v.name}, {"rank", v.rank}, {"contracted", v.contracted}};
        e["fibre"] = v.fibre ? json(*v.fibre) : json(nullptr);
        vertices.push_back(e);
    }
    json edges = json::array();
    for (const auto& e : X.edges) edges.push_back({e.from, e.to, e.type_hi, e.type_lo});
    return json{{"ambient", to_json(X.ambient)},
                {"negatives", X.negatives},
                {"vertices", vertices},
                {"edges", edges},
                {"squares", X.squares}};
}

SquareComplex complex_from_json(const json& j) {
    SquareComplex X;
    if (j.contains("ambient")) X.ambient = lattice_from_json(j.at("ambient"));
    j.at("negatives").get_to(X.negatives);
    for (const auto& v : j.at("vertices")) {
        FibrationVertex f;
        v.at("name").get_to(f.name);
        v.at("rank").get_to(f.rank);
        v.at("contracted").get_to(f.contracted);
        if (!v.at("fibre").is_null()) f.fibre = v.at("fibre").get<IntVec>();
        X.vertices.push_back(std::move(f));
    }
    for (const auto& e : j.at("edges"))
        X.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>()});
    j.at("squares").get_to(X.squares);
    return X;
}

}  // namespace cremona
