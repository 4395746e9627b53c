#include "cremona/plane.hpp"

#include "cremona/linalg.hpp"

namespace cremona {

namespace {

void require_distinct(std::span<const ProjPoint> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw Error(ErrorKind::DuplicatePoint, "points must be pairwise distinct");
}

// Product of two homogeneous forms.
std::vector<Fe> form_mul(const Field& F, unsigned d1, const std::vector<Fe>& f, unsigned d2,
                         const std::vector<Fe>& g) {
    const auto& m1 = monomials(d1);
    const auto& m2 = monomials(d2);
    std::vector<Fe> out(monomials(d1 + d2).size());
    for (std::size_t i = 0; i < m1.size(); ++i) {
        if (f[i].code == 0) continue;
        for (std::size_t j = 0; j < m2.size(); ++j) {
            if (g[j].code == 0) continue;
            auto k = monomial_index(d1 + d2, m1[i].x + m2[j].x, m1[i].y + m2[j].y);
            out[k] = F.add(out[k], F.mul(f[i], g[j]));
        }
    }
    return out;
}

Fe fe_pow(const Field& F, Fe x, unsigned e) {
    Fe r{1};
    for (unsigned i = 0; i < e; ++i) r = F.mul(r, x);
    return r;
}

}  // namespace

ProjPoint make_point(const Field& F, Fe x, Fe y, Fe z) {
    std::array<Fe, 3> c{x, y, z};
    for (std::size_t i = 0; i < 3; ++i) {
        if (c[i].code == 0) continue;
        Fe s = F.inv(c[i]);
        for (auto& v : c) v = F.mul(v, s);
        return ProjPoint{c};
    }
    throw Error(ErrorKind::ZeroArgument, "all coordinates zero");
}

ProjPoint point_from_codes(const Field& F, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    return make_point(F, F.from_code(x), F.from_code(y), F.from_code(z));
}

ProjPoint frobenius(const Field& F, const ProjPoint& p, unsigned times) {
    return ProjPoint{{F.frobenius(p.c[0], times), F.frobenius(p.c[1], times), F.frobenius(p.c[2], times)}};
}

std::uint64_t plane_point_count(const Field& F) {
    const std::uint64_t N = F.size();
    return N * N + N + 1;
}

ProjPoint plane_point(const Field& F, std::uint64_t index) {
    const std::uint64_t N = F.size();
    if (index == 0) return ProjPoint{{Fe{0}, Fe{0}, Fe{1}}};
    if (index <= N) return ProjPoint{{Fe{0}, Fe{1}, Fe{static_cast<std::uint32_t>(index - 1)}}};
    index -= N + 1;
    if (index >= N * N) throw Error(ErrorKind::InvalidArgument, "point index out of range");
    return ProjPoint{{Fe{1}, Fe{static_cast<std::uint32_t>(index / N)}, Fe{static_cast<std::uint32_t>(index % N)}}};
}

const std::vector<Monomial>& monomials(unsigned degree) {
    static const auto table = [] {
        std::vector<std::vector<Monomial>> t(7);
        for (unsigned d = 0; d < t.size(); ++d)
            for (int a = static_cast<int>(d); a >= 0; --a)
                for (int b = static_cast<int>(d) - a; b >= 0; --b)
                    t[d].push_back({unsigned(a), unsigned(b), d - unsigned(a) - unsigned(b)});
        return t;
    }();
    if (degree >= table.size()) throw Error(ErrorKind::InvalidArgument, "degree too large");
    return table[degree];
}

std::size_t monomial_index(unsigned d, unsigned a, unsigned b) {
    return (d - a) * (d - a + 1) / 2 + (d - a - b);
}

std::vector<Fe> monomial_values(const Field& F, unsigned degree, const ProjPoint& p) {
    const auto& ms = monomials(degree);
    std::vector<Fe> out;
    out.reserve(ms.size());
    for (const auto& m : ms)
        out.push_back(F.mul(F.mul(fe_pow(F, p.c[0], m.x), fe_pow(F, p.c[1], m.y)), fe_pow(F, p.c[2], m.z)));
    return out;
}

PlaneCurve make_curve(const Field& F, unsigned degree, std::vector<Fe> coeffs) {
    if (degree < 1 || coeffs.size() != monomials(degree).size())
        throw Error(ErrorKind::InvalidArgument, "coefficient count does not match degree");
    for (auto c : coeffs) {
        if (c.code == 0) continue;
        Fe s = F.inv(c);
        for (auto& v : coeffs) v = F.mul(v, s);
        return PlaneCurve{degree, std::move(coeffs)};
    }
    throw Error(ErrorKind::ZeroArgument, "zero form");
}

Fe evaluate(const Field& F, unsigned degree, std::span<const Fe> coeffs, const std::array<Fe, 3>& v) {
    const auto& ms = monomials(degree);
    Fe acc{0};
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (coeffs[i].code == 0) continue;
        Fe t = F.mul(F.mul(fe_pow(F, v[0], ms[i].x), fe_pow(F, v[1], ms[i].y)), fe_pow(F, v[2], ms[i].z));
        acc = F.add(acc, F.mul(coeffs[i], t));
    }
    return acc;
}

Fe evaluate(const Field& F, const PlaneCurve& C, const ProjPoint& p) {
    return evaluate(F, C.degree, C.coeffs, p.c);
}

std::array<Fe, 3> gradient(const Field& F, unsigned degree, std::span<const Fe> coeffs, const std::array<Fe, 3>& v) {
    const auto& ms = monomials(degree);
    std::array<Fe, 3> g{};
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (coeffs[i].code == 0) continue;
        const unsigned e[3] = {ms[i].x, ms[i].y, ms[i].z};
        for (int k = 0; k < 3; ++k) {
            if (e[k] == 0) continue;
            Fe t = F.mul(coeffs[i], F.from_int(e[k]));
            for (int j = 0; j < 3; ++j) t = F.mul(t, fe_pow(F, v[j], e[j] - (j == k ? 1 : 0)));
            g[k] = F.add(g[k], t);
        }
    }
    return g;
}

Fe det3(const Field& F, const Mat3& m) {
    auto t = [&](int a, int b, int c) { return F.mul(F.mul(m[a], m[b]), m[c]); };
    Fe pos = F.add(F.add(t(0, 4, 8), t(1, 5, 6)), t(2, 3, 7));
    Fe neg = F.add(F.add(t(2, 4, 6), t(0, 5, 7)), t(1, 3, 8));
    return F.sub(pos, neg);
}

Mat3 adjugate(const Field& F, const Mat3& m) {
    auto c = [&](int a, int b, int x, int y) { return F.sub(F.mul(m[a], m[b]), F.mul(m[x], m[y])); };
    return {c(4, 8, 5, 7), c(2, 7, 1, 8), c(1, 5, 2, 4),
            c(5, 6, 3, 8), c(0, 8, 2, 6), c(2, 3, 0, 5),
            c(3, 7, 4, 6), c(1, 6, 0, 7), c(0, 4, 1, 3)};
}

Mat3 mat_mul(const Field& F, const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[3 * i + j] = F.add(r[3 * i + j], F.mul(a[3 * i + k], b[3 * k + j]));
    return r;
}

ProjTransform make_transform(const Field& F, const Mat3& m) {
    if (det3(F, m).code == 0) throw Error(ErrorKind::InvalidArgument, "singular matrix");
    for (auto c : m) {
        if (c.code == 0) continue;
        Fe s = F.inv(c);
        ProjTransform g;
        for (int i = 0; i < 9; ++i) g.m[i] = F.mul(m[i], s);
        return g;
    }
    throw Error(ErrorKind::InvalidArgument, "zero matrix");
}

ProjTransform identity_transform() {
    ProjTransform g;
    g.m[0] = g.m[4] = g.m[8] = Fe{1};
    return g;
}

ProjTransform compose(const Field& F, const ProjTransform& g, const ProjTransform& h) {
    return make_transform(F, mat_mul(F, g.m, h.m));
}

ProjTransform inverse(const Field& F, const ProjTransform& g) { return make_transform(F, adjugate(F, g.m)); }

ProjPoint apply(const Field& F, const ProjTransform& g, const ProjPoint& p) {
    std::array<Fe, 3> v{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v[i] = F.add(v[i], F.mul(g.m[3 * i + j], p.c[j]));
    return make_point(F, v[0], v[1], v[2]);
}

std::vector<Fe> substitute(const Field& F, unsigned degree, std::span<const Fe> coeffs, const Mat3& M) {
    const auto& ms = monomials(degree);
    std::array<std::vector<Fe>, 3> lin;
    for (int k = 0; k < 3; ++k) lin[k] = {M[3 * k], M[3 * k + 1], M[3 * k + 2]};
    std::vector<Fe> out(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (coeffs[i].code == 0) continue;
        std::vector<Fe> prod{coeffs[i]};
        unsigned d = 0;
        const unsigned e[3] = {ms[i].x, ms[i].y, ms[i].z};
        for (int k = 0; k < 3; ++k)
            for (unsigned r = 0; r < e[k]; ++r) {
                prod = form_mul(F, d, prod, 1, lin[k]);
                ++d;
            }
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = F.add(out[j], prod[j]);
    }
    return out;
}

PlaneCurve apply_curve(const Field& F, const ProjTransform& g, const PlaneCurve& C) {
    return make_curve(F, C.degree, substitute(F, C.degree, C.coeffs, adjugate(F, g.m)));
}

bool collinear(const Field& F, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    Mat3 m{a.c[0], a.c[1], a.c[2], b.c[0], b.c[1], b.c[2], c.c[0], c.c[1], c.c[2]};
    return det3(F, m).code == 0;
}

bool six_on_conic(const Field& F, std::span<const ProjPoint> pts) {
    if (pts.size() != 6) throw Error(ErrorKind::InvalidArgument, "six_on_conic needs 6 points");
    require_distinct(pts);
    Matrix m;
    for (const auto& p : pts) m.push_row(monomial_values(F, 2, p));
    return rank(F, std::move(m)) < 6;
}

bool singular_cubic_through(const Field& F, std::span<const ProjPoint> pts, std::size_t i) {
    if (pts.size() != 8 || i >= 8) throw Error(ErrorKind::InvalidArgument, "need 8 points and index < 8");
    require_distinct(pts);
    Matrix m;
    for (const auto& p : pts) m.push_row(monomial_values(F, 3, p));
    const auto& ms = monomials(3);
    const auto& v = pts[i].c;
    for (int k = 0; k < 3; ++k) {
        std::vector<Fe> row(ms.size());
        for (std::size_t j = 0; j < ms.size(); ++j) {
            const unsigned e[3] = {ms[j].x, ms[j].y, ms[j].z};
            if (e[k] == 0) continue;
            Fe t = F.from_int(e[k]);
            for (int a = 0; a < 3; ++a) t = F.mul(t, fe_pow(F, v[a], e[a] - (a == k ? 1 : 0)));
            row[j] = t;
        }
        m.push_row(row);
    }
    return rank(F, std::move(m)) < 10;
}

std::array<Fe, 3> tangent_cone(const Field& F, const PlaneCurve& C, const ProjPoint& p) {
    std::size_t lead = 0;
    while (p.c[lead].code == 0) ++lead;
    int others[2], n = 0;
    for (int k = 0; k < 3; ++k)
        if (k != static_cast<int>(lead)) others[n++] = k;
    // Columns: p, e_j, e_k.
    Mat3 M{};
    for (int r = 0; r < 3; ++r) M[3 * r] = p.c[r];
    M[3 * others[0] + 1] = Fe{1};
    M[3 * others[1] + 2] = Fe{1};
    auto G = substitute(F, C.degree, C.coeffs, M);
    const unsigned d = C.degree;
    return {G[monomial_index(d, d - 2, 2)], G[monomial_index(d, d - 2, 1)], G[monomial_index(d, d - 2, 0)]};
}

bool node_check(const Field& F, const PlaneCurve& C, const ProjPoint& p) {
    if (C.degree < 2) throw Error(ErrorKind::InvalidArgument, "node_check needs degree >= 2");
    if (evaluate(F, C, p).code != 0) throw Error(ErrorKind::PointNotOnCurve, "point is not on the curve");
    auto g = gradient(F, C.degree, C.coeffs, p.c);
    if (g[0].code || g[1].code || g[2].code) return false;
    auto [a, b, c] = tangent_cone(F, C, p);
    if (F.p() == 2) return b.code != 0;
    Fe disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), F.mul(a, c)));
    return disc.code != 0;
}

}  // namespace cremona
