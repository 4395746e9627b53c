#include "cremona/nodal_cubic.hpp"

#include <map>

#include "cremona/linalg.hpp"

namespace cremona {

namespace {

// Cubic monomial slots in lex order.
enum : std::size_t { X3, X2Y, X2Z, XY2, XYZ, XZ2, Y3, Y2Z, YZ2, Z3 };

std::optional<Fe> cube_root_in_prime_field(const Field& F, Fe x) {
    for (std::uint32_t c = 1; c < F.p(); ++c) {
        Fe r{c};
        if (F.mul(F.mul(r, r), r) == x) return r;
    }
    return std::nullopt;
}

}  // namespace

NodalCubicNF make_nodal_nf(const Field& F, Fe c0) {
    if (c0.code == 0) throw Error(ErrorKind::ZeroArgument, "c0 must be nonzero");
    if (!F.in_prime_field(c0)) throw Error(ErrorKind::InvalidArgument, "c0 must lie in F_q");
    NodalCubicNF nf{c0};
    if (!node_check(F, nf_curve(F, nf), ProjPoint{{Fe{0}, Fe{1}, Fe{0}}}))
        throw Error(ErrorKind::BadPose, "normal form is not nodal at [0:1:0]");
    return nf;
}

PlaneCurve nf_curve(const Field& F, const NodalCubicNF& nf) {
    std::vector<Fe> c(10);
    c[X3] = F.neg(nf.c0);
    c[XYZ] = F.one();
    c[Z3] = nf.c0;
    return make_curve(F, 3, std::move(c));
}

ProjPoint param_point(const Field& F, const NodalCubicNF& nf, Fe a) {
    if (a.code == 0) throw Error(ErrorKind::ZeroArgument, "parameter must be nonzero");
    Fe a3 = F.mul(F.mul(a, a), a);
    Fe y = F.div(F.mul(nf.c0, F.sub(a3, F.one())), a);
    return ProjPoint{{a, y, F.one()}};
}

PlaneCurve line_witness(const Field& F, const NodalCubicNF& nf, Fe a1, Fe a2, Fe a3) {
    if (a1.code == 0 || a2.code == 0 || a3.code == 0) throw Error(ErrorKind::ZeroArgument, "parameters must be nonzero");
    if (F.mul(F.mul(a1, a2), a3) != F.one()) throw Error(ErrorKind::ProductNotOne, "a1 a2 a3 != 1");
    // c0 (x - a1)(x - a2)(x - a3) - P(x, 1) = A x^2 + B x with P(x, 1) = c0 x^3 - c0.
    Fe s1 = F.add(F.add(a1, a2), a3);
    Fe s2 = F.add(F.add(F.mul(a1, a2), F.mul(a1, a3)), F.mul(a2, a3));
    Fe A = F.neg(F.mul(nf.c0, s1));
    Fe B = F.mul(nf.c0, s2);
    // Degree-1 monomials: x, y, z.
    return make_curve(F, 1, {A, F.one(), B});
}

bool is_cube(const Field& F, Fe x) {
    if (x.code == 0) throw Error(ErrorKind::ZeroArgument, "is_cube(0)");
    if (!F.in_prime_field(x)) throw Error(ErrorKind::InvalidArgument, "is_cube expects an element of F_q");
    const std::uint32_t q = F.p();
    if ((q - 1) % 3 != 0) return true;
    return F.pow(x, (q - 1) / 3) == F.one();
}

std::optional<Normalization> normalize(const Field& F, const PlaneCurve& C) {
    if (C.degree != 3) throw Error(ErrorKind::InvalidArgument, "normalize expects a cubic");
    const auto& f = C.coeffs;
    const ProjPoint node{{Fe{0}, Fe{1}, Fe{0}}};
    // Through [0:1:0], singular there, tangent cone beta * xz.
    if (f[Y3].code || f[XY2].code || f[Y2Z].code) throw Error(ErrorKind::BadPose, "not singular at [0:1:0]");
    if (f[X2Y].code || f[YZ2].code || f[XYZ].code == 0) throw Error(ErrorKind::BadPose, "tangent cone is not xz");
    if (!node_check(F, C, node)) throw Error(ErrorKind::BadPose, "[0:1:0] is not a node");
    Fe nb = F.neg(F.inv(f[XYZ]));
    Fe c0 = F.mul(f[X3], nb), c1 = F.mul(f[X2Z], nb), c2 = F.mul(f[XZ2], nb), c3 = F.mul(f[Z3], nb);
    for (Fe c : {c0, c1, c2, c3})
        if (!F.in_prime_field(c)) throw Error(ErrorKind::InvalidArgument, "curve is not defined over F_q");
    if (c0.code == 0 || c3.code == 0) throw Error(ErrorKind::Reducible, "c0 c3 = 0");
    Fe target = F.neg(F.div(c0, c3));
    if (!is_cube(F, target)) return std::nullopt;
    auto a = cube_root_in_prime_field(F, target);
    if (!a) return std::nullopt;
    // Shear y -> y - c1 x - c2 z, then scale (x, y, z) -> (x, a y, z / a).
    Mat3 shear{F.one(), F.zero(), F.zero(), F.neg(c1), F.one(), F.neg(c2), F.zero(), F.zero(), F.one()};
    Mat3 scale{F.one(), F.zero(), F.zero(), F.zero(), *a, F.zero(), F.zero(), F.zero(), F.inv(*a)};
    Normalization out{make_transform(F, mat_mul(F, scale, shear)), NodalCubicNF{c0}};
    return out;
}

int count_nodal_members(const Field& F, const GaloisOrbit8& orbit, unsigned extension_cap) {
    Matrix m;
    for (const auto& p : orbit.points) m.push_row(monomial_values(F, 3, p));
    auto basis = nullspace(F, m);
    if (basis.size() != 2) throw Error(ErrorKind::NotAPencil, "kernel dimension " + std::to_string(basis.size()));

    // Partial derivatives of each basis form as quadratic forms.
    const auto& m3 = monomials(3);
    std::array<std::array<std::vector<Fe>, 3>, 2> grad;
    for (int b = 0; b < 2; ++b)
        for (int k = 0; k < 3; ++k) {
            grad[b][k].assign(6, Fe{0});
            for (std::size_t i = 0; i < m3.size(); ++i) {
                unsigned e[3] = {m3[i].x, m3[i].y, m3[i].z};
                if (e[k] == 0 || basis[b][i].code == 0) continue;
                Fe c = F.mul(basis[b][i], F.from_int(e[k]));
                --e[k];
                auto j = monomial_index(2, e[0], e[1]);
                grad[b][k][j] = F.add(grad[b][k][j], c);
            }
        }

    auto dot = [&](const std::vector<Fe>& c, const std::vector<Fe>& v) {
        Fe s{0};
        for (std::size_t i = 0; i < c.size(); ++i) s = F.add(s, F.mul(c[i], v[i]));
        return s;
    };

    std::map<std::pair<Fe, Fe>, std::vector<ProjPoint>> singular;
    const std::uint64_t total = plane_point_count(F);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ProjPoint x = plane_point(F, idx);
        auto v3 = monomial_values(F, 3, x);
        auto v2 = monomial_values(F, 2, x);
        std::array<std::array<Fe, 4>, 2> row;
        for (int b = 0; b < 2; ++b) {
            row[b][0] = dot(basis[b], v3);
            for (int k = 0; k < 3; ++k) row[b][k + 1] = dot(grad[b][k], v2);
        }
        int lead = -1;
        for (int k = 0; k < 4 && lead < 0; ++k)
            if (row[0][k].code || row[1][k].code) lead = k;
        if (lead < 0) continue;  // singular on every member: not a smooth pencil point
        Fe s = row[1][lead], t = F.neg(row[0][lead]);
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) ok = F.add(F.mul(s, row[0][k]), F.mul(t, row[1][k])).code == 0;
        if (!ok) continue;
        if (s.code) {
            t = F.div(t, s);
            s = F.one();
        } else {
            t = F.one();
        }
        singular[{s, t}].push_back(x);
    }

    int count = 0;
    for (const auto& [st, pts] : singular) {
        if (pts.size() != 1) continue;
        unsigned m_deg = 0;
        for (unsigned d = 1; d <= F.n(); ++d)
            if (F.n() % d == 0 && F.in_subfield(st.first, d) && F.in_subfield(st.second, d)) {
                m_deg = d;
                break;
            }
        if (m_deg == 0 || m_deg > extension_cap) continue;
        std::vector<Fe> coeffs(10);
        for (std::size_t i = 0; i < 10; ++i)
            coeffs[i] = F.add(F.mul(st.first, basis[0][i]), F.mul(st.second, basis[1][i]));
        if (node_check(F, make_curve(F, 3, std::move(coeffs)), pts[0])) ++count;
    }
    return count;
}

}  // namespace cremona
