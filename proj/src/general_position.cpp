#include "cremona/general_position.hpp"

#include <algorithm>

namespace cremona {

std::array<ProjPoint, 8> GaloisOrbit8::sorted() const {
    auto s = points;
    std::sort(s.begin(), s.end());
    return s;
}

std::optional<GaloisOrbit8> orbit_from_point(const Field& F, const ProjPoint& pt) {
    if (F.n() != 8) throw Error(ErrorKind::InvalidArgument, "degree-8 field required");
    std::array<ProjPoint, 8> pts;
    pts[0] = pt;
    for (unsigned i = 1; i < 8; ++i) {
        pts[i] = frobenius(F, pts[i - 1]);
        if (pts[i] == pt) return std::nullopt;
    }
    auto it = std::min_element(pts.begin(), pts.end());
    std::rotate(pts.begin(), it, pts.end());
    return GaloisOrbit8{pts};
}

GeneralPositionReport test_general_position(const Field& F, std::span<const ProjPoint> pts) {
    if (pts.size() != 8) throw Error(ErrorKind::InvalidArgument, "expected 8 points");
    GeneralPositionReport r;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = j + 1; k < 8; ++k)
                if (collinear(F, pts[i], pts[j], pts[k])) r.failed_lines.push_back({i, j, k});
    if (!r.failed_lines.empty()) {
        r.ok = false;
        return r;
    }
    // Sextuples are complements of pairs.
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            std::array<ProjPoint, 6> six;
            std::array<int, 6> idx;
            int n = 0;
            for (int k = 0; k < 8; ++k)
                if (k != i && k != j) idx[n] = k, six[n++] = pts[k];
            if (six_on_conic(F, six)) r.failed_conics.push_back(idx);
        }
    if (!r.failed_conics.empty()) {
        r.ok = false;
        return r;
    }
    for (int i = 0; i < 8; ++i)
        if (singular_cubic_through(F, pts, i)) r.failed_cubics.push_back(i);
    r.ok = r.failed_cubics.empty();
    return r;
}

GeneralPositionReport test_general_position(const Field& F, const GaloisOrbit8& orbit) {
    return test_general_position(F, std::span<const ProjPoint>(orbit.points));
}

GaloisOrbit8 orbit_from_seed(const Field& F, const NodalCubicNF& nf, Fe a) {
    if (F.galois_orbit(a).size() != 8) throw Error(ErrorKind::ShortOrbit, "parameter lies in F_{q^4}");
    auto orbit = orbit_from_point(F, param_point(F, nf, a));
    if (!orbit) throw Error(ErrorKind::ShortOrbit, "point orbit is short");
    auto s = orbit->sorted();
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error(ErrorKind::Collision, "param points coincide");
    return *orbit;
}

std::array<Fe, 4> pair_products(const Field& F, Fe a) {
    std::array<Fe, 4> pi;
    for (unsigned i = 0; i < 4; ++i) pi[i] = F.mul(F.frobenius(a, i), F.frobenius(a, i + 4));
    return pi;
}

bool pair_products_consistent(const Field& F, Fe a) {
    auto pi = pair_products(F, a);
    for (auto v : pi)
        if (v != pi[0]) return false;
    return F.pow(pi[0], 3) == F.one() && F.in_prime_field(pi[0]);
}

std::vector<Fe> lambda_scan(const Field& F, const NodalCubicNF& nf, Fe a) {
    std::vector<Fe> bad;
    for (std::uint32_t c = 1; c < F.p(); ++c) {
        Fe lambda{c};
        auto orbit = orbit_from_seed(F, nf, F.mul(lambda, a));
        if (!test_general_position(F, orbit).ok) bad.push_back(lambda);
    }
    return bad;
}

std::array<Fe, 8> beta_twist(const Field& F, Fe a, Fe beta) {
    if (beta.code == 0) throw Error(ErrorKind::ZeroArgument, "beta must be nonzero");
    if (!F.in_subfield(beta, 4)) throw Error(ErrorKind::InvalidArgument, "beta must lie in F_{q^4}");
    if (F.galois_orbit(a).size() != 8) throw Error(ErrorKind::ShortOrbit, "a lies in F_{q^4}");
    std::array<Fe, 8> b;
    for (unsigned i = 0; i < 8; ++i) b[i] = F.mul(F.frobenius(beta, i), F.frobenius(a, i));
    for (unsigned i = 0; i < 8; ++i)
        if (b[(i + 1) % 8] != F.frobenius(b[i])) throw Error(ErrorKind::InvalidArgument, "twist is not Frobenius-coherent");
    if (F.galois_orbit(b[0]).size() != 8) throw Error(ErrorKind::ShortOrbit, "twisted orbit collapsed");
    return b;
}

std::vector<Fe> beta_exclusions(const Field& F) {
    std::vector<Fe> out;
    for (std::uint32_t c = 1; c < F.size(); ++c) {
        Fe x{c};
        if (F.in_subfield(x, 4) && F.pow(x, 6) == F.one() && F.in_prime_field(F.mul(x, x))) out.push_back(x);
    }
    return out;
}

}  // namespace cremona
