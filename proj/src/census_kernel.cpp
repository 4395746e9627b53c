#include <algorithm>

#include "cremona/census.hpp"

namespace cremona::kernel {

namespace {

using Row6 = std::array<Fe, 6>;
using Row10 = std::array<Fe, 10>;

// Triples up to rotation i -> i+1 mod 8, one representative each.
const std::vector<std::array<int, 3>>& triple_classes() {
    static const auto reps = [] {
        std::vector<std::array<int, 3>> out;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                for (int k = j + 1; k < 8; ++k) {
                    std::array<int, 3> t{i, j, k}, best = t;
                    for (int s = 1; s < 8; ++s) {
                        std::array<int, 3> r{(i + s) % 8, (j + s) % 8, (k + s) % 8};
                        std::sort(r.begin(), r.end());
                        best = std::min(best, r);
                    }
                    if (best == t) out.push_back(t);
                }
        return out;
    }();
    return reps;
}

// True when the R x C system (R >= C) has full column rank.
template <std::size_t R, std::size_t C>
bool full_column_rank(const Field& F, std::array<std::array<Fe, C>, R>& m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < C; ++c) {
        std::size_t piv = r;
        while (piv < R && m[piv][c].code == 0) ++piv;
        if (piv == R) return false;
        std::swap(m[piv], m[r]);
        Fe s = F.inv(m[r][c]);
        for (std::size_t i = r + 1; i < R; ++i) {
            if (m[i][c].code == 0) continue;
            Fe f = F.neg(F.mul(m[i][c], s));
            for (std::size_t j = c; j < C; ++j) m[i][j] = F.add(m[i][j], F.mul(f, m[r][j]));
        }
        ++r;
    }
    return true;
}

Row6 quad_values(const Field& F, const ProjPoint& p) {
    auto [x, y, z] = p.c;
    return {F.mul(x, x), F.mul(x, y), F.mul(x, z), F.mul(y, y), F.mul(y, z), F.mul(z, z)};
}

Row10 cubic_values(const Field& F, const Row6& q, const ProjPoint& p) {
    auto [x, y, z] = p.c;
    return {F.mul(q[0], x), F.mul(q[0], y), F.mul(q[0], z), F.mul(q[3], x), F.mul(q[1], z),
            F.mul(q[5], x), F.mul(q[3], y), F.mul(q[3], z), F.mul(q[5], y), F.mul(q[5], z)};
}

std::array<Fe, 3> mat_vec(const Field& F, const Mat3& m, const ProjPoint& p) {
    std::array<Fe, 3> v;
    for (int i = 0; i < 3; ++i)
        v[i] = F.add(F.add(F.mul(m[3 * i], p.c[0]), F.mul(m[3 * i + 1], p.c[1])), F.mul(m[3 * i + 2], p.c[2]));
    return v;
}

}  // namespace

bool is_seed(const Field& F, const ProjPoint& p) {
    ProjPoint f = p;
    for (int k = 1; k < 8; ++k) {
        f = frobenius(F, f);
        if (!(p < f)) return false;
    }
    return true;
}

bool general_position_fast(const Field& F, const GaloisOrbit8& orbit) {
    const auto& P = orbit.points;
    for (const auto& t : triple_classes()) {
        Mat3 m{P[t[0]].c[0], P[t[0]].c[1], P[t[0]].c[2], P[t[1]].c[0], P[t[1]].c[1],
               P[t[1]].c[2], P[t[2]].c[0], P[t[2]].c[1], P[t[2]].c[2]};
        if (det3(F, m).code == 0) return false;
    }
    std::array<Row6, 8> v2;
    for (int i = 0; i < 8; ++i) v2[i] = quad_values(F, P[i]);
    // Pair complements up to rotation: {0, k}, k = 1..4.
    for (int k = 1; k <= 4; ++k) {
        std::array<Row6, 6> m;
        int n = 0;
        for (int i = 1; i < 8; ++i)
            if (i != k) m[n++] = v2[i];
        if (!full_column_rank(F, m)) return false;
    }
    // Singular cubic at p_0 through all eight points.
    std::array<Row10, 11> m;
    for (int i = 0; i < 8; ++i) m[i] = cubic_values(F, v2[i], P[i]);
    const Fe two = F.from_int(2), three = F.from_int(3);
    const Fe xx = v2[0][0], xy = v2[0][1], xz = v2[0][2], yy = v2[0][3], yz = v2[0][4], zz = v2[0][5];
    const Fe o{0};
    m[8] = {F.mul(three, xx), F.mul(two, xy), F.mul(two, xz), yy, yz, zz, o, o, o, o};
    m[9] = {o, xx, o, F.mul(two, xy), xz, o, F.mul(three, yy), F.mul(two, yz), zz, o};
    m[10] = {o, o, xx, o, xy, F.mul(two, xz), o, yy, F.mul(two, yz), F.mul(three, zz)};
    return full_column_rank(F, m);
}

FrameKey frame_key(const Field& F, const GaloisOrbit8& orbit) {
    const auto& P = orbit.points;
    FrameKey best{};
    bool first = true;
    for (int j = 0; j < 8; ++j) {
        const ProjPoint &a = P[j], &b = P[(j + 1) % 8], &c = P[(j + 2) % 8], &d = P[(j + 3) % 8];
        Mat3 M{a.c[0], b.c[0], c.c[0], a.c[1], b.c[1], c.c[1], a.c[2], b.c[2], c.c[2]};
        Mat3 adj = adjugate(F, M);
        auto lam = mat_vec(F, adj, d);
        const Fe w[3] = {F.mul(lam[1], lam[2]), F.mul(lam[0], lam[2]), F.mul(lam[0], lam[1])};
        if (w[0].code == 0 || w[1].code == 0 || w[2].code == 0)
            throw Error(ErrorKind::InvalidArgument, "frame points are not in general linear position");
        FrameKey key;
        for (int k = 0; k < 4; ++k) {
            auto v = mat_vec(F, adj, P[(j + 4 + k) % 8]);
            for (int i = 0; i < 3; ++i) v[i] = F.mul(v[i], w[i]);
            ProjPoint img = make_point(F, v[0], v[1], v[2]);
            for (int i = 0; i < 3; ++i) key[3 * k + i] = img.c[i].code;
        }
        if (first || key < best) best = key;
        first = false;
    }
    return best;
}

void RangeResult::merge(const RangeResult& other) {
    orbits += other.orbits;
    general += other.general;
    for (const auto& [key, seed] : other.classes) {
        auto [it, inserted] = classes.emplace(key, seed);
        if (!inserted && seed < it->second) it->second = seed;
    }
}

RangeResult scan_range(const Field& F, std::uint64_t lo, std::uint64_t hi, int threads) {
    RangeResult total;
    const auto begin = static_cast<std::int64_t>(lo), end = static_cast<std::int64_t>(hi);
#pragma omp parallel num_threads(std::max(1, threads))
    {
        RangeResult local;
#pragma omp for schedule(dynamic, 4096) nowait
        for (std::int64_t idx = begin; idx < end; ++idx) {
            ProjPoint p = plane_point(F, static_cast<std::uint64_t>(idx));
            if (!is_seed(F, p)) continue;
            GaloisOrbit8 orbit;
            orbit.points[0] = p;
            for (int i = 1; i < 8; ++i) orbit.points[i] = frobenius(F, orbit.points[i - 1]);
            ++local.orbits;
            if (!general_position_fast(F, orbit)) continue;
            ++local.general;
            auto key = frame_key(F, orbit);
            auto [it, inserted] = local.classes.emplace(key, p);
            if (!inserted && p < it->second) it->second = p;
        }
#pragma omp critical(cremona_scan_merge)
        total.merge(local);
    }
    return total;
}

}  // namespace cremona::kernel
