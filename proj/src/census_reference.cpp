#include <algorithm>

#include "cremona/census.hpp"

namespace cremona {

std::uint64_t degree8_orbit_count(std::uint64_t q) {
    const std::uint64_t q4 = ipow(q, 4), q8 = ipow(q, 8), q16 = ipow(q, 16);
    return ((q16 + q8 + 1) - (q8 + q4 + 1)) / 8;
}

std::uint64_t pgl3_order(std::uint64_t q) { return ipow(q, 3) * (ipow(q, 3) - 1) * (q * q - 1); }

void enumerate_orbits(const Field& F, const std::function<void(const GaloisOrbit8&)>& visit) {
    const std::uint64_t total = plane_point_count(F);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ProjPoint p = plane_point(F, idx);
        auto orbit = orbit_from_point(F, p);
        if (orbit && orbit->seed() == p) visit(*orbit);
    }
}

std::vector<ProjTransform> pgl3_elements(const Field& F) {
    const std::uint32_t q = F.p();
    const std::uint64_t count = ipow(q, 9);
    std::vector<ProjTransform> out;
    for (std::uint64_t c = 0; c < count; ++c) {
        Mat3 m;
        std::uint64_t t = c;
        for (auto& e : m) e = Fe{static_cast<std::uint32_t>(t % q)}, t /= q;
        auto first = std::find_if(m.begin(), m.end(), [](Fe x) { return x.code != 0; });
        if (first == m.end() || first->code != 1) continue;
        if (det3(F, m).code == 0) continue;
        out.push_back(ProjTransform{m});
    }
    return out;
}

std::array<std::uint32_t, 24> serialize_sorted(const std::array<ProjPoint, 8>& pts) {
    auto s = pts;
    std::sort(s.begin(), s.end());
    std::array<std::uint32_t, 24> out;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 3; ++k) out[3 * i + k] = s[i].c[k].code;
    return out;
}

ClassKey canonical_class(const Field& F, const std::vector<ProjTransform>& group, const GaloisOrbit8& orbit,
                         bool nodal_prefix) {
    ClassKey key;
    key.canonical = serialize_sorted(orbit.points);
    for (const auto& g : group) {
        std::array<ProjPoint, 8> img;
        for (std::size_t i = 0; i < 8; ++i) img[i] = apply(F, g, orbit.points[i]);
        key.canonical = std::min(key.canonical, serialize_sorted(img));
    }
    if (nodal_prefix) key.prefix = count_nodal_members(F, orbit);
    return key;
}

ReferenceCensus reference_census(const Field& F) {
    ReferenceCensus r;
    const auto group = pgl3_elements(F);
    enumerate_orbits(F, [&](const GaloisOrbit8& orbit) {
        ++r.orbits;
        if (!test_general_position(F, orbit).ok) return;
        ++r.general;
        r.classes.emplace(canonical_class(F, group, orbit), orbit);
    });
    return r;
}

}  // namespace cremona
