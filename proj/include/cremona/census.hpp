#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cremona/general_position.hpp"

namespace cremona {

using Rational = boost::multiprecision::cpp_rational;

/// Images of p_{j+4..j+7}, in order, under the projective frame sending p_j..p_{j+3} to the
/// standard frame, minimized over the 8 cyclic shifts j. Equal keys <=> PGL_3(F_q)-equivalent.
using FrameKey = std::array<std::uint32_t, 12>;

/// Min-canonical form: minimum over PGL_3(F_q) of the sorted serialized image orbit,
/// optionally prefixed by the nodal-member count (-1 when not computed).
struct ClassKey {
    int prefix = -1;
    std::array<std::uint32_t, 24> canonical{};
    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

std::uint64_t degree8_orbit_count(std::uint64_t q);
std::uint64_t pgl3_order(std::uint64_t q);

/// Serial enumeration of degree-8 orbits by lexicographically minimal seed.
void enumerate_orbits(const Field& F, const std::function<void(const GaloisOrbit8&)>& visit);

/// PGL_3(F_q) in normalized form, q = F.p().
std::vector<ProjTransform> pgl3_elements(const Field& F);

std::array<std::uint32_t, 24> serialize_sorted(const std::array<ProjPoint, 8>& pts);
ClassKey canonical_class(const Field& F, const std::vector<ProjTransform>& group, const GaloisOrbit8& orbit,
                         bool nodal_prefix = false);

/// Serial reference census: full general-position reports and min-canonical keys.
struct ReferenceCensus {
    std::uint64_t orbits = 0;
    std::uint64_t general = 0;
    std::map<ClassKey, GaloisOrbit8> classes;  // representative = first orbit met
};
ReferenceCensus reference_census(const Field& F);

namespace kernel {

/// True when p has a Frobenius orbit of size 8 and is its lexicographic minimum.
bool is_seed(const Field& F, const ProjPoint& p);
/// Same verdict as test_general_position(...).ok using the cyclic symmetry of the orbit.
bool general_position_fast(const Field& F, const GaloisOrbit8& orbit);
FrameKey frame_key(const Field& F, const GaloisOrbit8& orbit);

struct RangeResult {
    std::uint64_t orbits = 0;
    std::uint64_t general = 0;
    std::map<FrameKey, ProjPoint> classes;  // key -> minimal seed
    void merge(const RangeResult& other);
};

/// Scan point indices [lo, hi) with OpenMP; result is independent of the thread count.
RangeResult scan_range(const Field& F, std::uint64_t lo, std::uint64_t hi, int threads);

}  // namespace kernel

enum class CensusMode { Exact, Sampled };

struct CensusOptions {
    unsigned q = 2;
    CensusMode mode = CensusMode::Exact;
    int threads = 1;
    std::string checkpoint_path;  // empty: no checkpointing
    std::uint64_t batch_size = 1u << 22;  // point indices per checkpoint batch
    std::uint64_t sample_size = 20000;
    std::uint64_t seed = 1;
    double time_budget_s = 0;  // 0: unlimited
    bool nodal_prefix = false;
    bool canonical_keys = true;  // compute min-canonical keys of representatives
};

struct ClassRecord {
    FrameKey key{};
    GaloisOrbit8 representative;  // orbit of the minimal seed
    std::optional<ClassKey> canonical;
    bool nodal = false;  // contains an orbit built from a nodal normal form
};

struct CensusResult {
    unsigned q = 0;
    CensusMode mode = CensusMode::Exact;
    Poly modulus;
    std::uint64_t total_degree8_orbits = 0;
    std::uint64_t orbits_examined = 0;
    std::uint64_t general_position_count = 0;
    std::uint64_t pgl3_class_count = 0;
    std::uint64_t nodal_class_count = 0;
    Rational mq_bound;
    std::uint64_t mq_ceil = 0;
    bool bound_satisfied = false;
    bool budget_exceeded = false;
    double elapsed_ms = 0;
    std::string checkpoint_path;
    std::uint64_t checkpoint_batches = 0;
    std::uint64_t resumed_batches = 0;
    std::vector<ClassRecord> classes;  // sorted by key
};

CensusResult run_census(const CensusOptions& opt);

/// Frame keys of all general-position orbits built from nodal normal forms.
std::vector<FrameKey> nodal_frame_keys(const Field& F);

Rational mq_bound(std::uint64_t q);
std::uint64_t ceil_rational(const Rational& r);

struct MqIdentity {
    std::uint64_t q = 0;
    bool three_divides = false;
    Rational closed_form;  // with the q = 2, 3 overrides
    Rational product;       // N1 N2 N3 / (12 |PGL_3|) as used for this q
    Rational coarse;        // N2 with the division by 3 kept, N3 = (9/10)(q^6-1)/8
    Rational refined;       // N2 without the division by 3
    bool agrees = false;
};
MqIdentity mq_identity(std::uint64_t q);

struct OrbitLemmaReport {
    std::uint64_t elements = 0;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
};
/// For eligible x (q = 2: every x outside F_{q^4}; otherwise generators of F_{q^8}^*) and
/// i in 1..7: x^{q^i}/x in F_{q^4}^* implies x^{q^i} = x.
OrbitLemmaReport verify_orbit_lemma(const Field& F);

}  // namespace cremona
