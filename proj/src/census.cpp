#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "cremona/census.hpp"

namespace cremona {

namespace {

using json = nlohmann::json;
constexpr int kCheckpointVersion = 1;

class CheckpointWriter {
public:
    explicit CheckpointWriter(const std::string& path) {
        fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
        if (fd_ < 0) throw Error(ErrorKind::CheckpointCorrupt, "cannot open checkpoint " + path);
    }
    ~CheckpointWriter() {
        if (fd_ >= 0) ::close(fd_);
    }
    CheckpointWriter(const CheckpointWriter&) = delete;
    CheckpointWriter& operator=(const CheckpointWriter&) = delete;

    void append(const json& line) {
        std::string s = line.dump() + "\n";
        const char* p = s.data();
        std::size_t left = s.size();
        while (left) {
            ssize_t n = ::write(fd_, p, left);
            if (n <= 0) throw Error(ErrorKind::CheckpointCorrupt, "checkpoint write failed");
            p += n;
            left -= static_cast<std::size_t>(n);
        }
        if (::fsync(fd_) != 0) throw Error(ErrorKind::CheckpointCorrupt, "checkpoint fsync failed");
    }

private:
    int fd_ = -1;
};

json checkpoint_header(const Field& F, std::uint64_t batch, std::uint64_t total) {
    return json{{"format", "cremona-census"}, {"version", kCheckpointVersion}, {"q", F.p()},
                {"modulus", F.modulus()}, {"batch_size", batch}, {"points", total}};
}

json batch_line(std::uint64_t lo, std::uint64_t hi, const kernel::RangeResult& r) {
    json classes = json::array();
    for (const auto& [key, seed] : r.classes) {
        json row = json::array();
        for (auto k : key) row.push_back(k);
        for (auto c : seed.c) row.push_back(c.code);
        classes.push_back(std::move(row));
    }
    return json{{"range", {lo, hi}}, {"orbits", r.orbits}, {"general", r.general}, {"classes", std::move(classes)}};
}

kernel::RangeResult parse_batch(const Field& F, const json& j, std::uint64_t& lo, std::uint64_t& hi) {
    kernel::RangeResult r;
    lo = j.at("range").at(0).get<std::uint64_t>();
    hi = j.at("range").at(1).get<std::uint64_t>();
    r.orbits = j.at("orbits").get<std::uint64_t>();
    r.general = j.at("general").get<std::uint64_t>();
    for (const auto& row : j.at("classes")) {
        if (row.size() != 15) throw Error(ErrorKind::CheckpointCorrupt, "bad class row");
        FrameKey key;
        for (int i = 0; i < 12; ++i) key[i] = row[i].get<std::uint32_t>();
        ProjPoint seed{{F.from_code(row[12].get<std::uint64_t>()), F.from_code(row[13].get<std::uint64_t>()),
                        F.from_code(row[14].get<std::uint64_t>())}};
        r.classes.emplace(key, seed);
    }
    return r;
}

// Reads completed batches; returns the first unscanned index.
std::uint64_t load_checkpoint(const Field& F, const std::string& path, std::uint64_t batch, std::uint64_t total,
                              kernel::RangeResult& acc, std::uint64_t& batches) {
    std::ifstream in(path);
    if (!in) return 0;
    std::string line;
    if (!std::getline(in, line)) return 0;
    try {
        if (json::parse(line) != checkpoint_header(F, batch, total))
            throw Error(ErrorKind::CheckpointCorrupt, "checkpoint header does not match this run");
        std::uint64_t next = 0;
        while (std::getline(in, line)) {
            std::uint64_t lo = 0, hi = 0;
            auto r = parse_batch(F, json::parse(line), lo, hi);
            if (lo != next || hi != std::min(total, lo + batch))
                throw Error(ErrorKind::CheckpointCorrupt, "non-contiguous checkpoint range");
            acc.merge(r);
            next = hi;
            ++batches;
        }
        return next;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::CheckpointCorrupt, std::string("unreadable checkpoint: ") + e.what());
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GaloisOrbit8 orbit_of_seed(const Field& F, const ProjPoint& seed) {
    GaloisOrbit8 o;
    o.points[0] = seed;
    for (int i = 1; i < 8; ++i) o.points[i] = frobenius(F, o.points[i - 1]);
    return o;
}

}  // namespace

std::vector<FrameKey> nodal_frame_keys(const Field& F) {
    std::set<FrameKey> keys;
    for (std::uint32_t c0 = 1; c0 < F.p(); ++c0) {
        auto nf = make_nodal_nf(F, Fe{c0});
        for (std::uint32_t c = 1; c < F.size(); ++c) {
            if (F.in_subfield(Fe{c}, 4)) continue;
            auto orbit = orbit_from_seed(F, nf, Fe{c});
            if (kernel::general_position_fast(F, orbit)) keys.insert(kernel::frame_key(F, orbit));
        }
    }
    return {keys.begin(), keys.end()};
}

CensusResult run_census(const CensusOptions& opt) {
    if (opt.q != 2 && opt.q != 3) throw Error(ErrorKind::InvalidArgument, "census supports q = 2 or 3");
    if (opt.threads < 1) throw Error(ErrorKind::InvalidArgument, "threads must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const Field F(opt.q, 8);
    const std::uint64_t total = plane_point_count(F);

    CensusResult res;
    res.q = opt.q;
    res.mode = opt.mode;
    res.modulus = F.modulus();
    res.total_degree8_orbits = degree8_orbit_count(opt.q);
    res.checkpoint_path = opt.checkpoint_path;

    kernel::RangeResult acc;
    if (opt.mode == CensusMode::Exact) {
        const std::uint64_t batch = std::max<std::uint64_t>(1, opt.batch_size);
        std::uint64_t next = 0;
        std::unique_ptr<CheckpointWriter> writer;
        if (!opt.checkpoint_path.empty()) {
            next = load_checkpoint(F, opt.checkpoint_path, batch, total, acc, res.resumed_batches);
            writer = std::make_unique<CheckpointWriter>(opt.checkpoint_path);
            if (next == 0 && res.resumed_batches == 0) {
                std::ifstream probe(opt.checkpoint_path);
                if (probe.peek() == std::ifstream::traits_type::eof()) writer->append(checkpoint_header(F, batch, total));
            }
            res.checkpoint_batches = res.resumed_batches;
        }
        while (next < total) {
            if (opt.time_budget_s > 0 && seconds_since(t0) > opt.time_budget_s)
                throw Error(ErrorKind::ResourceBudgetExceeded, "exact census stopped at point index " + std::to_string(next));
            const std::uint64_t hi = std::min(total, next + batch);
            auto r = kernel::scan_range(F, next, hi, opt.threads);
            if (writer) {
                writer->append(batch_line(next, hi, r));
                ++res.checkpoint_batches;
            }
            acc.merge(r);
            next = hi;
        }
    } else {
        constexpr std::uint64_t chunk = 1024;
        for (std::uint64_t start = 0; start < opt.sample_size; start += chunk) {
            if (opt.time_budget_s > 0 && seconds_since(t0) > opt.time_budget_s) {
                res.budget_exceeded = true;
                break;
            }
            const auto stop = static_cast<std::int64_t>(std::min(opt.sample_size, start + chunk));
#pragma omp parallel num_threads(opt.threads)
            {
                kernel::RangeResult local;
#pragma omp for schedule(static) nowait
                for (std::int64_t i = static_cast<std::int64_t>(start); i < stop; ++i) {
                    std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i));
                    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
                    std::optional<GaloisOrbit8> orbit;
                    while (!orbit) orbit = orbit_from_point(F, plane_point(F, pick(rng)));
                    ++local.orbits;
                    if (!kernel::general_position_fast(F, *orbit)) continue;
                    ++local.general;
                    auto key = kernel::frame_key(F, *orbit);
                    auto [it, inserted] = local.classes.emplace(key, orbit->seed());
                    if (!inserted && orbit->seed() < it->second) it->second = orbit->seed();
                }
#pragma omp critical(cremona_sample_merge)
                acc.merge(local);
            }
        }
    }

    res.orbits_examined = acc.orbits;
    res.general_position_count = acc.general;
    res.pgl3_class_count = acc.classes.size();

    const auto nodal = nodal_frame_keys(F);
    std::vector<ProjTransform> group;
    if (opt.canonical_keys) group = pgl3_elements(F);
    for (const auto& [key, seed] : acc.classes) {
        ClassRecord rec;
        rec.key = key;
        rec.representative = orbit_of_seed(F, seed);
        rec.nodal = std::binary_search(nodal.begin(), nodal.end(), key);
        if (opt.canonical_keys) rec.canonical = canonical_class(F, group, rec.representative, opt.nodal_prefix);
        res.nodal_class_count += rec.nodal;
        res.classes.push_back(std::move(rec));
    }

    res.mq_bound = mq_bound(opt.q);
    res.mq_ceil = ceil_rational(res.mq_bound);
    res.bound_satisfied = res.pgl3_class_count >= res.mq_ceil;
    res.elapsed_ms = seconds_since(t0) * 1000.0;
    return res;
}

Rational mq_bound(std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
    if (q == 2) return Rational(2);
    if (q == 3) return Rational(12);
    Rational q6 = boost::multiprecision::pow(boost::multiprecision::cpp_int(q), 6);
    return (q6 - 1) / 640;
}

std::uint64_t ceil_rational(const Rational& r) {
    const boost::multiprecision::cpp_int n = boost::multiprecision::numerator(r);
    const boost::multiprecision::cpp_int d = boost::multiprecision::denominator(r);
    boost::multiprecision::cpp_int c = n / d;
    if (c * d < n) c += 1;
    return c.convert_to<std::uint64_t>();
}

MqIdentity mq_identity(std::uint64_t q) {
    using boost::multiprecision::cpp_int;
    MqIdentity m;
    m.q = q;
    m.three_divides = (q - 1) % 3 == 0;
    const cpp_int Q(q);
    const Rational N1 = Rational((Q * Q + Q + 1) * Q * (Q + 1)) / 2;
    const Rational N2_refined = Rational((Q - 1) * (Q - 1) * Q * Q);
    const Rational N2_coarse = N2_refined / 3;
    const Rational q6m1 = Rational(boost::multiprecision::pow(Q, 6) - 1);
    const Rational pgl = Rational(Q * Q * Q * (Q * Q * Q - 1) * (Q * Q - 1));
    auto product = [&](const Rational& n2, const Rational& n3) { return N1 * n2 * n3 / (12 * pgl); };
    const Rational N3 = Rational(9, 10) * q6m1 / 8;
    m.closed_form = mq_bound(q);
    m.coarse = product(N2_coarse, N3);
    m.refined = product(N2_refined, N3);
    if (q == 2) {
        // All 240 elements outside F_16 with ratio 9/10: N3 = 27.
        m.product = product(N2_refined, Rational(9, 10) * 240 / 8);
        m.agrees = m.product == Rational(9, 8) && ceil_rational(m.product) == 2 && m.closed_form == 2;
    } else if (q == 3) {
        m.product = product(N2_refined, Rational(9, 10) * Rational(euler_phi(6560)) / 8);
        m.agrees = m.product == m.closed_form;
    } else {
        m.product = m.three_divides ? m.coarse : m.refined;
        m.agrees = m.coarse == m.closed_form &&
                   (m.three_divides ? m.product == m.closed_form : m.refined == 3 * m.closed_form);
    }
    return m;
}

OrbitLemmaReport verify_orbit_lemma(const Field& F) {
    if (F.n() != 8) throw Error(ErrorKind::InvalidArgument, "degree-8 field required");
    OrbitLemmaReport r;
    const std::uint64_t full = F.size() - 1;
    for (std::uint32_t c = 1; c < F.size(); ++c) {
        Fe x{c};
        bool eligible = F.p() == 2 ? !F.in_subfield(x, 4) : F.element_order(x) == full;
        if (!eligible) continue;
        ++r.elements;
        for (unsigned i = 1; i <= 7; ++i) {
            Fe xi = F.frobenius(x, i);
            ++r.checks;
            if (F.in_subfield(F.div(xi, x), 4) && xi != x) ++r.violations;
        }
    }
    return r;
}

}  // namespace cremona
