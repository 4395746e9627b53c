#include "cremona/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "cremona/census.hpp"

namespace cremona {

namespace {

constexpr std::size_t kDumpLimit = 10;

void record(SuiteReport& r, const std::string& what) {
    ++r.violations;
    if (r.dump.size() < kDumpLimit) r.dump.push_back(what);
}

std::string codes(const std::vector<Fe>& xs) {
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i].code;
    return s.str();
}

// Distinct nonzero elements; when `close` is set the last one makes the product 1.
std::optional<std::vector<Fe>> draw_tuple(const Field& F, std::mt19937_64& rng, std::size_t n, bool close) {
    std::uniform_int_distribution<std::uint32_t> pick(1, F.size() - 1);
    std::vector<Fe> xs;
    Fe prod = F.one();
    while (xs.size() + (close ? 1 : 0) < n) {
        Fe x{pick(rng)};
        if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
        xs.push_back(x);
        prod = F.mul(prod, x);
    }
    if (close) {
        Fe last = F.inv(prod);
        if (std::find(xs.begin(), xs.end(), last) != xs.end()) return std::nullopt;
        xs.push_back(last);
    }
    return xs;
}

Fe product(const Field& F, const std::vector<Fe>& xs) {
    Fe p = F.one();
    for (auto x : xs) p = F.mul(p, x);
    return p;
}

// Smallest element of each Galois orbit of size 8.
std::vector<Fe> orbit_minima(const Field& F) {
    std::vector<Fe> out;
    for (std::uint32_t c = 1; c < F.size(); ++c) {
        Fe a{c};
        if (F.in_subfield(a, 4)) continue;
        auto orb = F.galois_orbit(a);
        if (*std::min_element(orb.begin(), orb.end()) == a) out.push_back(a);
    }
    return out;
}

}  // namespace

SuiteReport verify_produit(unsigned q, std::uint64_t samples, std::uint64_t seed) {
    SuiteReport r{"produit", 0, 0, {}};
    const Field F(q, 8);
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uniform_int_distribution<std::uint32_t> c0pick(1, q - 1);
        const auto nf = make_nodal_nf(F, Fe{c0pick(rng)});
        const bool close = (s & 1) == 0;
        const std::size_t n = (s & 2) ? 6 : 3;
        auto xs = draw_tuple(F, rng, n, close);
        if (!xs) {
            --s;
            continue;
        }
        std::vector<ProjPoint> pts;
        for (auto a : *xs) pts.push_back(param_point(F, nf, a));
        const bool unit = product(F, *xs) == F.one();
        const bool incident = n == 3 ? collinear(F, pts[0], pts[1], pts[2]) : six_on_conic(F, pts);
        ++r.checks;
        if (incident != unit)
            record(r, (n == 3 ? "collinear " : "conic ") + std::to_string(incident) + " product_one " +
                          std::to_string(unit) + " c0 " + std::to_string(nf.c0.code) + " a " + codes(*xs));
    }
    return r;
}

SuiteReport verify_beta_twist(unsigned q) {
    SuiteReport r{"beta-twist", 0, 0, {}};
    const Field F(q, 8);
    const auto excl = beta_exclusions(F);
    std::vector<Fe> betas;
    for (std::uint32_t c = 1; c < F.size(); ++c) {
        Fe x{c};
        if (F.in_subfield(x, 4) && !std::binary_search(excl.begin(), excl.end(), x)) betas.push_back(x);
    }
    const auto seeds = orbit_minima(F);
    for (std::uint32_t c0 = 1; c0 < q; ++c0) {
        const auto nf = make_nodal_nf(F, Fe{c0});
        for (Fe a : seeds) {
            if (test_general_position(F, orbit_from_seed(F, nf, a)).ok) continue;
            for (Fe beta : betas) {
                const auto b = beta_twist(F, a, beta);
                ++r.checks;
                if (!test_general_position(F, orbit_from_seed(F, nf, b[0])).ok)
                    record(r, "c0 " + std::to_string(c0) + " a " + std::to_string(a.code) + " beta " +
                                  std::to_string(beta.code));
            }
        }
    }
    return r;
}

SuiteReport verify_same_orbit(unsigned q) {
    SuiteReport r{"same-orbit", 0, 0, {}};
    const Field F(q, 8);
    const auto rep = verify_orbit_lemma(F);
    r.checks = rep.checks;
    r.violations = rep.violations;
    if (rep.violations) r.dump.push_back(std::to_string(rep.violations) + " violations over " +
                                         std::to_string(rep.elements) + " elements");
    return r;
}

SuiteReport verify_lambda_scan(unsigned q, std::uint64_t seeds, std::uint64_t seed) {
    SuiteReport r{"lambda-scan", 0, 0, {}};
    const Field F(q, 8);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(1, F.size() - 1);
    std::uniform_int_distribution<std::uint32_t> c0pick(1, q - 1);
    std::vector<std::pair<Fe, Fe>> draws;  // (a, c0)
    while (draws.size() < seeds) {
        Fe a{pick(rng)};
        Fe c0{c0pick(rng)};
        if (!F.in_subfield(a, 4)) draws.emplace_back(a, c0);
    }
    std::vector<std::vector<Fe>> bad(draws.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(draws.size()); ++i)
        bad[i] = lambda_scan(F, make_nodal_nf(F, draws[i].second), draws[i].first);
    for (std::size_t i = 0; i < draws.size(); ++i) {
        // A seed with an empty bad set is still a passing check.
        ++r.checks;
        if (bad[i].size() > 6)
            record(r, "c0 " + std::to_string(draws[i].second.code) + " a " + std::to_string(draws[i].first.code) +
                          " has " + std::to_string(bad[i].size()) + " bad lambdas");
        for (Fe lambda : bad[i])
            if (F.pow(lambda, 6) != F.one())
                record(r, "c0 " + std::to_string(draws[i].second.code) + " a " + std::to_string(draws[i].first.code) +
                              " lambda " + std::to_string(lambda.code));
    }
    return r;
}

SuiteReport verify_mq_identity(std::uint64_t q_max) {
    SuiteReport r{"mq-identity", 0, 0, {}};
    for (std::uint64_t q = 2; q <= q_max; ++q) {
        if (!is_prime(q)) continue;
        const auto m = mq_identity(q);
        ++r.checks;
        if (!m.agrees) {
            std::ostringstream s;
            s << "q " << q << " closed " << m.closed_form << " product " << m.product;
            record(r, s.str());
        }
    }
    if (pgl3_order(2) != 168) record(r, "|PGL3(F2)| = " + std::to_string(pgl3_order(2)));
    ++r.checks;
    return r;
}

}  // namespace cremona
