#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cremona {

struct SuiteReport {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> dump;  // first few violations, human readable

    bool ok() const { return violations == 0 && checks > 0; }
};

/// Param points of distinct nonzero a_i on xyz = c0 x^3 - c0 z^3 over F_{q^8}:
/// three collinear iff a1 a2 a3 = 1, six on a conic iff a1...a6 = 1.
/// Half the tuples are forced to have product 1 so both directions get exercised.
SuiteReport verify_produit(unsigned q, std::uint64_t samples, std::uint64_t seed = 1);

/// For every nodal orbit not in general position and every beta in F_{q^4}^* outside
/// {x^6 = 1, x^2 in F_q}, the beta-twisted orbit is in general position.
SuiteReport verify_beta_twist(unsigned q);

/// x^{q^i}/x in F_{q^4}^* forces x^{q^i} = x (q = 2: all of F_{q^8} minus F_{q^4}; else generators).
SuiteReport verify_same_orbit(unsigned q);

/// Every lambda in F_q^* spoiling general position of the orbit of lambda a satisfies lambda^6 = 1.
SuiteReport verify_lambda_scan(unsigned q, std::uint64_t seeds, std::uint64_t seed = 1);

/// Closed form of M_q against the counting product for all primes q <= q_max.
SuiteReport verify_mq_identity(std::uint64_t q_max);

}  // namespace cremona
