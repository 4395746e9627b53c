#pragma once

#include <array>
#include <span>
#include <vector>

#include "cremona/nodal_cubic.hpp"
#include "cremona/orbit.hpp"

namespace cremona {

struct GeneralPositionReport {
    bool ok = true;
    std::vector<std::array<int, 3>> failed_lines;
    std::vector<std::array<int, 6>> failed_conics;
    std::vector<int> failed_cubics;
};

/// Lines, then conics, then singular cubics; stops after the first tier that fails and lists
/// every failure in that tier. Indices refer to the order of `pts`.
GeneralPositionReport test_general_position(const Field& F, std::span<const ProjPoint> pts);
GeneralPositionReport test_general_position(const Field& F, const GaloisOrbit8& orbit);

/// Orbit of param_point(nf, a). Throws ShortOrbit when a lies in F_{q^4}.
GaloisOrbit8 orbit_from_seed(const Field& F, const NodalCubicNF& nf, Fe a);

/// a_i = a^{q^i}; pi_i = a_i a_{i+4} for i = 0..3 (pairs swapped by x -> x^{q^4}).
std::array<Fe, 4> pair_products(const Field& F, Fe a);

/// All pi_i equal, pi^3 = 1 and pi in F_q.
bool pair_products_consistent(const Field& F, Fe a);

/// Every lambda in F_q^* for which the orbit of lambda * a is not in general position.
std::vector<Fe> lambda_scan(const Field& F, const NodalCubicNF& nf, Fe a);

/// b_i = (beta a)^{q^i}, checked against beta^{q^i} a^{q^i}. beta must lie in F_{q^4}^*.
std::array<Fe, 8> beta_twist(const Field& F, Fe a, Fe beta);

/// {x in F_{q^4}^* : x^6 = 1 and x^2 in F_q}.
std::vector<Fe> beta_exclusions(const Field& F);

}  // namespace cremona
