#pragma once

#include <nlohmann/json.hpp>

#include "cremona/census.hpp"
#include "cremona/lattice.hpp"
#include "cremona/sarkisov.hpp"

namespace cremona {

using json = nlohmann::json;

json to_json(const Poly& modulus);
json to_json(const ProjPoint& p);
json to_json(const GaloisOrbit8& orbit);
json to_json(const GeneralPositionReport& r);
json to_json(const Rational& r);  // "p/q" or "p"
json to_json(const Q& r);
json to_json(const QVec& v);

json to_json(const Lattice& L);
Lattice lattice_from_json(const json& j);
json to_json(const Lattice& L, const Chamber& c, const std::vector<IntVec>& negatives);

/// Census result; elapsed_ms is the only field that depends on the run.
json to_json(const CensusResult& r);
/// One CSV row per class: key, nodal flag, then the 8 points as x:y:z codes.
std::string census_csv(const CensusResult& r);

json to_json(const SquareComplex& X);
SquareComplex complex_from_json(const json& j);

}  // namespace cremona
