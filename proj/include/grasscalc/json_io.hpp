#pragma once

#include <json.hpp>

#include "grasscalc/diophantine.hpp"
#include "grasscalc/lefschetz.hpp"
#include "grasscalc/map_analysis.hpp"
#include "grasscalc/ring.hpp"

namespace grasscalc {

using nlohmann::json;

// Exact integers and rationals are serialized as decimal strings so that
// no value is ever squeezed through a double.
json to_json(const mpz_class& v);
json to_json(const mpq_class& q); // {"num": "...", "den": "..."}
mpz_class mpz_from_json(const json& j);
mpq_class mpq_from_json(const json& j);

json to_json(const Partition& nu); // array of parts

/// {"grade": r, "cohomology_degree": 2r or 4r,
///  "terms": [{"partition": [...], "numerator": "...", "denominator": "..."}]}
json to_json(const CohElement& e);
CohElement coh_from_json(const GrassContext& ctx, const json& j);

json to_json(const PairingMatrix& m);
json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

json to_json(const MapAnalysisReport& report);

json to_json(const QuadraticInteger& q);
json to_json(const PellSolution& p);
json to_json(const NormOrbitSet& orbits);
json to_json(const Prop46Result& result);
json to_json(const std::vector<QScanHit>& hits);

} // namespace grasscalc
