#pragma once

#include <json.hpp>

#include "nsmat/analysis.hpp"
#include "nsmat/exponent.hpp"
#include "nsmat/matrix.hpp"

namespace nsmat {

// Serialized key order is fixed, so identical values always produce
// identical bytes and parse/serialize round-trips are byte-stable.
using Json = nlohmann::ordered_json;

/// {"size": m, "weights": ["p/q", ...], "base": b|null}; weights are
/// listed z_1..z_{m-1}, z_0 (superdiagonal then corner).
Json matrix_to_json(const WeightedCycleMatrix& m);
WeightedCycleMatrix matrix_from_json(const Json& j);

/// {"size": d, "rows": [["p/q", ...], ...]}.
Json dense_to_json(const DenseRationalMatrix& m);

Json semigroup_to_json(const NumericalSemigroup& s);
Json bounds_to_json(const DimensionBounds& b);
Json decomposition_to_json(const IrreducibleDecomposition& d);
Json report_to_json(const VerificationReport& r);

}  // namespace nsmat
