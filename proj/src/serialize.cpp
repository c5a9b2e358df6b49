#include "nsmat/serialize.hpp"

#include <stdexcept>

namespace nsmat {

namespace {

// Serialized weight order mirrors the matrix layout: superdiagonal
// z_1..z_{m-1}, then the corner z_0.
std::vector<size_t> serialized_order(size_t m) {
  std::vector<size_t> order;
  order.reserve(m);
  for (size_t i = 1; i < m; ++i) order.push_back(i);
  order.push_back(0);
  return order;
}

}  // namespace

Json matrix_to_json(const WeightedCycleMatrix& m) {
  Json j;
  j["size"] = m.size();
  Json weights = Json::array();
  for (size_t i : serialized_order(m.weights().size())) {
    weights.push_back(rational_str(m.weights()[i]));
  }
  j["weights"] = std::move(weights);
  if (m.base()) {
    if (!m.base()->fits_slong_p()) throw std::invalid_argument("base too large to serialize");
    j["base"] = static_cast<Int>(m.base()->get_si());
  } else {
    j["base"] = nullptr;
  }
  return j;
}

WeightedCycleMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("weights")) {
    throw std::invalid_argument("matrix JSON needs \"size\" and \"weights\"");
  }
  const Int size = j.at("size").get<Int>();
  const auto& weights_json = j.at("weights");
  if (size < 1 || !weights_json.is_array() ||
      static_cast<Int>(weights_json.size()) != size) {
    throw std::invalid_argument("matrix JSON weight count does not match size");
  }
  std::vector<Rational> weights(static_cast<size_t>(size));
  std::vector<size_t> order = serialized_order(static_cast<size_t>(size));
  for (size_t pos = 0; pos < order.size(); ++pos) {
    const auto& w = weights_json.at(pos);
    if (!w.is_string()) throw std::invalid_argument("matrix weights must be rational strings");
    weights[order[pos]] = parse_rational(w.get<std::string>());
  }
  std::optional<Integer> base;
  if (j.contains("base") && !j.at("base").is_null()) {
    if (!j.at("base").is_number_integer()) {
      throw std::invalid_argument("matrix base must be an integer or null");
    }
    base = Integer(static_cast<long>(j.at("base").get<Int>()));
  }
  return WeightedCycleMatrix(std::move(weights), std::move(base));
}

Json dense_to_json(const DenseRationalMatrix& m) {
  Json j;
  j["size"] = m.size();
  Json rows = Json::array();
  for (Int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (Int k = 0; k < m.size(); ++k) row.push_back(rational_str(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json semigroup_to_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.minimal_generators();
  j["multiplicity"] = s.multiplicity();
  j["embedding_dimension"] = s.embedding_dimension();
  j["frobenius"] = s.frobenius();
  j["conductor"] = s.conductor();
  j["classification"] = to_string(classify(s));
  j["gaps"] = s.gaps();
  return j;
}

Json bounds_to_json(const DimensionBounds& b) {
  Json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  if (b.exact) {
    j["exact"] = *b.exact;
  } else {
    j["exact"] = nullptr;
  }
  Json rules = Json::array();
  for (const auto& r : b.rules) {
    Json rule;
    rule["tag"] = r.tag;
    rule["kind"] = r.kind;
    rule["value"] = r.value;
    rules.push_back(std::move(rule));
  }
  j["rules"] = std::move(rules);
  return j;
}

Json decomposition_to_json(const IrreducibleDecomposition& d) {
  Json j;
  Json factors = Json::array();
  for (const auto& f : d.factors) factors.push_back(f.minimal_generators());
  j["factors"] = std::move(factors);
  j["block_dimension"] = d.block_dimension;
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["passed"] = r.passed;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json check;
    check["name"] = c.name;
    check["passed"] = c.passed;
    check["detail"] = c.detail;
    checks.push_back(std::move(check));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace nsmat
