#include "nsmat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "nsmat/analysis.hpp"
#include "nsmat/exponent.hpp"
#include "nsmat/matrix.hpp"
#include "nsmat/serialize.hpp"

namespace nsmat {

namespace {

bool json_format(const CommandRequest& req) {
  if (req.format == "json") return true;
  if (req.format == "text") return false;
  throw std::invalid_argument("unknown format '" + req.format + "'");
}

NumericalSemigroup semigroup_of(const CommandRequest& req) {
  return NumericalSemigroup::from_generators(req.generators);
}

void print_join(std::ostream& out, const std::vector<Int>& values) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << values[i];
  }
  out << '\n';
}

void print_matrix_text(std::ostream& out, const WeightedCycleMatrix& m) {
  out << "size: " << m.size() << '\n';
  out << "base: " << (m.base() ? m.base()->get_str() : "none") << '\n';
  out << "superdiagonal:";
  for (Int i = 1; i < m.size(); ++i) out << ' ' << rational_str(m.weight(i));
  out << '\n';
  out << "corner: " << rational_str(m.weight(0)) << '\n';
}

void print_report_text(std::ostream& out, const VerificationReport& report) {
  for (const auto& c : report.checks) {
    out << "check " << c.name << ": " << (c.passed ? "pass" : "fail");
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  out << "verification: " << (report.passed ? "pass" : "fail") << '\n';
}

int cmd_info(const CommandRequest& req, std::ostream& out) {
  NumericalSemigroup s = semigroup_of(req);
  if (json_format(req)) {
    out << semigroup_to_json(s).dump() << '\n';
    return kExitOk;
  }
  out << "generators:";
  for (Int g : s.minimal_generators()) out << ' ' << g;
  out << '\n';
  out << "multiplicity: " << s.multiplicity() << '\n';
  out << "embedding-dimension: " << s.embedding_dimension() << '\n';
  out << "frobenius: " << s.frobenius() << '\n';
  out << "conductor: " << s.conductor() << '\n';
  out << "classification: " << to_string(classify(s)) << '\n';
  out << "gaps:";
  for (Int g : s.gaps()) out << ' ' << g;
  out << '\n';
  return kExitOk;
}

int cmd_apery(const CommandRequest& req, std::ostream& out) {
  NumericalSemigroup s = semigroup_of(req);
  if (json_format(req)) {
    Json j;
    j["apery"] = s.apery().values;
    out << j.dump() << '\n';
  } else {
    print_join(out, s.apery().values);
  }
  return kExitOk;
}

int cmd_kunz(const CommandRequest& req, std::ostream& out) {
  KunzCoordinates k = kunz_coordinates(semigroup_of(req));
  if (json_format(req)) {
    Json j;
    j["kunz"] = k.values;
    out << j.dump() << '\n';
  } else {
    print_join(out, k.values);
  }
  return kExitOk;
}

WeightedCycleMatrix construct_matrix(const CommandRequest& req) {
  ScaledSemigroup scaled = normalize(GeneratorInput::of(req.generators));
  return build_scaled_matrix(scaled, req.base);
}

int cmd_construct(const CommandRequest& req, std::ostream& out) {
  WeightedCycleMatrix m = construct_matrix(req);
  if (json_format(req)) {
    out << matrix_to_json(m).dump() << '\n';
  } else {
    print_matrix_text(out, m);
  }
  return kExitOk;
}

int cmd_membership(const CommandRequest& req, std::ostream& out) {
  WeightedCycleMatrix m = construct_matrix(req);
  const bool member = cycle_membership(m, req.query);
  if (json_format(req)) {
    Json j;
    j["n"] = req.query;
    j["member"] = member;
    out << j.dump() << '\n';
  } else {
    out << (member ? "true" : "false") << '\n';
  }
  return kExitOk;
}

// Corollary-path verification for gcd > 1: both membership routes of the
// scaled matrix must match the sieve of d*T on the window.
VerificationReport verify_scaled(const ScaledSemigroup& scaled, const Integer& b,
                                 std::optional<Int> limit) {
  const NumericalSemigroup& t = scaled.quotient;
  const Int d = scaled.scale;
  WeightedCycleMatrix m = build_scaled_matrix(scaled, b);
  const Int n_max = limit ? *limit : d * (t.conductor() + 2 * t.multiplicity());

  VerificationReport report;
  MembershipWindow window = dense_power_membership(to_dense(m), n_max);
  CheckResult cycle_check{"cycle-window", true, ""};
  CheckResult dense_check{"dense-window", true, ""};
  for (Int n = 0; n <= n_max; ++n) {
    const bool want = (n % d == 0) && t.contains(n / d);
    if (cycle_check.passed && cycle_membership(m, n) != want) {
      cycle_check.passed = false;
      cycle_check.detail = "power " + std::to_string(n) + " diverges from the scaled sieve";
    }
    if (dense_check.passed && window.members[static_cast<size_t>(n)] != want) {
      dense_check.passed = false;
      dense_check.detail = "power " + std::to_string(n) + " diverges from the scaled sieve";
    }
  }
  if (cycle_check.passed) cycle_check.detail = "window [0, " + std::to_string(n_max) + "]";
  if (dense_check.passed) dense_check.detail = "window [0, " + std::to_string(n_max) + "]";
  report.checks.push_back(cycle_check);
  report.checks.push_back(dense_check);
  report.passed = cycle_check.passed && dense_check.passed;
  return report;
}

int cmd_verify(const CommandRequest& req, std::ostream& out) {
  ScaledSemigroup scaled = normalize(GeneratorInput::of(req.generators));
  VerificationReport report;
  if (scaled.scale == 1) {
    if (scaled.quotient.is_trivial()) {
      throw std::invalid_argument(
          "verification needs multiplicity >= 2; the 1x1 matrix [b] always has exponent "
          "semigroup N");
    }
    report = verify_construction(scaled.quotient, req.base, req.limit.value_or(-1));
  } else {
    report = verify_scaled(scaled, req.base, req.limit);
  }
  if (json_format(req)) {
    out << report_to_json(report).dump() << '\n';
  } else {
    print_report_text(out, report);
  }
  return report.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_dimension(const CommandRequest& req, std::ostream& out) {
  DimensionBounds b = dimension_bounds(semigroup_of(req));
  if (json_format(req)) {
    out << bounds_to_json(b).dump() << '\n';
    return kExitOk;
  }
  out << "lower: " << b.lower << '\n';
  out << "upper: " << b.upper << '\n';
  if (b.exact) {
    out << "exact: " << *b.exact << '\n';
  } else {
    out << "exact: none\n";
  }
  for (const auto& r : b.rules) {
    out << "rule " << r.tag << ": " << r.kind << ' ' << r.value << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const CommandRequest& req, std::ostream& out) {
  IrreducibleDecomposition d = decompose_irreducible(semigroup_of(req));
  if (json_format(req)) {
    out << decomposition_to_json(d).dump() << '\n';
    return kExitOk;
  }
  for (const auto& f : d.factors) {
    out << "factor:";
    for (Int g : f.minimal_generators()) out << ' ' << g;
    out << '\n';
  }
  out << "block-dimension: " << d.block_dimension << '\n';
  return kExitOk;
}

Json batch_line_result(const std::string& line, const Integer& base, bool& ok) {
  Json out;
  ok = false;
  Json parsed;
  try {
    parsed = Json::parse(line);
  } catch (const Json::parse_error&) {
    out["input"] = line;
    out["error"] = "line is not valid JSON";
    return out;
  }
  out["input"] = parsed;
  try {
    if (!parsed.is_object() || !parsed.contains("generators") ||
        !parsed.at("generators").is_array()) {
      throw std::invalid_argument("expected an object with a \"generators\" array");
    }
    std::vector<Int> gens;
    for (const auto& g : parsed.at("generators")) {
      if (!g.is_number_integer()) throw std::invalid_argument("generators must be integers");
      gens.push_back(g.get<Int>());
    }
    NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
    (void)base;
    out["result"] = semigroup_to_json(s);
    ok = true;
  } catch (const std::exception& e) {
    out["error"] = e.what();
  }
  return out;
}

int cmd_batch(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  std::ifstream file_in;
  std::istream* in = &std::cin;
  if (!req.in_path.empty()) {
    file_in.open(req.in_path);
    if (!file_in) {
      err << "error: cannot open input file '" << req.in_path << "'\n";
      return kExitInvalidInput;
    }
    in = &file_in;
  }
  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!req.out_path.empty()) {
    file_out.open(req.out_path);
    if (!file_out) {
      err << "error: cannot open output file '" << req.out_path << "'\n";
      return kExitInvalidInput;
    }
    sink = &file_out;
  }

  std::string line;
  Int lines = 0;
  Int succeeded = 0;
  while (std::getline(*in, line)) {
    ++lines;
    bool ok = false;
    *sink << batch_line_result(line, req.base, ok).dump() << '\n';
    if (ok) ++succeeded;
  }
  if (lines > 0 && succeeded == 0) {
    err << "error: every batch line failed\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace

int run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  try {
    if (request.base == 0 || request.base == 1 || request.base == -1) {
      throw std::invalid_argument("base must lie outside {-1, 0, 1}");
    }
    if (request.limit && *request.limit < 1) {
      throw std::invalid_argument("limit must be positive or \"auto\"");
    }
    const std::string& cmd = request.subcommand;
    if (cmd == "info") return cmd_info(request, out);
    if (cmd == "apery") return cmd_apery(request, out);
    if (cmd == "kunz") return cmd_kunz(request, out);
    if (cmd == "construct") return cmd_construct(request, out);
    if (cmd == "verify") return cmd_verify(request, out);
    if (cmd == "membership") return cmd_membership(request, out);
    if (cmd == "dimension") return cmd_dimension(request, out);
    if (cmd == "decompose") return cmd_decompose(request, out);
    if (cmd == "batch") return cmd_batch(request, out, err);
    throw std::invalid_argument("unknown subcommand '" + cmd + "'");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace nsmat
