#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "nsmat/cli.hpp"

namespace {

struct RawOptions {
  std::vector<nsmat::Int> generators;
  nsmat::Int query = 0;
  nsmat::Int base = 2;
  std::string limit = "auto";
  std::string format = "text";
  std::string in_path;
  std::string out_path;
};

void add_common(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--base", raw.base, "exponent base b (any integer outside {-1,0,1})")
      ->default_val(2);
  cmd->add_option("--limit", raw.limit, "membership window limit, or \"auto\"")
      ->default_val("auto");
  cmd->add_option("--format", raw.format, "output format: text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for numerical semigroups and the exponent "
               "semigroups of weighted cycle matrices"};
  app.require_subcommand(1);

  RawOptions raw;
  const char* gens_help = "semigroup generators (positive integers)";

  CLI::App* info = app.add_subcommand("info", "semigroup invariants and classification");
  info->add_option("generators", raw.generators, gens_help)->required();
  CLI::App* apery = app.add_subcommand("apery", "Apery vector by residue class");
  apery->add_option("generators", raw.generators, gens_help)->required();
  CLI::App* kunz = app.add_subcommand("kunz", "Kunz coordinates");
  kunz->add_option("generators", raw.generators, gens_help)->required();
  CLI::App* construct =
      app.add_subcommand("construct", "weighted cycle matrix with exponent semigroup <generators>");
  construct->add_option("generators", raw.generators, gens_help)->required();
  CLI::App* verify =
      app.add_subcommand("verify", "check the constructed matrix against independent oracles");
  verify->add_option("generators", raw.generators, gens_help)->required();
  CLI::App* membership =
      app.add_subcommand("membership", "is n in the exponent semigroup of the constructed matrix");
  membership->add_option("n", raw.query, "exponent to test")->required();
  membership->add_option("generators", raw.generators, gens_help)->required();
  CLI::App* dimension = app.add_subcommand("dimension", "matricial dimension bounds");
  dimension->add_option("generators", raw.generators, gens_help)->required();
  CLI::App* decompose =
      app.add_subcommand("decompose", "intersection of irreducible oversemigroups");
  decompose->add_option("generators", raw.generators, gens_help)->required();
  CLI::App* batch =
      app.add_subcommand("batch", "process JSON lines {\"generators\":[...]} one per line");
  batch->add_option("--in", raw.in_path, "input path (default: stdin)");
  batch->add_option("--out", raw.out_path, "output path (default: stdout)");

  for (CLI::App* cmd : {info, apery, kunz, construct, verify, membership, dimension,
                        decompose, batch}) {
    add_common(cmd, raw);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return nsmat::kExitInvalidInput;
  }

  nsmat::CommandRequest request;
  request.subcommand = app.get_subcommands().front()->get_name();
  request.generators = raw.generators;
  request.base = raw.base;
  request.format = raw.format;
  request.query = raw.query;
  request.in_path = raw.in_path;
  request.out_path = raw.out_path;
  if (raw.limit != "auto") {
    try {
      size_t used = 0;
      request.limit = std::stoll(raw.limit, &used);
      if (used != raw.limit.size()) throw std::invalid_argument(raw.limit);
    } catch (const std::exception&) {
      std::cerr << "error: --limit expects a positive integer or \"auto\"\n";
      return nsmat::kExitInvalidInput;
    }
  }
  return nsmat::run(request, std::cout, std::cerr);
}
