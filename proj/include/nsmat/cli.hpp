#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nsmat/rational.hpp"
#include "nsmat/semigroup.hpp"

namespace nsmat {

/// Parsed command line. Subcommands: info, apery, kunz, construct,
/// verify, membership, dimension, decompose, batch.
struct CommandRequest {
  std::string subcommand;
  std::vector<Int> generators;
  Integer base = 2;               // never -1, 0 or 1
  std::optional<Int> limit;       // nullopt means "auto" (conductor + 2m)
  std::string format = "text";    // "text" | "json"
  Int query = 0;                  // membership: the exponent n being tested
  std::string in_path;            // batch input ("" = stdin)
  std::string out_path;           // batch output ("" = stdout)
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Dispatches a request; writes results to `out` and one-line
/// diagnostics to `err`. Returns the process exit status.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

}  // namespace nsmat
