#ifndef REGTESS_CLI_HPP
#define REGTESS_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace regtess::cli {

enum class ExitCode : int {
  ok = 0,
  not_realizable = 1,
  invalid_input = 2,
  verification_failed = 3,
  io_error = 4,
};

enum class Command { decide, sigma, oracle, verify, render };
enum class Format { json, text };

struct RunConfig {
  Command command = Command::decide;
  int p = 0;
  int q = 0;
  std::optional<int> m;
  unsigned depth = 2;
  std::optional<std::string> out;
  Format format = Format::json;
};

/// Runs one invocation. `args` excludes the program name. The result goes
/// to `out` (or to --out, written via a temporary file and rename) and a
/// single `status=... code=... message=...` line always goes to `err`.
int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err);

} // namespace regtess::cli

#endif // REGTESS_CLI_HPP
