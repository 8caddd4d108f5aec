#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "ctwin/error.hpp"

namespace ctwin::cli {

/// Bad flag value or an m outside a command's cost guard.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int { kOk = 0, kError = 1, kExhausted = 2, kInconclusive = 3 };

struct RunReport {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  double elapsed_ms = 0.0;
  int exit_code = kOk;

  /// Single-line JSON document for standard output.
  std::string to_json() const;
};

RunReport cmd_table(int m, const std::string& function, const std::string& format);
RunReport cmd_bent(int m, const std::string& function);
RunReport cmd_params(int m);
RunReport cmd_graph(int m, const std::string& colour, const std::string& format,
                    const std::optional<std::string>& out);

struct SearchRequest {
  int m = 0;
  unsigned threads = 1;
  std::optional<std::int64_t> node_budget;
  std::optional<std::int64_t> time_budget_ms;
  bool all = false;
  std::int64_t limit = 1000;
  bool forward_check = false;
  bool most_constrained = false;
};

RunReport cmd_search(const SearchRequest& request);
RunReport cmd_oracle(int m);

/// --threads if given, else CTWIN_THREADS, else 1.
unsigned resolve_threads(std::optional<int> flag);

/// Runs the CLI; writes the report to stdout and diagnostics to stderr.
int run(int argc, char** argv);

}  // namespace ctwin::cli
