#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ctwin/bent.hpp"
#include "ctwin/clifford_basis.hpp"
#include "ctwin/graph_io.hpp"
#include "ctwin/graphs.hpp"
#include "ctwin/swap_search.hpp"

namespace ctwin::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

void require_m(int m, int max, const char* command) {
  if (m < 1 || m > max)
    throw UsageError(std::string(command) + ": --m must lie in 1.." + std::to_string(max) +
                     " (got " + std::to_string(m) + ")");
}

BooleanFunction twin_function(const std::string& name, unsigned m) {
  if (name == "sigma")
    return sigma_function(m);
  if (name == "tau")
    return tau_function(m);
  throw UsageError("--function must be sigma or tau (got '" + name + "')");
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json params_array(const DiffSetParams& p) { return json::array({p.v, p.k, p.lambda, p.n}); }
json params_array(const SrgParams& p) { return json::array({p.v, p.k, p.lambda, p.mu}); }

}  // namespace

std::string RunReport::to_json() const {
  json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["result"] = result;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

RunReport cmd_table(int m, const std::string& function, const std::string& format) {
  const auto start = Clock::now();
  require_m(m, 14, "table");
  if (format != "hex" && format != "bits")
    throw UsageError("--format must be hex or bits for table (got '" + format + "')");
  const BooleanFunction f = twin_function(function, static_cast<unsigned>(m));
  RunReport r{"table"};
  r.parameters = {{"m", m}, {"function", function}, {"format", format}};
  r.result = {{"arity", f.arity()},
              {"weight", f.weight()},
              {"table", format == "hex" ? to_tt_string(f) : f.to_bits()}};
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport cmd_bent(int m, const std::string& function) {
  const auto start = Clock::now();
  require_m(m, 12, "bent");
  const BooleanFunction f = twin_function(function, static_cast<unsigned>(m));
  const WalshSpectrum s = walsh_transform(f);
  const bool bent = is_bent(s);
  RunReport r{"bent"};
  r.parameters = {{"m", m}, {"function", function}};
  r.result["bent"] = bent;
  if (bent)
    r.result["magnitude"] = std::int64_t{1} << m;
  else
    r.result["magnitude"] = nullptr;
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport cmd_params(int m) {
  const auto start = Clock::now();
  require_m(m, 31, "params");
  const auto level = static_cast<unsigned>(m);
  const DiffSetParams ds = predicted_params(level);
  const SrgParams srg = predicted_srg_params(level);
  RunReport r{"params"};
  r.parameters = {{"m", m}};
  r.result["ds"] = params_array(ds);
  r.result["srg"] = params_array(srg);
  if (m > 8) {
    r.result["confirmed"] = nullptr;
    r.elapsed_ms = ms_since(start);
    return r;
  }
  const DiffSetParams ds_sigma = verify_difference_set(sigma_function(level));
  const DiffSetParams ds_tau = verify_difference_set(tau_function(level));
  const EdgeColouredGraph delta = build_delta(level);
  const bool exhaustive = m <= 6;
  auto srg_of = [&](Colour c) {
    return exhaustive ? verify_srg(delta, c) : verify_srg_by_translation(delta, c);
  };
  const SrgParams red = srg_of(Colour::Red);
  const SrgParams blue = srg_of(Colour::Blue);
  const bool confirmed = ds_sigma == ds && ds_tau == ds && red == srg && blue == srg &&
                         red.satisfies_identity() && blue.satisfies_identity();
  r.result["confirmed"] = confirmed;
  r.result["measured"] = {{"ds_sigma", params_array(ds_sigma)},
                          {"ds_tau", params_array(ds_tau)},
                          {"srg_red", params_array(red)},
                          {"srg_blue", params_array(blue)},
                          {"srg_method", exhaustive ? "exhaustive" : "translation"}};
  if (!confirmed)
    r.exit_code = kError;
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport cmd_graph(int m, const std::string& colour_name, const std::string& format_name,
                    const std::optional<std::string>& out) {
  const auto start = Clock::now();
  require_m(m, 8, "graph");
  Colour colour;
  GraphFormat format;
  try {
    colour = parse_colour(colour_name);
    format = parse_graph_format(format_name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const EdgeColouredGraph delta = build_delta(static_cast<unsigned>(m));
  RunReport r{"graph"};
  r.parameters = {{"m", m}, {"colour", colour_name}, {"format", format_name}};
  if (out)
    r.parameters["out"] = *out;
  r.result["v"] = delta.vertex_count();
  r.result["edges"] = std::uint64_t{delta.vertex_count()} * delta.degree(colour) / 2;
  if (out) {
    std::ofstream file(*out, std::ios::binary);
    if (!file)
      throw Error("graph: cannot open '" + *out + "' for writing");
    write_graph(file, delta, colour, format);
    file.flush();
    if (!file)
      throw Error("graph: write to '" + *out + "' failed");
    r.result["path"] = *out;
  } else {
    const std::string text = export_graph(delta, colour, format);
    if (format == GraphFormat::Graph6)
      r.result["graph"] = text;
    else
      r.result["graph"] = json::parse(text);
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport cmd_search(const SearchRequest& q) {
  const auto start = Clock::now();
  require_m(q.m, 12, "search");
  if (q.threads < 1)
    throw UsageError("search: --threads must be positive");
  if (q.node_budget && *q.node_budget <= 0)
    throw UsageError("search: --node-budget must be positive");
  if (q.time_budget_ms && *q.time_budget_ms <= 0)
    throw UsageError("search: --time-budget-ms must be positive");
  if (q.all && (q.node_budget || q.time_budget_ms))
    throw UsageError("search: budgets do not apply to --all enumeration");
  if (q.all && q.limit <= 0)
    throw UsageError("search: --limit must be positive");

  RunReport r{"search"};
  r.parameters = {{"m", q.m}, {"threads", q.threads}, {"all", q.all}};
  r.parameters["node_budget"] = q.node_budget ? json(*q.node_budget) : json(nullptr);
  r.parameters["time_budget_ms"] = q.time_budget_ms ? json(*q.time_budget_ms) : json(nullptr);
  r.parameters["forward_check"] = q.forward_check;
  r.parameters["most_constrained"] = q.most_constrained;
  const auto m = static_cast<unsigned>(q.m);

  if (q.all) {
    r.parameters["limit"] = q.limit;
    if (m > 2)
      throw UsageError("search: --all enumerates only m <= 2");
    const auto maps = search_all(m, static_cast<std::size_t>(q.limit));
    json list = json::array();
    bool all_verified = true;
    for (const auto& map : maps) {
      list.push_back(json::parse(witness_json(map)));
      all_verified = all_verified && verify_swap(map);
    }
    r.result["status"] = maps.empty() ? "exhausted" : "found";
    r.result["count"] = maps.size();
    r.result["witnesses"] = std::move(list);
    r.result["verified"] = all_verified;
    r.exit_code = !all_verified ? kError : maps.empty() ? kExhausted : kOk;
    r.elapsed_ms = ms_since(start);
    return r;
  }

  SearchOptions options;
  options.threads = q.threads;
  options.node_budget = q.node_budget ? static_cast<std::uint64_t>(*q.node_budget) : 0;
  options.time_budget = std::chrono::milliseconds(q.time_budget_ms.value_or(0));
  options.forward_check = q.forward_check;
  options.order = q.most_constrained ? VertexOrder::MostConstrained : VertexOrder::Natural;
  const SearchOutcome outcome = search_swap(m, options);

  r.result["status"] = std::string(to_string(outcome.status));
  switch (outcome.status) {
    case SearchStatus::Found: {
      const bool verified = verify_swap(*outcome.witness);
      r.result["witness"] = json::parse(witness_json(*outcome.witness));
      r.result["verified"] = verified;
      r.exit_code = verified ? kOk : kError;
      break;
    }
    case SearchStatus::Exhausted:
      r.result["certificate"] = json::parse(exhaustion_json(m, outcome.stats.nodes));
      r.exit_code = kExhausted;
      break;
    case SearchStatus::Inconclusive:
      r.result["certificate"] = {{"m", m}, {"status", "inconclusive"}, {"nodes", outcome.stats.nodes}};
      r.exit_code = kInconclusive;
      break;
  }
  r.result["stats"] = {{"nodes", outcome.stats.nodes},
                       {"max_depth", outcome.stats.max_depth},
                       {"wall_ms", outcome.stats.wall_ms}};
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport cmd_oracle(int m) {
  const auto start = Clock::now();
  require_m(m, 4, "oracle");
  const auto level = static_cast<unsigned>(m);
  RunReport r{"oracle"};
  r.parameters = {{"m", m}};

  const std::uint64_t count = PairIndex::count(level);
  for (std::uint64_t i = 0; i < count; ++i) {
    const PairIndex idx{level, i};
    const SymmetryClass c = classify(gamma(idx));
    const bool skew = c == SymmetryClass::Skew;
    const bool sym_off = c == SymmetryClass::SymmetricOffDiagonal;
    if (sigma(idx) != skew || tau(idx) != sym_off) {
      r.result = {{"checked", i},
                  {"ok", false},
                  {"mismatch", {{"index", i}, {"class", std::string(to_string(c))},
                                {"sigma", sigma(idx)}, {"tau", tau(idx)}}}};
      r.exit_code = kError;
      r.elapsed_ms = ms_since(start);
      return r;
    }
  }
  const auto mismatch = first_mismatch(build_delta(level), oracle_build_delta(level));
  r.result["checked"] = count;
  r.result["pairs"] = count * (count - 1) / 2;
  r.result["ok"] = !mismatch.has_value();
  if (mismatch) {
    r.result["mismatch"] = {{"pair", json::array({mismatch->first, mismatch->second})}};
    r.exit_code = kError;
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

unsigned resolve_threads(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1)
      throw UsageError("--threads must be positive");
    return static_cast<unsigned>(*flag);
  }
  if (const char* env = std::getenv("CTWIN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw UsageError("CTWIN_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return 1;
}

namespace {

void summarize(const RunReport& r) {
  std::cerr << "ctwin " << r.command << ": " << r.result.dump() << " (" << r.elapsed_ms
            << " ms, exit " << r.exit_code << ")\n";
}

int fail(const std::string& command, const std::string& message) {
  std::cerr << "ctwin: " << message << '\n';
  json j;
  j["command"] = command;
  j["error"] = message;
  std::cout << j.dump() << '\n';
  return kError;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Twin bent functions of the Clifford algebra R_{m,m}: tables, checks and swap search"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Human-readable summary on stderr");

  int m = 0;
  std::string function = "sigma";
  std::string format;
  std::string colour = "red";
  std::optional<std::string> out;
  std::optional<int> threads;
  std::optional<std::int64_t> node_budget;
  std::optional<std::int64_t> time_budget;
  bool all = false;
  std::int64_t limit = 1000;
  bool forward_check = false;
  bool most_constrained = false;

  auto* table = app.add_subcommand("table", "Truth table of sigma_m or tau_m");
  table->add_option("--m", m, "Level m (1..14)")->required();
  table->add_option("--function", function, "sigma or tau");
  table->add_option("--format", format, "hex or bits")->default_str("hex");

  auto* bent = app.add_subcommand("bent", "Check that sigma_m or tau_m is bent");
  bent->add_option("--m", m, "Level m (1..12)")->required();
  bent->add_option("--function", function, "sigma or tau");

  auto* params = app.add_subcommand("params", "Difference-set and strongly-regular parameters");
  params->add_option("--m", m, "Level m; brute-force confirmation for m <= 8")->required();

  auto* graph = app.add_subcommand("graph", "Export a colour class of Delta_m");
  graph->add_option("--m", m, "Level m (1..8)")->required();
  graph->add_option("--colour", colour, "red or blue");
  graph->add_option("--format", format, "graph6 or json-edges")->default_str("graph6");
  graph->add_option("--out", out, "Output file (default: embed in the report)");

  auto* search = app.add_subcommand("search", "Search for a red/blue swapping automorphism");
  search->add_option("--m", m, "Level m")->required();
  search->add_option("--threads", threads, "Worker threads (default: CTWIN_THREADS or 1)");
  search->add_option("--node-budget", node_budget, "Stop as inconclusive after this many nodes");
  search->add_option("--time-budget-ms", time_budget, "Stop as inconclusive after this many ms");
  search->add_flag("--all", all, "Enumerate every witness fixing vertex 0 (m <= 2)");
  search->add_option("--limit", limit, "Maximum witnesses listed with --all");
  search->add_flag("--forward-check", forward_check, "Prune every open vertex after each assignment");
  search->add_flag("--most-constrained", most_constrained,
                   "Assign the vertex with the smallest domain first (implies --forward-check)");

  auto* oracle = app.add_subcommand("oracle", "Cross-check the fast paths against the matrix oracle");
  oracle->add_option("--m", m, "Level m (1..4)")->required();

  std::string command = "ctwin";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty())
      command = app.get_subcommands().front()->get_name();
    return fail(command, e.what());
  }

  try {
    RunReport report;
    if (table->parsed()) {
      command = "table";
      report = cmd_table(m, function, format.empty() ? "hex" : format);
    } else if (bent->parsed()) {
      command = "bent";
      report = cmd_bent(m, function);
    } else if (params->parsed()) {
      command = "params";
      report = cmd_params(m);
    } else if (graph->parsed()) {
      command = "graph";
      report = cmd_graph(m, colour, format.empty() ? "graph6" : format, out);
    } else if (search->parsed()) {
      command = "search";
      SearchRequest q;
      q.m = m;
      q.threads = resolve_threads(threads);
      q.node_budget = node_budget;
      q.time_budget_ms = time_budget;
      q.all = all;
      q.limit = limit;
      q.forward_check = forward_check;
      q.most_constrained = most_constrained;
      report = cmd_search(q);
    } else {
      command = "oracle";
      report = cmd_oracle(m);
    }
    std::cout << report.to_json() << '\n';
    if (verbose)
      summarize(report);
    return report.exit_code;
  } catch (const std::exception& e) {
    return fail(command, e.what());
  }
}

}  // namespace ctwin::cli
