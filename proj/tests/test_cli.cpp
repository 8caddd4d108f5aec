#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "commands.hpp"
#include "ctwin/bent.hpp"
#include "ctwin/graph_io.hpp"
#include "ctwin/graphs.hpp"

using namespace ctwin;
using nlohmann::json;

namespace {

struct Invocation {
  int exit_code;
  std::string out;
};

Invocation run_ctwin(const std::string& args) {
  const std::string command = std::string(CTWIN_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
    out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expected_exit) {
  const auto r = run_ctwin(args);
  CHECK(r.exit_code == expected_exit);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("table") {
  CHECK(cli::cmd_table(1, "sigma", "bits").result["table"] == "0100");
  CHECK(cli::cmd_table(1, "tau", "bits").result["table"] == "0010");
  CHECK(cli::cmd_table(2, "sigma", "hex").result["table"] == to_tt_string(sigma_function(2)));
  CHECK(cli::cmd_table(3, "tau", "hex").result["weight"] == 28);
  CHECK_THROWS_AS(cli::cmd_table(0, "sigma", "bits"), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_table(15, "sigma", "bits"), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_table(1, "sigma", "octal"), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_table(1, "rho", "bits"), cli::UsageError);
}

TEST_CASE("bent") {
  const auto t3 = cli::cmd_bent(3, "tau").result;
  CHECK(t3["bent"] == true);
  CHECK(t3["magnitude"] == 8);
  const auto s5 = cli::cmd_bent(5, "sigma").result;
  CHECK(s5["bent"] == true);
  CHECK(s5["magnitude"] == 32);
  for (int m = 1; m <= 6; ++m)
    CHECK(cli::cmd_bent(m, "tau").result["magnitude"] == (1 << m));
  CHECK_THROWS_AS(cli::cmd_bent(13, "tau"), cli::UsageError);
}

TEST_CASE("params") {
  const auto p2 = cli::cmd_params(2).result;
  CHECK(p2["ds"] == json::array({16, 6, 2, 4}));
  CHECK(p2["srg"] == json::array({16, 6, 2, 2}));
  CHECK(p2["confirmed"] == true);
  const auto p1 = cli::cmd_params(1).result;
  CHECK(p1["ds"] == json::array({4, 1, 0, 1}));
  CHECK(p1["srg"] == json::array({4, 1, 0, 0}));
  CHECK(p1["confirmed"] == true);
  for (int m = 3; m <= 4; ++m)
    CHECK(cli::cmd_params(m).result["confirmed"] == true);
  CHECK(cli::cmd_params(20).result["confirmed"].is_null());
  CHECK_THROWS_AS(cli::cmd_params(0), cli::UsageError);
}

TEST_CASE("graph") {
  const auto red = cli::cmd_graph(1, "red", "graph6", std::nullopt).result;
  CHECK(red["graph"] == "C`");
  const auto blue = cli::cmd_graph(2, "blue", "json-edges", std::nullopt).result;
  CHECK(blue["edges"] == 48);
  CHECK(blue["graph"]["edges"].size() == 48);
  CHECK_THROWS_AS(cli::cmd_graph(1, "green", "graph6", std::nullopt), Error);
  CHECK_THROWS_AS(cli::cmd_graph(9, "red", "graph6", std::nullopt), cli::UsageError);

  const auto path = std::filesystem::temp_directory_path() / "ctwin_test_graph.g6";
  const auto written = cli::cmd_graph(2, "red", "graph6", path.string()).result;
  CHECK(written["path"] == path.string());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(from_graph6(text) == build_delta(2).subgraph(Colour::Red));
  std::filesystem::remove(path);
}

TEST_CASE("search") {
  cli::SearchRequest q;
  q.m = 1;
  const auto one = cli::cmd_search(q);
  CHECK(one.exit_code == cli::kOk);
  CHECK(one.result["status"] == "found");
  CHECK(one.result["verified"] == true);
  CHECK(one.result["witness"]["phi"] == json::array({0, 2, 1, 3}));

  q.m = 4;
  q.node_budget = 1000;
  const auto cut = cli::cmd_search(q);
  CHECK(cut.exit_code == cli::kInconclusive);
  CHECK(cut.result["status"] == "inconclusive");

  q.node_budget = 0;
  CHECK_THROWS_AS(cli::cmd_search(q), cli::UsageError);
  q.node_budget.reset();
  q.time_budget_ms = -5;
  CHECK_THROWS_AS(cli::cmd_search(q), cli::UsageError);

  cli::SearchRequest all;
  all.m = 1;
  all.all = true;
  const auto listed = cli::cmd_search(all);
  CHECK(listed.result["count"] == listed.result["witnesses"].size());
  CHECK(listed.result["verified"] == true);
  all.node_budget = 10;
  CHECK_THROWS_AS(cli::cmd_search(all), cli::UsageError);
}

TEST_CASE("oracle") {
  const auto r = cli::cmd_oracle(2).result;
  CHECK(r["checked"] == 16);
  CHECK(r["pairs"] == 120);
  CHECK(r["ok"] == true);
  CHECK(cli::cmd_oracle(3).result["ok"] == true);
  CHECK_THROWS_AS(cli::cmd_oracle(5), cli::UsageError);
}

TEST_CASE("thread resolution") {
  ::unsetenv("CTWIN_THREADS");
  CHECK(cli::resolve_threads(std::nullopt) == 1);
  CHECK(cli::resolve_threads(4) == 4);
  ::setenv("CTWIN_THREADS", "3", 1);
  CHECK(cli::resolve_threads(std::nullopt) == 3);
  CHECK(cli::resolve_threads(2) == 2);
  ::setenv("CTWIN_THREADS", "zero", 1);
  CHECK_THROWS_AS(cli::resolve_threads(std::nullopt), cli::UsageError);
  ::unsetenv("CTWIN_THREADS");
  CHECK_THROWS_AS(cli::resolve_threads(0), cli::UsageError);
}

TEST_CASE("report serialization") {
  const auto doc = nlohmann::ordered_json::parse(cli::cmd_table(1, "sigma", "bits").to_json());
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "parameters", "result", "elapsed_ms"});
  CHECK(doc["command"] == "table");
  CHECK(doc["parameters"]["m"] == 1);
  CHECK(doc["elapsed_ms"].is_number());
}

TEST_CASE("executable exit codes and output") {
  CHECK(run_json("table --m 1 --function sigma --format bits", 0)["result"]["table"] == "0100");
  CHECK(run_json("table --m 0 --function sigma --format bits", 1).contains("error"));
  CHECK(run_json("bent --m 3 --function tau", 0)["result"]["bent"] == true);
  CHECK(run_json("params --m 2", 0)["result"]["confirmed"] == true);
  CHECK(run_json("graph --m 1 --colour red --format graph6", 0)["result"]["graph"] == "C`");
  CHECK(run_json("graph --m 1 --colour green --format graph6", 1).contains("error"));
  CHECK(run_json("search --m 1", 0)["result"]["verified"] == true);
  CHECK(run_json("search --m 4 --node-budget 1000", 3)["result"]["status"] == "inconclusive");
  CHECK(run_json("oracle --m 2", 0)["result"]["ok"] == true);
  CHECK(run_json("oracle --m 5", 1).contains("error"));
  CHECK(run_json("search --m 2 --threads 2", 0)["parameters"]["threads"] == 2);
  CHECK(run_json("search --m 2", 0)["parameters"]["threads"] == 1);

  const auto env = run_ctwin("search --m 2");
  ::setenv("CTWIN_THREADS", "2", 1);
  const auto threaded = json::parse(run_ctwin("search --m 2").out);
  ::unsetenv("CTWIN_THREADS");
  CHECK(threaded["parameters"]["threads"] == 2);
  CHECK(threaded["result"]["witness"] == json::parse(env.out)["result"]["witness"]);

  const auto bad = run_ctwin("frobnicate");
  CHECK(bad.exit_code == 1);
  const auto no_m = run_ctwin("table --function sigma");
  CHECK(no_m.exit_code == 1);
}
