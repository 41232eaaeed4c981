// Integration tests driving the installed CLI binary end to end: exit codes,
// report shapes, the "inf" token contract and byte-level determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(VEXL_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), std::move(out)};
}

std::string fixture(const std::string& name) {
  return std::string(VEXL_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("norm command on the bundled counterexample file") {
  auto r = run_cli("norm " + fixture("thm2.json") + " f");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["result"]["norm"]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(j["input"]["cells"][1]["q"] == "inf");

  auto sum = run_cli("norm " + fixture("thm2.json") + " f_plus_g");
  REQUIRE(sum.exit_code == 0);
  json js = json::parse(sum.out);
  CHECK(js["result"]["norm"]["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
  // Per-term inner infima at mu = norm: 1/(L-1) = 0.5 at L = 3, twice.
  REQUIRE(js["result"]["inner_infima_at_norm"].size() == 2);
  for (const auto& t : js["result"]["inner_infima_at_norm"]) {
    CHECK(t["branch"] == "finite");
    CHECK(t["lambda"]["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-8));
  }

  auto zero = run_cli("norm " + fixture("thm2.json") + " zero");
  REQUIRE(zero.exit_code == 0);
  CHECK(json::parse(zero.out)["result"]["norm"]["value"].get<double>() == 0.0);
}

TEST_CASE("check-triangle verdicts") {
  auto bad = run_cli("check-triangle " + fixture("thm2.json") + " f g");
  REQUIRE(bad.exit_code == 0);
  json jb = json::parse(bad.out);
  CHECK(jb["result"]["verdict"] == "VIOLATED");
  CHECK(jb["result"]["regime"] == "none_uniform");
  CHECK(jb["result"]["residual"]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));

  auto zero = run_cli("check-triangle " + fixture("thm2.json") + " f zero");
  REQUIRE(zero.exit_code == 0);
  json jz = json::parse(zero.out);
  CHECK(jz["result"]["verdict"] == "HOLDS");
  CHECK(std::abs(jz["result"]["residual"]["value"].get<double>()) <= 1e-9);

  auto good = run_cli("check-triangle " + fixture("qlep.json") + " f g");
  REQUIRE(good.exit_code == 0);
  json jg = json::parse(good.out);
  CHECK(jg["result"]["verdict"] == "HOLDS");
  CHECK(jg["result"]["regime"] == "q_le_p");
}

TEST_CASE("reproduce-thm2 certifies and exits zero") {
  auto r = run_cli("reproduce-thm2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["result"]["certified"] == true);
  CHECK(j["result"]["norm_f_plus_g"]["value"].get<double>() ==
        doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("bounded-q emits a CSV sweep") {
  auto one = run_cli("bounded-q --grid 1");
  REQUIRE(one.exit_code == 0);
  CHECK(one.out.find("q0,residual,verdict") == 0);
  CHECK(one.out.find("HOLDS") != std::string::npos);
  CHECK(one.out.find("VIOLATED") == std::string::npos);

  auto sweep = run_cli("bounded-q --grid 2,3,4");
  REQUIRE(sweep.exit_code == 0);
  CHECK(sweep.out.find("2.0,0.178145584873") != std::string::npos);
  CHECK(sweep.out.find("VIOLATED") != std::string::npos);

  auto as_json = run_cli("bounded-q --grid 1,2 --output json");
  REQUIRE(as_json.exit_code == 0);
  json j = json::parse(as_json.out);
  CHECK(j["result"]["first_violation"]["q0"].get<double>() == 2.0);
}

TEST_CASE("search streams witnesses as JSON lines") {
  std::string args = "search --seed 42 --budget 60";
  auto r = run_cli(args);
  REQUIRE(r.exit_code == 0);
  // Every line parses as a witness object.
  std::size_t start = 0, lines = 0;
  while (start < r.out.size()) {
    std::size_t end = r.out.find('\n', start);
    if (end == std::string::npos) break;
    json w = json::parse(r.out.substr(start, end - start));
    CHECK(w.contains("residual"));
    CHECK(w.contains("cells"));
    ++lines;
    start = end + 1;
  }
  INFO("witness lines: " << lines);
}

TEST_CASE("identity-check reports clean fuzz results") {
  auto r = run_cli("identity-check --seed 7 --budget 2000");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["phi_identity"]["failures"].get<int>() == 0);
}

TEST_CASE("exit codes: 2 for parse errors, 3 for invariant violations") {
  CHECK(run_cli("norm /nonexistent.json f").exit_code == 2);
  CHECK(run_cli("definitely-not-a-command").exit_code == 2);
  CHECK(run_cli("norm " + fixture("bad_measure.json") + " f").exit_code == 3);
  CHECK(run_cli("norm " + fixture("thm2.json") + " no_such_sequence").exit_code == 3);
  // A sweep grid below 1 violates the q0 >= 1 precondition.
  CHECK(run_cli("bounded-q --grid 0.5,2").exit_code == 3);
}

TEST_CASE("fixed inputs give byte-identical output") {
  const std::string commands[] = {
      "norm " + fixture("thm2.json") + " f",
      "check-triangle " + fixture("thm2.json") + " f g",
      "reproduce-thm2",
      "bounded-q --grid 2,3,4",
      "search --seed 42 --budget 40",
      "identity-check --seed 7 --budget 500",
  };
  for (const auto& cmd : commands) {
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}
