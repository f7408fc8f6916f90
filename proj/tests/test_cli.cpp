#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
};

// Runs the CLI under test (path in $HKLAT_CLI) and captures stdout + exit code.
RunResult run_cli(const std::string& args) {
  const char* exe = std::getenv("HKLAT_CLI");
  REQUIRE_MESSAGE(exe != nullptr, "HKLAT_CLI must point at the binary");
  std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.rc = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("scenario succeeds and its JSON output is byte-deterministic") {
  RunResult a = run_cli("scenario --d 3 --m 2 --format json");
  RunResult b = run_cli("scenario --d 3 --m 2 --format json");
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  CHECK(a.out.back() == '\n');

  nlohmann::json doc = nlohmann::json::parse(a.out);
  CHECK(doc.at("schema") == "hklat/1");
  CHECK(doc.at("command") == "scenario");
  CHECK(doc.at("fibration").at("fibration_class").at("name") == "h - 2e");
}

TEST_CASE("text format is the default and differs from json") {
  RunResult text = run_cli("reflect --d 2 --m 2");
  CHECK(text.rc == 0);
  CHECK(text.out.find("reflection.divisor_square = 8") != std::string::npos);
  CHECK(text.out.find('{') == std::string::npos);

  RunResult js = run_cli("reflect --d 2 --m 2 --format json");
  CHECK(js.rc == 0);
  CHECK(nlohmann::json::parse(js.out).at("command") == "reflect");
}

TEST_CASE("exit code 1 when the requested object does not exist") {
  RunResult missing = run_cli("isotropic --degree 4 --d 2 --format json");
  CHECK(missing.rc == 1);
  nlohmann::json doc = nlohmann::json::parse(missing.out);
  CHECK(doc.at("exists") == false);
  CHECK(doc.at("witness").is_null());

  RunResult found = run_cli("isotropic --degree 18 --d 5 --format json");
  CHECK(found.rc == 0);
  CHECK(nlohmann::json::parse(found.out).at("classes").size() == 2);

  RunResult no_fib = run_cli("scenario --d 2 --degree 6");
  CHECK(no_fib.rc == 1);
  CHECK(no_fib.out.empty());
}

TEST_CASE("exit code 2 on usage and precondition errors") {
  CHECK(run_cli("scenario --m 2").rc == 2);           // missing required --d
  CHECK(run_cli("scenario --d 2").rc == 2);           // neither --m nor --degree
  CHECK(run_cli("nonsense").rc == 2);                 // unknown subcommand
  CHECK(run_cli("").rc == 2);                         // no subcommand
  CHECK(run_cli("reflect --d 2 --m 2 --format xml").rc == 2);
  CHECK(run_cli("isotropic --degree pony --d 2").rc == 2);  // malformed int
  CHECK(run_cli("scenario --d 2 --m 3 --degree 8").rc == 2);  // conflict
  CHECK(run_cli("twisted --denominator 0").rc == 2);
}

TEST_CASE("config file supplies defaults and the command line overrides") {
  std::string path = "hklat_cli_test_config.ini";
  {
    std::ofstream cfg(path);
    cfg << "format=json\n";
  }
  RunResult js = run_cli("--config " + path + " bn --d 2 --m 2");
  CHECK(js.rc == 0);
  CHECK(nlohmann::json::parse(js.out).at("certificate").at("rho") == "1");

  RunResult overridden =
      run_cli("--config " + path + " --format text bn --d 2 --m 2");
  CHECK(overridden.rc == 0);
  CHECK(overridden.out.find("certificate.rho = 1") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("selftest passes quickly with small bounds and fails when faulted") {
  RunResult ok = run_cli(
      "selftest --grid-max 3 --degree-max 40 --coeff-bound 30 --samples 20");
  CHECK(ok.rc == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("7 checks, 0 failed") != std::string::npos);

  RunResult bad = run_cli(
      "selftest --grid-max 3 --degree-max 40 --coeff-bound 30 --samples 20 "
      "--inject-fault --format json");
  CHECK(bad.rc == 1);
  nlohmann::json doc = nlohmann::json::parse(bad.out);
  CHECK(doc.at("all_pass") == false);
  bool reflection_failed = false;
  for (const auto& c : doc.at("checks"))
    if (c.at("name") == "reflection_involution_isometry" && c.at("pass") == false)
      reflection_failed = true;
  CHECK(reflection_failed);
}

TEST_CASE("twisted subcommand round trip") {
  RunResult r = run_cli("twisted --denominator 4 --direction mixed --format json");
  CHECK(r.rc == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("twist").at("brauer_order") == "4");
  CHECK(doc.at("twist").at("b_field") == nlohmann::json::array({"1/3", "1/4"}));
}
