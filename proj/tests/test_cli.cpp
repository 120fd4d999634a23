// End-to-end tests of the command line tool: exit codes, determinism, and
// a few smoke runs over the golden files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct run_result {
  int status = -1;
  std::string output;
};

run_result run(const std::string& args) {
  std::string cmd = std::string(LOGFLOER_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  run_result r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe))
    r.output.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string golden(const std::string& name) {
  return std::string(LOGFLOER_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("help exits cleanly") {
  run_result r = run("--help");
  CHECK(r.status == 0);
  CHECK(r.output.find("Usage") != std::string::npos);
}

TEST_CASE("missing subcommand is a usage error") {
  CHECK(run("").status == 2);
  CHECK(run("model nosuchmodel").status != 0);
}

TEST_CASE("model output is valid json and deterministic") {
  run_result a = run("model wiggle --k 4 --unit-areas");
  run_result b = run("model wiggle --k 4 --unit-areas");
  CHECK(a.status == 0);
  CHECK(a.output == b.output);
  auto j = nlohmann::json::parse(a.output);
  CHECK(j.contains("rotation"));
  CHECK(j.contains("pairing"));
  CHECK(j["schema_version"] == 1);
}

TEST_CASE("validate accepts the goldens") {
  for (const std::string name :
       {"k4_circle.json", "necklace3.json", "interval.json",
        "shared_crossed.json"}) {
    run_result r = run("validate " + golden(name));
    CHECK(r.status == 0);
  }
}

TEST_CASE("validate rejects a missing file") {
  CHECK(run("validate /nonexistent/nowhere.json").status == 1);
}

TEST_CASE("self floer run reports the expected ranks") {
  run_result r = run("floer " + golden("k4_circle.json"));
  CHECK(r.status == 0);
  CHECK(r.output.find("rank") != std::string::npos);
}

TEST_CASE("novikov coefficients work end to end") {
  run_result r =
      run("floer --coefficients novikov " + golden("k4_circle.json"));
  CHECK(r.status == 0);
}

TEST_CASE("classification pipeline runs") {
  run_result g = run("classify " + golden("necklace3.json"));
  CHECK(g.status == 0);
  run_result e = run("enumerate --genus 0 --max-circles 3");
  CHECK(e.status == 0);
}

TEST_CASE("crosscheck passes on the pushed-off circle") {
  run_result p = run("pushoff " + golden("k4_circle.json") + " --out " +
                     std::string(LOGFLOER_TMP_DIR) + "/pushed.json");
  CHECK(p.status == 0);
  run_result c =
      run("crosscheck " + std::string(LOGFLOER_TMP_DIR) + "/pushed.json");
  CHECK(c.status == 0);
}
