#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

// stdout only; stderr is discarded unless merge is set
Run run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(BNCONV_CLI_PATH) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("eval prints the adjoint only") {
  const Run r = run("eval \"delta(7)*delta(1) - sky\" --genus 5");
  CHECK(r.code == 0);
  CHECK(r.out == "V(w1+w7)  dim 63  delta_{κ+C-C}\n");
}

TEST_CASE("eval json") {
  const Run r = run("--genus 3 --format json eval \"theta * theta\"");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == "bnconv/1");
  CHECK(j["group"] == "SL(4)");
  CHECK(j["class"].size() == 3);
  CHECK(j["class"][0]["dim"] == 1);
  CHECK(j["class"][2]["weight"] == json::array({0, 2, 0}));
}

TEST_CASE("verify exit codes") {
  for (int g = 3; g <= 8; ++g) CHECK(run("verify --genus " + std::to_string(g)).code == 0);
  const Run h = run("verify --genus 3 --hyperelliptic");
  CHECK(h.code == 0);
  CHECK(h.out.find("skipped (out of scope)") != std::string::npos);
  const Run g2 = run("verify --genus 2", true);
  CHECK(g2.code == 2);
  CHECK(g2.out.find("g >= 3") != std::string::npos);
}

TEST_CASE("verify json structure") {
  const Run r = run("verify --genus 5 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == "bnconv/1");
  CHECK(j["command"] == "verify");
  CHECK(j["genus"] == 5);
  CHECK(j["passed"] == true);
  REQUIRE(j["steps"].is_array());
  CHECK(j["steps"].size() == 6);
  for (const auto& s : j["steps"]) {
    CHECK(s["status"] == "pass");
    CHECK(s.contains("id"));
    CHECK(s.contains("details"));
  }
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run("eval \"theta *\" --genus 3").code == 2);
  CHECK(run("eval \"delta(9)\" --genus 3").code == 2);
  CHECK(run("eval theta").code == 2);
  CHECK(run("--genus 3").code == 2);
  CHECK(run("--genus 3 --format xml verify").code == 2);
  CHECK(run("--genus 13 verify").code == 2);
  const Run e = run("--genus 3 --format json eval \"theta *\"");
  CHECK(e.code == 2);
  const json j = json::parse(e.out);
  CHECK(j["error"].get<std::string>().find("offset 7") != std::string::npos);
}

TEST_CASE("poincare and ih") {
  const Run p = run("--genus 2 --format json poincare sym 2");
  REQUIRE(p.code == 0);
  const json j = json::parse(p.out);
  CHECK(j["betti"] == json{{"0", 1}, {"1", 4}, {"2", 7}, {"3", 4}, {"4", 1}});
  const Run ih = run("--genus 5 --format json ih 4");
  REQUIRE(ih.code == 0);
  CHECK(json::parse(ih.out)["betti"]["7"] == 10);
  CHECK(run("--genus 5 ih 5").code == 2);
}

TEST_CASE("--out writes the file instead of stdout") {
  const auto path = std::filesystem::temp_directory_path() / "bnconv_cli_test.json";
  std::filesystem::remove(path);
  const Run r = run("--genus 3 --format json --out " + path.string() + " eval sky");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(json::parse(ss.str())["class"][0]["name"] == "skyscraper(κ)");
  std::filesystem::remove(path);
}
