#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + FOCKDUAL_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli verify emits the json schema") {
  const auto r = run("verify --d 4 --k 1 --duality sp-sp --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimensionSum"] == 16);
  CHECK(j["allPass"] == true);
  CHECK(j["pairs"].size() == 3);
}

TEST_CASE("cli enumerate lists pairs") {
  const auto r = run("enumerate --d 3 --k 1 --duality o-o --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["pairs"].size() == 2);
  CHECK(j["pairs"][0]["dimD"] == 1);
  CHECK(j["pairs"][0]["dimK"] == 2);
  CHECK(j["pairs"][1]["dimD"] == 3);
  CHECK(j["pairs"][1]["dimK"] == 2);
}

TEST_CASE("cli defaults to text and repeats byte for byte") {
  const auto a = run("verify --d 3 --k 2 --duality o-Pin");
  const auto b = run("verify --d 3 --k 2 --duality o-Pin");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("dimensionSum 64") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run("verify --d 4 --duality sp-sp").code == 2);
  CHECK(run("verify --d 3 --k 1 --duality sp-sp").code == 2);
  CHECK(run("verify 4 1").code == 2);
  CHECK(run("verify --d 7 --k 3 --duality o-o").code == 3);
  CHECK(run("verify --d 4 --k 2 --duality o-o --mode-limit 6").code == 3);
  CHECK(run("pin-check --d 3 --k 1").code == 0);
  CHECK(run("verify --d 2 --k 1 --duality o-o --output /nonexistent/dir/x.json").code == 3);
}

TEST_CASE("cli ph-check names every identity") {
  const auto r = run("ph-check --l 1");
  CHECK(r.out.find("C3_equals_C2: ") != std::string::npos);
  CHECK(r.out.find("C2_commutes_L: pass") != std::string::npos);
  CHECK((r.code == 0 || r.code == 1));
}
