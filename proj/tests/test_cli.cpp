// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "support.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_tool(const std::string& args) {
  std::string command = std::string(VKG_TOOL_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_file(const std::string& name) {
  return vkgtest::data_dir() + "/" + name + ".json";
}

} // namespace

TEST_CASE("pi1 subcommand on the corpus") {
  RunResult circle = run_tool("pi1 " + data_file("circle") + " --base-set all");
  CHECK(circle.exit_code == 0);
  CHECK(circle.output.find("free_rank=1 torsion=[]") != std::string::npos);

  RunResult point = run_tool("pi1 " + data_file("point"));
  CHECK(point.exit_code == 0);
  CHECK(point.output.find("generators (0)") != std::string::npos);

  RunResult rp2 = run_tool("pi1 " + data_file("rp2"));
  CHECK(rp2.exit_code == 0);
  CHECK(rp2.output.find("free_rank=0 torsion=[2]") != std::string::npos);
}

TEST_CASE("vk subcommand exit codes") {
  RunResult pass = run_tool("vk " + data_file("circle") + " --mode set --base-set v0,v1");
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("status: pass") != std::string::npos);

  RunResult hyp = run_tool("vk " + data_file("circle") + " --mode point --base-set v0");
  CHECK(hyp.exit_code == 2);
  CHECK(hyp.output.find("over v1") != std::string::npos);

  RunResult torus = run_tool("vk " + data_file("torus") + " --mode all");
  CHECK(torus.exit_code == 0);
  CHECK(torus.output.find("free_rank=2 torsion=[]") != std::string::npos);

  RunResult missing = run_tool("vk /nonexistent.json");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("crosscheck subcommand") {
  RunResult agree = run_tool("crosscheck " + data_file("circle"));
  CHECK(agree.exit_code == 0);
  CHECK(agree.output.find("AGREE") != std::string::npos);

  RunResult absolute = run_tool("crosscheck " + data_file("wedge"));
  CHECK(absolute.exit_code == 0);
  CHECK(absolute.output.find("AGREE (absolute)") != std::string::npos);

  // corrupted document: validation error
  std::string bad_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/vkg_bad_instance.json";
  {
    std::ofstream bad(bad_path);
    bad << "{\"complex\": {\"vertices\": [\"v\"]}, \"cover\": {}}";
  }
  RunResult invalid = run_tool("crosscheck " + bad_path);
  CHECK(invalid.exit_code == 1);
  std::remove(bad_path.c_str());
}

TEST_CASE("identical invocations produce byte-identical reports") {
  for (const char* args : {"pi1", "vk", "crosscheck"}) {
    std::string invocation = std::string(args) + " " + data_file("circle");
    RunResult first = run_tool(invocation);
    RunResult second = run_tool(invocation);
    CAPTURE(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
  }
  // seeded trials are deterministic too
  RunResult t1 = run_tool("vk " + data_file("circle_double") + " --trials 5 --seed 11");
  RunResult t2 = run_tool("vk " + data_file("circle_double") + " --trials 5 --seed 11");
  CHECK(t1.output == t2.output);
}

TEST_CASE("summary block is machine readable") {
  RunResult r = run_tool("vk " + data_file("klein"));
  CHECK(r.exit_code == 0);
  auto pos = r.output.find("----- SUMMARY -----");
  REQUIRE(pos != std::string::npos);
  std::string tail = r.output.substr(pos + std::string("----- SUMMARY -----\n").size());
  nlohmann::json summary = nlohmann::json::parse(tail);
  CHECK(summary.at("status") == "pass");
  CHECK(summary.at("exit") == 0);
  auto inv = summary.at("fingerprints").at("v").at("coequalizer").at("invariants");
  CHECK(inv.at("free_rank") == 1);
  CHECK(inv.at("torsion") == nlohmann::json::array({2}));
}
