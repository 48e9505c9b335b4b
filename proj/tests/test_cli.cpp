#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(BOMBSQUAD_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.stdout_text.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string instance_path(const char* name) {
  return std::string(BOMBSQUAD_SOURCE_DIR) + "/instances/" + name;
}

}  // namespace

TEST_CASE("cli run reports the documented ratios") {
  const CliResult argmax = run_cli("run " + instance_path("theorem3_argmax.json") + " --alg one-axis");
  CHECK(argmax.exit_code == 0);
  CHECK(argmax.stdout_text.find("1.52240") != std::string::npos);

  const CliResult offline = run_cli("run " + instance_path("fast_at_source.json") + " --alg offline");
  CHECK(offline.exit_code == 0);
  CHECK(offline.stdout_text.find("\"ratio\": 1.0") != std::string::npos);

  const CliResult family =
      run_cli("run " + instance_path("discoverable_eps1e6.json") + " --alg discoverable");
  CHECK(family.exit_code == 0);
  CHECK(family.stdout_text.find("3.7499") != std::string::npos);
}

TEST_CASE("cli output is byte-identical across runs") {
  const std::string args = "run " + instance_path("theorem3_argmax.json") + " --alg one-axis";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.stdout_text == second.stdout_text);
}

TEST_CASE("cli exit codes distinguish failure classes") {
  CHECK(run_cli("run /nonexistent.json --alg offline").exit_code == 2);
  CHECK(run_cli("run " + instance_path("fast_at_source.json") + " --alg bogus").exit_code == 2);
  // Knowledge-model mismatch is invalid input.
  CHECK(run_cli("run " + instance_path("fast_at_source.json") + " --alg discoverable").exit_code == 2);
  // Bounded zigzag schedule under a far boundary never terminates.
  CHECK(run_cli("run " + instance_path("single_robot_zigzag.json") +
                " --alg generic-zigzag --xs 1,2,3")
            .exit_code == 4);
}

TEST_CASE("cli search on a small visible domain stays under the tight bound") {
  const CliResult result = run_cli(
      "search --alg visible-wait --budget 120000 --jobs 2 "
      "--domain " +
      instance_path("../instances") + "/../instances/small_domain.json");
  // Missing domain file is invalid input.
  CHECK(result.exit_code == 2);

  const CliResult ok = run_cli("search --alg visible-wait --budget 60000 --jobs 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.stdout_text.find("best_ratio") != std::string::npos);
}
