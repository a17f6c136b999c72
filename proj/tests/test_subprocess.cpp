#include <doctest.h>

#include <chrono>
#include <random>
#include <string>

#include "jsonspace/subprocess.hpp"
#include "test_support.hpp"

using namespace jsonspace;
using namespace std::chrono_literals;

namespace {

Bytes bytes_of(std::string_view text) {
  return Bytes(text.begin(), text.end());
}

std::string text_of(const Bytes& data) {
  return std::string(data.begin(), data.end());
}

}  // namespace

TEST_CASE("cat echoes stdin back") {
  ProcessResult result = run_process({"cat"}, bytes_of("hello\n"), 10s);
  CHECK(result.ok());
  CHECK(result.exit_code == 0);
  CHECK(text_of(result.output) == "hello\n");
  CHECK(result.error_output.empty());
}

TEST_CASE("large payloads stream through without deadlock") {
  std::mt19937 rng(7);
  Bytes payload(1 << 20);
  for (auto& b : payload) b = static_cast<std::uint8_t>(rng());
  ProcessResult result = run_process({"cat"}, payload, 30s);
  REQUIRE(result.ok());
  CHECK(result.output == payload);
}

TEST_CASE("the whole input reaches the child") {
  Bytes payload(300000, std::uint8_t{'x'});
  ProcessResult result = run_process({"wc", "-c"}, payload, 30s);
  REQUIRE(result.ok());
  std::string counted = text_of(result.output);
  CHECK(counted.find("300000") != std::string::npos);
}

TEST_CASE("child exit codes are reported") {
  CHECK(run_process({"false"}, {}, 10s).exit_code == 1);
  CHECK(run_process({"sh", "-c", "exit 42"}, {}, 10s).exit_code == 42);
}

TEST_CASE("a missing executable reads as exit 127") {
  ProcessResult result = run_process({"/nonexistent/tool"}, {}, 10s);
  CHECK_FALSE(result.ok());
  CHECK(result.exit_code == 127);
}

TEST_CASE("signal death maps to 128 plus the signal") {
  ProcessResult result = run_process({"sh", "-c", "kill -9 $$"}, {}, 10s);
  CHECK_FALSE(result.ok());
  CHECK(result.exit_code == 137);
}

TEST_CASE("timeouts kill the child and flag the result") {
  auto start = std::chrono::steady_clock::now();
  ProcessResult result = run_process({"sleep", "10"}, {}, 200ms);
  auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(result.timed_out);
  CHECK_FALSE(result.ok());
  CHECK(result.exit_code == -1);
  CHECK(elapsed < 5s);
}

TEST_CASE("stderr is captured separately") {
  ProcessResult result =
      run_process({"sh", "-c", "echo out; echo err >&2"}, {}, 10s);
  REQUIRE(result.ok());
  CHECK(text_of(result.output) == "out\n");
  CHECK(result.error_output == "err\n");
}

TEST_CASE("partial output survives a timeout") {
  ProcessResult result =
      run_process({"sh", "-c", "echo early; sleep 10"}, {}, 500ms);
  CHECK(result.timed_out);
  CHECK(text_of(result.output) == "early\n");
}

TEST_CASE("a child that ignores stdin still finishes cleanly") {
  Bytes payload(1 << 20, std::uint8_t{'y'});
  ProcessResult result = run_process({"true"}, payload, 10s);
  CHECK(result.exit_code == 0);
}
