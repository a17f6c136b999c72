#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jsonspace/bytes.hpp"

namespace jsonspace {

/// Outcome of one child process run.
struct ProcessResult {
  int exit_code = -1;      // 127 when the executable could not be spawned
  bool timed_out = false;  // killed after the deadline
  Bytes output;            // captured stdout (possibly partial on failure)
  std::string error_output;  // captured stderr, for diagnostics

  bool ok() const { return exit_code == 0 && !timed_out; }
};

/// Thrown only for local plumbing failures (pipe/fork exhaustion), never
/// for child failures; those are reported through ProcessResult.
class ProcessError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Runs argv[0] with the given arguments, streams `input` to its stdin and
/// captures stdout/stderr. Writing and reading are interleaved so a child
/// that produces output while we are still feeding input cannot deadlock
/// the pipe pair. On timeout the child is killed with SIGKILL and the
/// partial output kept. A missing executable surfaces as exit code 127.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const Bytes& input,
                          std::chrono::milliseconds timeout);

}  // namespace jsonspace
