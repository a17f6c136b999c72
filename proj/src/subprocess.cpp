#include "jsonspace/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <csignal>
#include <cstring>

namespace jsonspace {

namespace {

// Writes race reads here: a child that emits output while we are still
// feeding its stdin would deadlock a write-then-read implementation once
// either pipe buffer fills, so all three pipes are driven by one poll loop.

void ignore_sigpipe_once() {
  static const bool done = [] {
    std::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)done;
}

void set_nonblocking(int fd) {
  int flags = fcntl(fd, F_GETFL, 0);
  if (flags >= 0) fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

void close_quiet(int& fd) {
  if (fd >= 0) {
    ::close(fd);
    fd = -1;
  }
}

}  // namespace

ProcessResult run_process(const std::vector<std::string>& argv,
                          const Bytes& input,
                          std::chrono::milliseconds timeout) {
  if (argv.empty()) throw ProcessError("empty command line");
  ignore_sigpipe_once();

  int in_pipe[2] = {-1, -1}, out_pipe[2] = {-1, -1}, err_pipe[2] = {-1, -1};
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
    for (int* p : {in_pipe, out_pipe, err_pipe}) {
      close_quiet(p[0]);
      close_quiet(p[1]);
    }
    throw ProcessError("pipe creation failed: " +
                       std::string(std::strerror(errno)));
  }

  pid_t pid = fork();
  if (pid < 0) {
    for (int* p : {in_pipe, out_pipe, err_pipe}) {
      close_quiet(p[0]);
      close_quiet(p[1]);
    }
    throw ProcessError("fork failed: " + std::string(std::strerror(errno)));
  }

  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    for (int* p : {in_pipe, out_pipe, err_pipe}) {
      ::close(p[0]);
      ::close(p[1]);
    }
    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    execvp(args[0], args.data());
    _exit(127);  // exec failed; 127 is the shell's command-not-found code
  }

  close_quiet(in_pipe[0]);
  close_quiet(out_pipe[1]);
  close_quiet(err_pipe[1]);
  int to_child = in_pipe[1];
  int from_child = out_pipe[0];
  int from_child_err = err_pipe[0];
  set_nonblocking(to_child);
  set_nonblocking(from_child);
  set_nonblocking(from_child_err);

  ProcessResult result;
  std::size_t written = 0;
  if (input.empty()) close_quiet(to_child);

  auto deadline = std::chrono::steady_clock::now() + timeout;
  char buffer[65536];

  while (to_child >= 0 || from_child >= 0 || from_child_err >= 0) {
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) {
      kill(pid, SIGKILL);
      result.timed_out = true;
      break;
    }

    pollfd fds[3];
    nfds_t count = 0;
    int write_slot = -1, read_slot = -1, err_slot = -1;
    if (to_child >= 0) {
      write_slot = static_cast<int>(count);
      fds[count++] = {to_child, POLLOUT, 0};
    }
    if (from_child >= 0) {
      read_slot = static_cast<int>(count);
      fds[count++] = {from_child, POLLIN, 0};
    }
    if (from_child_err >= 0) {
      err_slot = static_cast<int>(count);
      fds[count++] = {from_child_err, POLLIN, 0};
    }

    int ready = poll(fds, count, static_cast<int>(
                                     std::min<long long>(remaining.count(), 60000)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      kill(pid, SIGKILL);
      close_quiet(to_child);
      close_quiet(from_child);
      close_quiet(from_child_err);
      waitpid(pid, nullptr, 0);
      throw ProcessError("poll failed: " + std::string(std::strerror(errno)));
    }

    if (write_slot >= 0 && fds[write_slot].revents != 0) {
      if (fds[write_slot].revents & (POLLERR | POLLHUP | POLLNVAL)) {
        close_quiet(to_child);  // child stopped reading; not our error
      } else {
        std::size_t chunk = std::min<std::size_t>(input.size() - written,
                                                  sizeof buffer);
        ssize_t n = write(to_child, input.data() + written, chunk);
        if (n > 0) {
          written += static_cast<std::size_t>(n);
          if (written == input.size()) close_quiet(to_child);
        } else if (n < 0 && errno != EAGAIN && errno != EWOULDBLOCK &&
                   errno != EINTR) {
          close_quiet(to_child);
        }
      }
    }

    auto drain = [&](int slot, int& fd, auto&& sink) {
      if (slot < 0 || fds[slot].revents == 0) return;
      ssize_t n = read(fd, buffer, sizeof buffer);
      if (n > 0) {
        sink(buffer, static_cast<std::size_t>(n));
      } else if (n == 0 ||
                 (n < 0 && errno != EAGAIN && errno != EWOULDBLOCK &&
                  errno != EINTR)) {
        close_quiet(fd);
      }
    };
    drain(read_slot, from_child, [&](const char* p, std::size_t n) {
      result.output.insert(result.output.end(),
                           reinterpret_cast<const std::uint8_t*>(p),
                           reinterpret_cast<const std::uint8_t*>(p) + n);
    });
    drain(err_slot, from_child_err, [&](const char* p, std::size_t n) {
      result.error_output.append(p, n);
    });
  }

  close_quiet(to_child);
  close_quiet(from_child);
  close_quiet(from_child_err);

  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (result.timed_out) {
    result.exit_code = -1;
  } else if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = 128 + WTERMSIG(status);
  }
  return result;
}

}  // namespace jsonspace
