// Copyright 2026 The Sylla Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Out-of-vocabulary fallback through an external G2P command.
//
// Contract: the command reads words on stdin, one per line, and writes one
// space-separated phone sequence per line on stdout, in the same order.

#ifndef SYLLA_G2P_HPP
#define SYLLA_G2P_HPP

#include <fcntl.h>
#include <poll.h>
#include <pthread.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylla/lexicon.hpp"

namespace sylla {

struct FallbackConfig {
  std::string command;  ///< Run through /bin/sh -c; empty disables the fallback.
  PhoneSet phoneset = PhoneSet::cmu_arpabet;

  bool enabled() const { return !command.empty(); }
};

struct FallbackResult {
  std::optional<Pronunciation> pronunciation;
  std::string diagnostic;  ///< Set when no pronunciation is available.

  bool available() const { return pronunciation.has_value(); }
};

struct CommandOutput {
  int exit_status = -1;  ///< -1 when the process did not exit normally.
  std::string out;
};

namespace detail {

inline void close_fd(int& fd) {
  if (fd >= 0) {
    ::close(fd);
    fd = -1;
  }
}

}  // namespace detail

/// Runs `command` through the shell, feeding `input` on stdin and capturing
/// stdout. Throws Error(io) when the process cannot be started.
inline CommandOutput run_command(const std::string& command, std::string_view input) {
  int to_child[2];
  int from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) != 0) throw Error(ErrorKind::io, "pipe: " + std::string(std::strerror(errno)));
  if (::pipe2(from_child, O_CLOEXEC) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw Error(ErrorKind::io, "pipe: " + std::string(std::strerror(errno)));
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) ::close(fd);
    throw Error(ErrorKind::io, "fork: " + std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) ::close(fd);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  int write_fd = to_child[1];
  int read_fd = from_child[0];
  ::close(to_child[0]);
  ::close(from_child[1]);
  ::fcntl(write_fd, F_SETFL, ::fcntl(write_fd, F_GETFL) | O_NONBLOCK);

  // The child may exit before reading all input; keep SIGPIPE blocked for
  // this thread only and discard it afterwards.
  sigset_t pipe_set;
  sigset_t previous_mask;
  sigemptyset(&pipe_set);
  sigaddset(&pipe_set, SIGPIPE);
  ::pthread_sigmask(SIG_BLOCK, &pipe_set, &previous_mask);

  CommandOutput result;
  std::size_t written = 0;
  if (input.empty()) detail::close_fd(write_fd);
  char buffer[4096];
  while (read_fd >= 0) {
    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {read_fd, POLLIN, 0};
    if (write_fd >= 0) fds[count++] = {write_fd, POLLOUT, 0};
    if (::poll(fds, count, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (write_fd >= 0 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n = ::write(write_fd, input.data() + written, input.size() - written);
      if (n > 0) written += static_cast<std::size_t>(n);
      if (n < 0 && errno != EAGAIN && errno != EINTR) written = input.size();
      if (written >= input.size()) detail::close_fd(write_fd);
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      const ssize_t n = ::read(read_fd, buffer, sizeof buffer);
      if (n > 0) {
        result.out.append(buffer, static_cast<std::size_t>(n));
      } else if (n == 0 || (errno != EINTR && errno != EAGAIN)) {
        detail::close_fd(read_fd);
      }
    }
  }
  detail::close_fd(write_fd);
  if (!sigismember(&previous_mask, SIGPIPE)) {
    sigset_t pending;
    sigpending(&pending);
    if (sigismember(&pending, SIGPIPE)) {
      const timespec zero{0, 0};
      ::sigtimedwait(&pipe_set, nullptr, &zero);
    }
    ::pthread_sigmask(SIG_SETMASK, &previous_mask, nullptr);
  }
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  result.exit_status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

/// Asks the configured command for the pronunciations of `words`. The
/// result has one entry per word, in order.
inline std::vector<FallbackResult> g2p_fallback_batch(std::span<const std::string> words,
                                                      const FallbackConfig& config) {
  std::vector<FallbackResult> results(words.size());
  if (words.empty()) return results;
  const auto fail_all = [&](const std::string& why) {
    for (auto& r : results) r.diagnostic = why;
    return results;
  };
  if (!config.enabled()) return fail_all("no fallback G2P configured");
  std::string input;
  for (const auto& w : words) {
    if (w.find('\n') != std::string::npos) return fail_all("word contains a newline");
    input += w;
    input.push_back('\n');
  }
  CommandOutput output;
  try {
    output = run_command(config.command, input);
  } catch (const Error& e) {
    return fail_all(e.what());
  }
  if (output.exit_status != 0) {
    return fail_all("fallback command exited with status " + std::to_string(output.exit_status));
  }
  std::vector<std::string> lines;
  std::istringstream stream(output.out);
  for (std::string line; std::getline(stream, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (lines.size() != words.size()) {
    return fail_all("fallback command returned " + std::to_string(lines.size()) +
                    " lines for " + std::to_string(words.size()) + " words");
  }
  for (std::size_t k = 0; k < words.size(); ++k) {
    auto pron = parse_pronunciation(utf8::ensure_utf8(lines[k]), config.phoneset);
    if (pron) {
      results[k].pronunciation = std::move(pron);
    } else {
      results[k].diagnostic = "fallback command returned no phones for '" + words[k] + "'";
    }
  }
  return results;
}

inline FallbackResult g2p_fallback(const std::string& word, const FallbackConfig& config) {
  return g2p_fallback_batch(std::span<const std::string>(&word, 1), config).front();
}

}  // namespace sylla

#endif  // SYLLA_G2P_HPP
