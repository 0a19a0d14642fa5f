#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>

#include "invbench/agents/transport.hpp"
#include "invbench/core/errors.hpp"

extern char** environ;

namespace invbench {

namespace {

// Writes to a dead child must fail with EPIPE rather than kill us.
void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

[[noreturn]] void fail(ProtocolErrc code, const std::string& what) { throw ProtocolError(code, what); }

}  // namespace

SubprocessTransport::SubprocessTransport(std::vector<std::string> argv) {
  if (argv.empty()) fail(ProtocolErrc::transport_failure, "empty agent command");
  ignore_sigpipe();
  int in[2];
  int out[2];
  if (::pipe(in) != 0) fail(ProtocolErrc::transport_failure, std::string("pipe: ") + std::strerror(errno));
  if (::pipe(out) != 0) {
    ::close(in[0]);
    ::close(in[1]);
    fail(ProtocolErrc::transport_failure, std::string("pipe: ") + std::strerror(errno));
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out[1], STDOUT_FILENO);
  for (int fd : {in[0], in[1], out[0], out[1]}) posix_spawn_file_actions_addclose(&actions, fd);

  std::vector<char*> args;
  for (auto& a : argv) args.push_back(a.data());
  args.push_back(nullptr);
  const int rc = ::posix_spawnp(&pid_, args[0], &actions, nullptr, args.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(in[0]);
  ::close(out[1]);
  if (rc != 0) {
    ::close(in[1]);
    ::close(out[0]);
    pid_ = -1;
    fail(ProtocolErrc::transport_failure, "cannot start '" + argv[0] + "': " + std::strerror(rc));
  }
  to_child_ = in[1];
  from_child_ = out[0];
}

SubprocessTransport::~SubprocessTransport() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  if (pid_ > 0) {
    ::kill(pid_, SIGKILL);
    ::waitpid(pid_, nullptr, 0);
  }
}

void SubprocessTransport::write_line(const std::string& line) {
  std::string data = line + "\n";
  std::size_t done = 0;
  while (done < data.size()) {
    const auto n = ::write(to_child_, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      if (errno == EPIPE) fail(ProtocolErrc::stream_closed, "agent closed its input");
      fail(ProtocolErrc::transport_failure, std::string("write: ") + std::strerror(errno));
    }
    done += static_cast<std::size_t>(n);
  }
}

std::string SubprocessTransport::read_line(std::chrono::milliseconds timeout) {
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + timeout;
  for (;;) {
    if (auto pos = buffer_.find('\n'); pos != std::string::npos) {
      std::string line = buffer_.substr(0, pos);
      buffer_.erase(0, pos + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now());
    if (left.count() <= 0) fail(ProtocolErrc::timeout, "no reply within " + std::to_string(timeout.count()) + " ms");
    pollfd p{from_child_, POLLIN, 0};
    const int rc = ::poll(&p, 1, static_cast<int>(left.count()));
    if (rc < 0) {
      if (errno == EINTR) continue;
      fail(ProtocolErrc::transport_failure, std::string("poll: ") + std::strerror(errno));
    }
    if (rc == 0) continue;
    char chunk[4096];
    const auto n = ::read(from_child_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      fail(ProtocolErrc::transport_failure, std::string("read: ") + std::strerror(errno));
    }
    if (n == 0) fail(ProtocolErrc::stream_closed, "agent closed its output");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

std::string SubprocessTransport::request(const std::string& line, std::chrono::milliseconds timeout) {
  write_line(line);
  return read_line(timeout);
}

void SubprocessTransport::notify(const std::string& line) { write_line(line); }

}  // namespace invbench
