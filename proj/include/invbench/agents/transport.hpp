#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <vector>

#include <sys/types.h>

namespace invbench {

// A line-oriented channel to an external agent. Failures raise
// ProtocolError with timeout, stream_closed or transport_failure.
class Transport {
 public:
  virtual ~Transport() = default;
  // Sends one line and waits for exactly one reply line.
  virtual std::string request(const std::string& line, std::chrono::milliseconds timeout) = 0;
  // Sends one line that expects no reply.
  virtual void notify(const std::string& line) = 0;
};

// Child process speaking over its standard streams. The child is killed
// when the transport is destroyed.
class SubprocessTransport final : public Transport {
 public:
  explicit SubprocessTransport(std::vector<std::string> argv);
  ~SubprocessTransport() override;
  SubprocessTransport(const SubprocessTransport&) = delete;
  SubprocessTransport& operator=(const SubprocessTransport&) = delete;

  std::string request(const std::string& line, std::chrono::milliseconds timeout) override;
  void notify(const std::string& line) override;

 private:
  void write_line(const std::string& line);
  std::string read_line(std::chrono::milliseconds timeout);

  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

// Each message is POSTed to `url`; the response body is the reply line.
class HttpTransport final : public Transport {
 public:
  explicit HttpTransport(const std::string& url);
  ~HttpTransport() override;

  std::string request(const std::string& line, std::chrono::milliseconds timeout) override;
  void notify(const std::string& line) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace invbench
