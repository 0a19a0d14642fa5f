#include <httplib.h>

#include <regex>

#include "invbench/agents/transport.hpp"
#include "invbench/core/errors.hpp"

namespace invbench {

struct HttpTransport::Impl {
  std::string base;
  std::string path;
};

HttpTransport::HttpTransport(const std::string& url) : impl_(std::make_unique<Impl>()) {
  static const std::regex form(R"(^(http://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, form))
    throw ProtocolError(ProtocolErrc::transport_failure, "unsupported agent url '" + url + "'");
  impl_->base = m[1];
  impl_->path = m[2].matched ? std::string(m[2]) : "/";
}

HttpTransport::~HttpTransport() = default;

namespace {

std::string post(const std::string& base, const std::string& path, const std::string& line,
                 std::chrono::milliseconds timeout) {
  httplib::Client client(base);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  const auto start = std::chrono::steady_clock::now();
  auto res = client.Post(path, line + "\n", "application/x-ndjson");
  if (!res) {
    const auto err = res.error();
    const bool late = std::chrono::steady_clock::now() - start >= timeout;
    if (err == httplib::Error::ConnectionTimeout || (err == httplib::Error::Read && late))
      throw ProtocolError(ProtocolErrc::timeout, "no reply within " + std::to_string(timeout.count()) + " ms");
    throw ProtocolError(ProtocolErrc::transport_failure, "http: " + httplib::to_string(err));
  }
  if (res->status != 200)
    throw ProtocolError(ProtocolErrc::transport_failure, "http status " + std::to_string(res->status));
  std::string body = res->body;
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
  if (body.empty()) throw ProtocolError(ProtocolErrc::stream_closed, "empty reply body");
  return body;
}

}  // namespace

std::string HttpTransport::request(const std::string& line, std::chrono::milliseconds timeout) {
  return post(impl_->base, impl_->path, line, timeout);
}

void HttpTransport::notify(const std::string& line) {
  httplib::Client client(impl_->base);
  client.set_connection_timeout(std::chrono::seconds(5));
  client.set_read_timeout(std::chrono::seconds(5));
  auto res = client.Post(impl_->path, line + "\n", "application/x-ndjson");
  if (!res) throw ProtocolError(ProtocolErrc::transport_failure, "http: " + httplib::to_string(res.error()));
}

}  // namespace invbench
