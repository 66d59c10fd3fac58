#include "pa/http_server.hpp"

#include <httplib.h>

#include <chrono>
#include <cstdio>
#include <mutex>

#include "pa/error.hpp"

namespace pa::api {
namespace {

std::mutex log_mutex;

void log_request(const httplib::Request& req, int status, double millis) {
  const auto line = nlohmann::json{{"ts", format_timestamp(system_clock()())},
                                   {"method", req.method},
                                   {"path", req.path},
                                   {"status", status},
                                   {"duration_ms", millis}}
                        .dump();
  std::lock_guard lock(log_mutex);
  std::fputs(line.c_str(), stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
}

}  // namespace

struct HttpServer::Impl {
  Impl(Service& s, bool log) : service(s), request_log(log) {}

  Service& service;
  bool request_log;
  httplib::Server server;

  void dispatch(const httplib::Request& req, httplib::Response& res) {
    const auto started = std::chrono::steady_clock::now();
    Request request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [k, v] : req.params) request.query[k] = v;
    request.body = req.body;
    request.authorization = req.get_header_value("Authorization");
    const auto response = service.handle(request);
    res.status = response.status;
    res.set_content(response.body.dump(), "application/json");
    if (request_log) {
      const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - started;
      log_request(req, response.status, took.count());
    }
  }
};

HttpServer::HttpServer(Service& service, bool request_log)
    : impl_(std::make_unique<Impl>(service, request_log)) {
  const auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    impl_->dispatch(req, res);
  };
  const char* pattern = R"(/api(/.*)?)";
  impl_->server.Get(pattern, handler);
  impl_->server.Post(pattern, handler);
  impl_->server.Put(pattern, handler);
  impl_->server.Delete(pattern, handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error(Errc::io_error, "cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(Errc::io_error, "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::start() {
  thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void HttpServer::stop() {
  impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace pa::api
