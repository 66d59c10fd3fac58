#pragma once

#include <memory>
#include <string>
#include <thread>

#include "pa/api.hpp"

namespace pa::api {

/// HTTP/JSON front for a Service. Every request is forwarded to Service::handle;
/// one JSON log line per request goes to standard output when logging is on.
class HttpServer {
 public:
  HttpServer(Service& service, bool request_log);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket; port 0 picks an ephemeral port. Returns the bound port.
  int bind(const std::string& host, int port);

  /// Serves on the calling thread until stop().
  void run();

  /// Serves on a background thread.
  void start();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::thread thread_;
};

}  // namespace pa::api
