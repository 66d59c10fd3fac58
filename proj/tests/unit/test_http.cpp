#include <gtest/gtest.h>

#include <httplib.h>

#include "api_flow.hpp"
#include "pa/embedded_store.hpp"
#include "pa/http_server.hpp"

namespace pa {
namespace {

using nlohmann::json;

class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    port = server.bind("127.0.0.1", 0);
    ASSERT_GT(port, 0);
    server.start();
  }
  void TearDown() override { server.stop(); }

  EmbeddedStore store;
  api::Service service{store, ServiceConfig{}};
  api::HttpServer server{service, false};
  int port = 0;
};

TEST_F(HttpTest, HealthOverTheWire) {
  httplib::Client cli("127.0.0.1", port);
  const auto res = cli.Get("/api/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(json::parse(res->body).at("status"), "ok");
}

TEST_F(HttpTest, ErrorsAreJson) {
  httplib::Client cli("127.0.0.1", port);
  auto res = cli.Post("/api/candidates", "{not json", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(json::parse(res->body).at("error").at("code"), "validation_failed");
  res = cli.Get("/api/candidates/cand-00000001");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 401);
}

TEST_F(HttpTest, QueryAndBearerForwarded) {
  httplib::Client cli("127.0.0.1", port);
  auto res = cli.Post("/api/employers",
                      json{{"business_name", "Acme"},
                           {"contact", {{"name", "a"}, {"phone", "1"}, {"email", "a@b.c"}}}}
                          .dump(),
                      "application/json");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 201);
  const std::string token = json::parse(res->body).at("token");
  res = cli.Get("/api/notifications?limit=1", {{"Authorization", "Bearer " + token}});
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body).at("limit"), 1);
}

}  // namespace
}  // namespace pa
