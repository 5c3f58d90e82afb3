#include <gtest/gtest.h>

#include <future>

#include "mock_server.hpp"
#include "pronounflow/remote_backend.hpp"

using namespace pronounflow;
using namespace std::chrono_literals;

namespace {

const std::string kCatDog = "The cat looked at the big dog, and <MASK> was terrified.";

RemoteBackend::Options opts(const std::string& url) {
  RemoteBackend::Options o;
  o.url = url;
  o.timeout = 2000ms;
  return o;
}

}  // namespace

TEST(RemoteBackend, PredictsAndFilters) {
  pftest::MockModelServer server;
  RemoteBackend b(opts(server.url()));
  auto p = b.predict(kCatDog, 5);
  // "table" is outside /vocab and is dropped.
  EXPECT_EQ(p, (std::vector<Prediction>{{"it", 0.6}, {"he", 0.3}}));
  EXPECT_EQ(b.predict(kCatDog, 1).size(), 1u);
  EXPECT_EQ(b.model_name(), "mock-fill-mask");
  EXPECT_EQ(b.descriptor().kind, BackendKind::remote);
}

TEST(RemoteBackend, VocabularyDrivesSupports) {
  pftest::MockModelServer server;
  RemoteBackend b(opts(server.url()));
  EXPECT_TRUE(b.supports("His"));
  EXPECT_FALSE(b.supports("him"));
  EXPECT_FALSE(b.supports("xyr"));
  b.supports("she");
  EXPECT_EQ(server.vocab_calls.load(), 1);
}

TEST(RemoteBackend, ConfiguredVocabularySkipsServer) {
  pftest::MockModelServer server;
  auto o = opts(server.url());
  o.vocabulary = std::set<std::string>{"it"};
  RemoteBackend b(o);
  EXPECT_EQ(b.predict(kCatDog, 2), (std::vector<Prediction>{{"it", 0.6}}));
  EXPECT_EQ(server.vocab_calls.load(), 0);
}

TEST(RemoteBackend, ScoresClampedAndOrdered) {
  pftest::MockModelServer::Config cfg;
  cfg.reply = {{"she", 0.2}, {"HE", 1.4}, {"it", 0.2}};
  pftest::MockModelServer server(cfg);
  RemoteBackend b(opts(server.url()));
  EXPECT_EQ(b.predict(kCatDog, 3), (std::vector<Prediction>{{"he", 1.0}, {"it", 0.2}, {"she", 0.2}}));
}

TEST(RemoteBackend, ContractCheckedBeforeSending) {
  pftest::MockModelServer server;
  RemoteBackend b(opts(server.url()));
  EXPECT_THROW(b.predict("no marker", 2), ContractViolation);
  EXPECT_EQ(server.predict_calls.load(), 0);
}

TEST(RemoteBackend, UnreachableServer) {
  RemoteBackend b(opts("http://127.0.0.1:" + std::to_string(pftest::closed_port())));
  EXPECT_FALSE(b.healthy());
  EXPECT_THROW(b.predict(kCatDog, 2), TransportError);
  EXPECT_THROW(b.supports("he"), TransportError);
}

TEST(RemoteBackend, BadResponseIsTransportError) {
  pftest::MockModelServer::Config cfg;
  cfg.broken_json = true;
  pftest::MockModelServer server(cfg);
  RemoteBackend b(opts(server.url()));
  EXPECT_TRUE(b.healthy());
  EXPECT_THROW(b.predict(kCatDog, 2), TransportError);
}

TEST(RemoteBackend, HttpErrorIsTransportError) {
  pftest::MockModelServer::Config cfg;
  cfg.predict_status = 503;
  pftest::MockModelServer server(cfg);
  RemoteBackend b(opts(server.url()));
  EXPECT_THROW(b.predict(kCatDog, 2), TransportError);
}

TEST(RemoteBackend, MockRejectsMissingMarker) {
  pftest::MockModelServer server;
  httplib::Client raw(server.url());
  auto res = raw.Post("/predict", R"({"text": "no marker", "top_k": 2})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
}

TEST(RemoteBackend, TimeoutIsTransportError) {
  pftest::MockModelServer::Config cfg;
  cfg.delay = 600ms;
  pftest::MockModelServer server(cfg);
  auto o = opts(server.url());
  o.timeout = 100ms;
  o.vocabulary = std::set<std::string>{"it", "he"};
  RemoteBackend b(o);
  EXPECT_THROW(b.predict(kCatDog, 2), TransportError);
}

TEST(RemoteBackend, InFlightIsBounded) {
  pftest::MockModelServer::Config cfg;
  cfg.delay = 40ms;
  pftest::MockModelServer server(cfg);
  auto o = opts(server.url());
  o.max_in_flight = 2;
  RemoteBackend b(o);
  ASSERT_TRUE(b.supports("it"));
  std::vector<std::future<std::vector<Prediction>>> calls;
  for (int i = 0; i < 8; ++i) calls.push_back(std::async(std::launch::async, [&] { return b.predict(kCatDog, 2); }));
  for (auto& c : calls) EXPECT_EQ(c.get().size(), 2u);
  EXPECT_EQ(server.predict_calls.load(), 8);
  EXPECT_LE(server.max_in_flight.load(), 2);
  EXPECT_GE(server.max_in_flight.load(), 1);
}

TEST(RemoteBackend, RequiresUrl) { EXPECT_THROW(RemoteBackend(RemoteBackend::Options{}), ConfigError); }
