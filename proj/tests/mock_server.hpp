#pragma once

// In-process fill-mask server speaking the remote backend's wire protocol.

#include <atomic>
#include <chrono>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "pronounflow/fillmask.hpp"

namespace pftest {

class MockModelServer {
 public:
  struct Config {
    std::vector<std::string> vocab{"he", "she", "it", "they", "his", "her", "its", "their", "them"};
    // Returned (untruncated) for every text without its own entry.
    std::vector<pronounflow::Prediction> reply{{"it", 0.6}, {"he", 0.3}, {"table", 0.05}};
    std::map<std::string, std::vector<pronounflow::Prediction>> entries;
    std::chrono::milliseconds delay{0};
    bool broken_json = false;
    int predict_status = 200;
  };

  MockModelServer() : MockModelServer(Config()) {}

  explicit MockModelServer(Config cfg) : cfg_(std::move(cfg)) {
    server_.Get("/health", [](const httplib::Request&, httplib::Response& res) { res.set_content("ok", "text/plain"); });
    server_.Get("/vocab", [this](const httplib::Request&, httplib::Response& res) {
      ++vocab_calls;
      res.set_content(nlohmann::json{{"pronouns", cfg_.vocab}}.dump(), "application/json");
    });
    server_.Post("/predict", [this](const httplib::Request& req, httplib::Response& res) {
      const int now = ++in_flight;
      for (int seen = max_in_flight.load(); now > seen && !max_in_flight.compare_exchange_weak(seen, now);) {
      }
      ++predict_calls;
      handle_predict(req, res);
      if (cfg_.delay.count() > 0) std::this_thread::sleep_for(cfg_.delay);
      --in_flight;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockModelServer() {
    server_.stop();
    thread_.join();
  }

  MockModelServer(const MockModelServer&) = delete;
  MockModelServer& operator=(const MockModelServer&) = delete;

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  std::atomic<int> in_flight{0};
  std::atomic<int> max_in_flight{0};
  std::atomic<int> predict_calls{0};
  std::atomic<int> vocab_calls{0};

 private:
  void handle_predict(const httplib::Request& req, httplib::Response& res) {
    if (cfg_.predict_status != 200) {
      res.status = cfg_.predict_status;
      return;
    }
    if (cfg_.broken_json) {
      res.set_content("{not json", "application/json");
      return;
    }
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(req.body);
    } catch (const nlohmann::json::exception&) {
      res.status = 400;
      return;
    }
    const auto text = body.value("text", std::string{});
    if (pronounflow::count_markers(text) != 1 || body.value("top_k", 0) < 1) {
      res.status = 400;
      return;
    }
    auto it = cfg_.entries.find(text);
    const auto& preds = it == cfg_.entries.end() ? cfg_.reply : it->second;
    auto arr = nlohmann::json::array();
    for (const auto& p : preds) arr.push_back({{"token", p.pronoun}, {"score", p.score}});
    res.set_content(nlohmann::json{{"predictions", arr}, {"model", "mock-fill-mask"}}.dump(), "application/json");
  }

  Config cfg_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

// A port nothing listens on: bind, read the number, close.
inline int closed_port() {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  socklen_t len = sizeof(addr);
  ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr));
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  ::close(fd);
  return ntohs(addr.sin_port);
}

}  // namespace pftest
