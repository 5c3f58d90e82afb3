#pragma once

// HTTP client for a fill-mask model server.
//
// Wire protocol:
//   POST /predict  {"text": "... <MASK> ...", "top_k": k}
//              ->  {"predictions": [{"token": "...", "score": 0.42}], "model": "..."}
//   GET  /vocab -> {"pronouns": ["...", ...]}
//   GET  /health -> 200

#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "pronounflow/error.hpp"
#include "pronounflow/fillmask.hpp"

namespace pronounflow {

class RemoteBackend final : public FillMaskBackend {
 public:
  struct Options {
    std::string url;  // e.g. http://127.0.0.1:8080
    int max_in_flight = 4;
    std::chrono::milliseconds timeout{5000};
    // When set, /vocab is not queried.
    std::optional<std::set<std::string>> vocabulary;
  };

  explicit RemoteBackend(Options options)
      : options_(std::move(options)),
        slots_(std::make_unique<std::counting_semaphore<kMaxSlots>>(
            std::clamp(options_.max_in_flight, 1, static_cast<int>(kMaxSlots)))) {
    if (options_.url.empty()) throw ConfigError("remote backend requires a URL");
    desc_.name = "remote:" + options_.url;
    desc_.kind = BackendKind::remote;
    if (options_.vocabulary) {
      for (const auto& p : *options_.vocabulary) desc_.supported_pronouns.insert(text::to_lower(p));
      vocab_loaded_ = true;
    }
  }

  // Fetches /vocab on first use; throws TransportError when the server
  // cannot be reached (and retries on the next call).
  const BackendDescriptor& descriptor() const override {
    std::lock_guard lock(vocab_mutex_);
    if (!vocab_loaded_) {
      auto res = request([](httplib::Client& c) { return c.Get("/vocab"); });
      try {
        auto j = nlohmann::json::parse(res->body);
        for (const auto& p : j.at("pronouns")) {
          desc_.supported_pronouns.insert(text::to_lower(p.get<std::string>()));
        }
      } catch (const nlohmann::json::exception& e) {
        throw TransportError(std::string("bad /vocab response: ") + e.what());
      }
      if (desc_.supported_pronouns.empty()) throw TransportError("server reports an empty vocabulary");
      vocab_loaded_ = true;
    }
    return desc_;
  }

  std::vector<Prediction> predict(std::string_view masked_text, int k) const override {
    check_predict_args(masked_text, k);
    const auto& supported = descriptor().supported_pronouns;
    nlohmann::json body{{"text", std::string(masked_text)}, {"top_k", k}};
    auto payload = body.dump();
    auto res = request([&](httplib::Client& c) {
      return c.Post("/predict", payload, "application/json");
    });
    std::vector<Prediction> raw;
    try {
      auto j = nlohmann::json::parse(res->body);
      for (const auto& p : j.at("predictions")) {
        raw.push_back({p.at("token").get<std::string>(), p.at("score").get<double>()});
      }
      if (j.contains("model") && j["model"].is_string()) {
        std::lock_guard lock(vocab_mutex_);
        model_name_ = j["model"].get<std::string>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw TransportError(std::string("bad /predict response: ") + e.what());
    }
    return finalize_predictions(std::move(raw), supported, k);
  }

  bool healthy() const {
    try {
      request([](httplib::Client& c) { return c.Get("/health"); });
      return true;
    } catch (const TransportError&) {
      return false;
    }
  }

  std::string model_name() const {
    std::lock_guard lock(vocab_mutex_);
    return model_name_;
  }

 private:
  static constexpr std::ptrdiff_t kMaxSlots = 256;

  template <typename Call>
  httplib::Result request(Call&& call) const {
    slots_->acquire();
    struct Release {
      std::counting_semaphore<kMaxSlots>* s;
      ~Release() { s->release(); }
    } release{slots_.get()};

    httplib::Client client(options_.url);
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
    auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());
    auto res = call(client);
    if (!res) {
      throw TransportError("request to " + options_.url + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw TransportError("server " + options_.url + " answered HTTP " + std::to_string(res->status));
    }
    return res;
  }

  Options options_;
  std::unique_ptr<std::counting_semaphore<kMaxSlots>> slots_;
  mutable std::mutex vocab_mutex_;
  mutable BackendDescriptor desc_;
  mutable bool vocab_loaded_ = false;
  mutable std::string model_name_;
};

}  // namespace pronounflow
