// Copyright 2026 The sentalign Authors
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

// Loopback HTTP server for provider tests. Binds 127.0.0.1 on an ephemeral
// port; nothing leaves the machine.

#pragma once

#include <httplib.h>

#include <atomic>
#include <functional>
#include <string>
#include <thread>

namespace sentalign::testing {

class MockServer {
 public:
  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  explicit MockServer(Handler handler) : handler_(std::move(handler)) {
    server_.new_task_queue = [] { return new httplib::ThreadPool(16); };
    server_.Get("/translate", [this](const httplib::Request& req, httplib::Response& res) {
      const int now = ++in_flight_;
      for (int peak = peak_.load(); now > peak && !peak_.compare_exchange_weak(peak, now);) {
      }
      ++requests_;
      handler_(req, res);
      --in_flight_;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockServer() {
    server_.stop();
    thread_.join();
  }

  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  /// URL template for HttpProviderConfig.
  std::string url() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/translate?q={text}&sl={src}&tl={tgt}";
  }
  int requests() const { return requests_.load(); }
  int peak_concurrency() const { return peak_.load(); }

 private:
  Handler handler_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> in_flight_{0};
  std::atomic<int> peak_{0};
  std::atomic<int> requests_{0};
};

/// {"translation": q}
inline void echo(const httplib::Request& req, httplib::Response& res) {
  const std::string q = req.get_param_value("q");
  std::string body = "{\"translation\": \"";
  for (char c : q) {
    if (c == '"' || c == '\\') body += '\\';
    body += c;
  }
  body += "\"}";
  res.set_content(body, "application/json");
}

}  // namespace sentalign::testing
