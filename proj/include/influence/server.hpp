// Copyright 2026 The Influence Map Authors
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

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "influence/engine.hpp"

namespace httplib {
class Server;
}

namespace influence {

/// Process settings; flags override the INFLUENCE_* environment variables.
struct ServerSettings {
  std::optional<std::filesystem::path> corpus_dir;  // holds papers.jsonl, citations.tsv, entities.jsonl
  std::optional<std::filesystem::path> cache_dir;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> static_dir;

  static ServerSettings from_environment();
};

/// Standard file names inside a corpus directory.
struct CorpusFiles {
  std::filesystem::path papers;
  std::filesystem::path citations;
  std::filesystem::path entities;
  std::filesystem::path gallery;  // optional; may not exist

  static CorpusFiles in(const std::filesystem::path& dir);
};

struct HttpReply {
  int status = 200;
  json body;
};

/// HTTP front end over one engine. Handlers are also callable directly.
class InfluenceServer {
 public:
  explicit InfluenceServer(InfluenceEngine& engine,
                           std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~InfluenceServer();

  InfluenceServer(const InfluenceServer&) = delete;
  InfluenceServer& operator=(const InfluenceServer&) = delete;

  HttpReply search(const std::string& q, const std::string& kinds, const std::string& limit);
  HttpReply flower(const std::string& body);
  HttpReply detail(const std::string& token, const std::string& alter);
  HttpReply stats(const std::string& token);
  HttpReply gallery();

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  bool serve();
  void stop();

 private:
  InfluenceEngine& engine_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace influence
