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

#include "influence/server.hpp"

#include <charconv>
#include <cstdlib>

#include "httplib.h"

namespace influence {

namespace {

constexpr std::size_t kDefaultSearchLimit = 20;

json error_body(const std::string& message) { return {{"error", message}}; }

template <typename Fn>
HttpReply guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const NotFound& e) {
    return {404, error_body(e.what())};
  } catch (const UserError& e) {
    return {400, error_body(e.what())};
  } catch (const json::exception& e) {
    return {400, error_body(e.what())};
  } catch (const std::exception& e) {
    return {500, error_body(e.what())};
  }
}

std::vector<EntityKind> parse_kinds(const std::string& text) {
  std::vector<EntityKind> kinds;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const auto item = text.substr(start, end - start);
    if (!item.empty()) {
      auto kind = parse_kind(item);
      if (!kind) throw InvalidArgument("unknown entity kind " + item);
      kinds.push_back(*kind);
    }
    start = end + 1;
  }
  return kinds;
}

void send(httplib::Response& res, const HttpReply& reply) {
  res.status = reply.status;
  res.set_content(reply.body.dump(), "application/json");
}

}  // namespace

ServerSettings ServerSettings::from_environment() {
  ServerSettings s;
  if (const char* v = std::getenv("INFLUENCE_CORPUS"); v && *v) s.corpus_dir = v;
  if (const char* v = std::getenv("INFLUENCE_CACHE"); v && *v) s.cache_dir = v;
  if (const char* v = std::getenv("INFLUENCE_PORT"); v && *v) {
    int port = 0;
    const auto* end = v + std::char_traits<char>::length(v);
    auto [ptr, ec] = std::from_chars(v, end, port);
    if (ec != std::errc{} || ptr != end || port < 0 || port > 65535)
      throw InvalidArgument(std::string("INFLUENCE_PORT is not a port number: ") + v);
    s.port = port;
  }
  return s;
}

CorpusFiles CorpusFiles::in(const std::filesystem::path& dir) {
  return {dir / "papers.jsonl", dir / "citations.tsv", dir / "entities.jsonl",
          dir / "gallery.jsonl"};
}

InfluenceServer::InfluenceServer(InfluenceEngine& engine,
                                 std::optional<std::filesystem::path> static_dir)
    : engine_(engine), http_(std::make_unique<httplib::Server>()) {
  http_->Get("/api/search", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, search(req.get_param_value("q"), req.get_param_value("kinds"),
                     req.get_param_value("limit")));
  });
  http_->Post("/api/flower", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, flower(req.body));
  });
  http_->Get("/api/detail", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, detail(req.get_param_value("config"), req.get_param_value("alter")));
  });
  http_->Get("/api/stats", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, stats(req.get_param_value("config")));
  });
  http_->Get("/api/gallery",
             [this](const httplib::Request&, httplib::Response& res) { send(res, gallery()); });
  if (static_dir) http_->set_mount_point("/", static_dir->string());
}

InfluenceServer::~InfluenceServer() = default;

HttpReply InfluenceServer::search(const std::string& q, const std::string& kinds,
                                  const std::string& limit) {
  return guarded([&] {
    std::size_t n = kDefaultSearchLimit;
    if (!limit.empty()) {
      auto [ptr, ec] = std::from_chars(limit.data(), limit.data() + limit.size(), n);
      if (ec != std::errc{} || ptr != limit.data() + limit.size())
        throw InvalidArgument("limit must be a non-negative integer");
    }
    const auto parsed = parse_kinds(kinds);
    json hits = json::array();
    for (const auto& hit : engine_.search(q, parsed, n)) hits.push_back(hit);
    return HttpReply{200, std::move(hits)};
  });
}

HttpReply InfluenceServer::flower(const std::string& body) {
  return guarded([&] {
    json in;
    try {
      in = json::parse(body);
    } catch (const json::exception&) {
      throw InvalidArgument("request body is not JSON");
    }
    return HttpReply{200, engine_.flower_json(config_from_json(in))};
  });
}

HttpReply InfluenceServer::detail(const std::string& token, const std::string& alter) {
  return guarded([&] {
    if (alter.empty()) throw InvalidArgument("alter parameter is required");
    const auto config = decode_config(token_from_link(token));
    return HttpReply{200, detail_to_json(engine_.detail(config, alter), engine_.corpus())};
  });
}

HttpReply InfluenceServer::stats(const std::string& token) {
  return guarded([&] {
    return HttpReply{200, engine_.stats(decode_config(token_from_link(token)))};
  });
}

HttpReply InfluenceServer::gallery() {
  return guarded([&] { return HttpReply{200, gallery_to_json(engine_.gallery())}; });
}

int InfluenceServer::bind(const std::string& host, int port) {
  if (port == 0) return http_->bind_to_any_port(host);
  return http_->bind_to_port(host, port) ? port : -1;
}

bool InfluenceServer::serve() { return http_->listen_after_bind(); }

void InfluenceServer::stop() { http_->stop(); }

}  // namespace influence
