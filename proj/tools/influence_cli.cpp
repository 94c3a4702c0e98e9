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

// Operator entry points: ingest, index, warm, flower, serve, oracle-check.
// Exit codes: 0 success, 1 user error, 2 internal error.

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "influence/engine.hpp"
#include "influence/oracle.hpp"
#include "influence/server.hpp"
#include "influence/svg.hpp"

namespace fs = std::filesystem;
using namespace influence;

namespace {

struct CorpusFlags {
  std::string corpus_dir;
  std::string papers;
  std::string citations;
  std::string entities;
  std::string gallery;
  std::string cache_dir;
  std::string index;

  void add_to(CLI::App& cmd, bool with_cache = true) {
    cmd.add_option("--corpus", corpus_dir, "Directory with papers.jsonl, citations.tsv, entities.jsonl");
    cmd.add_option("--papers", papers, "Papers file (JSONL)");
    cmd.add_option("--citations", citations, "Citations file (TSV: citing, cited)");
    cmd.add_option("--entities", entities, "Entities file (JSONL)");
    if (with_cache) {
      cmd.add_option("--cache-dir", cache_dir, "Bundle cache directory");
      cmd.add_option("--index", index, "Index snapshot written by the index command");
      cmd.add_option("--gallery", gallery, "Gallery file (JSONL)");
    }
  }

  // Explicit file flags win over the corpus directory, which wins over INFLUENCE_CORPUS.
  CorpusFiles files() const {
    std::string dir = corpus_dir;
    if (dir.empty())
      if (const char* env = std::getenv("INFLUENCE_CORPUS")) dir = env;
    CorpusFiles f = dir.empty() ? CorpusFiles{} : CorpusFiles::in(dir);
    if (!papers.empty()) f.papers = papers;
    if (!citations.empty()) f.citations = citations;
    if (!entities.empty()) f.entities = entities;
    if (!gallery.empty()) f.gallery = gallery;
    if (f.papers.empty() || f.citations.empty() || f.entities.empty())
      throw InvalidArgument("corpus files are required (--corpus or --papers/--citations/--entities)");
    return f;
  }

  Corpus load(LoadReport* report = nullptr) const {
    const auto f = files();
    return load_corpus(f.papers, f.citations, f.entities, report);
  }

  InfluenceEngine engine() const {
    const auto f = files();
    InfluenceEngine::Options options;
    std::string cache = cache_dir;
    if (cache.empty())
      if (const char* env = std::getenv("INFLUENCE_CACHE")) cache = env;
    if (!cache.empty()) options.cache_dir = fs::path(cache);
    if (!index.empty()) options.index_snapshot = fs::path(index);
    if (!f.gallery.empty() && (!gallery.empty() || fs::exists(f.gallery)))
      options.gallery_file = f.gallery;
    return InfluenceEngine(load_corpus(f.papers, f.citations, f.entities), options);
  }
};

EntityRef parse_member(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw InvalidArgument("selection member must look like kind:id, got " + text);
  auto kind = parse_kind(text.substr(0, colon));
  if (!kind) throw InvalidArgument("unknown entity kind in " + text);
  return {text.substr(colon + 1), *kind};
}

YearRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto first_text = text.substr(0, colon);
    const auto last_text = text.substr(colon + 1);
    const int first = std::stoi(first_text, &used);
    if (used != first_text.size()) throw std::invalid_argument(text);
    const int last = std::stoi(last_text, &used);
    if (used != last_text.size()) throw std::invalid_argument(text);
    return {first, last};
  } catch (const std::logic_error&) {
    throw InvalidArgument("year range must look like FIRST:LAST, got " + text);
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << content;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-")
    std::cout << content;
  else
    write_file(out_path, content);
}

json report_json(const LoadReport& r) {
  return {{"papers", r.papers},
          {"edges", r.edges},
          {"dangling", r.dangling},
          {"duplicate_edges", r.duplicate_edges},
          {"self_loops", r.self_loops},
          {"dropped_topics", r.dropped_topics},
          {"venue_conflicts", r.venue_conflicts},
          {"implicit_entities", r.implicit_entities},
          {"warnings", r.warnings}};
}

struct FlowerFlags {
  std::string config_file;
  std::vector<std::string> members;
  std::string name;
  std::string alter_kind;
  std::string pub;
  std::string cite;
  std::optional<std::size_t> petals;
  std::string sort;
  bool no_self_citations = false;
  bool exclude_co = false;
  bool s2 = false;
  bool s3 = false;
  bool no_s1 = false;
  std::optional<int> topic_level;
  std::string contrast_pub;
  std::string contrast_cite;
  std::string svg;
  std::string json_out;
  std::string csv;
  std::string out_dir;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--config", config_file, "Flower config: JSON file, token or link");
    cmd.add_option("--select", members, "Ego member as kind:id (repeatable)");
    cmd.add_option("--name", name, "Ego display name");
    cmd.add_option("--alter-kind", alter_kind, "author, venue, institution or topic");
    cmd.add_option("--pub", pub, "Publication years FIRST:LAST");
    cmd.add_option("--cite", cite, "Citation years FIRST:LAST");
    cmd.add_option("--petals", petals, "Number of petals (1-50)");
    cmd.add_option("--sort", sort, "ratio, influenced_by, influencing or total");
    cmd.add_flag("--no-self-citations", no_self_citations, "Drop self-citations");
    cmd.add_flag("--exclude-co-contributors", exclude_co, "Drop co-contributor alters");
    cmd.add_flag("--no-s1", no_s1, "Disable cited-side entity normalisation");
    cmd.add_flag("--s2", s2, "Normalise by the citing paper's reference count");
    cmd.add_flag("--s3", s3, "Normalise by citing-side entity count");
    cmd.add_option("--topic-level", topic_level, "Topic level for topic alters");
    cmd.add_option("--contrast-pub", contrast_pub, "Contrast publication years FIRST:LAST");
    cmd.add_option("--contrast-cite", contrast_cite, "Contrast citation years FIRST:LAST");
    cmd.add_option("--svg", svg, "Write the flower SVG here");
    cmd.add_option("--json", json_out, "Write the flower response JSON here");
    cmd.add_option("--csv", csv, "Write the alter scores CSV here");
    cmd.add_option("--out", out_dir, "Directory for flower.svg, flower.json and flower.csv");
  }

  FlowerConfig config() const {
    FlowerConfig c;
    std::error_code ec;
    if (!config_file.empty() && !std::filesystem::exists(config_file, ec)) {
      c = decode_config(token_from_link(config_file));
    } else if (!config_file.empty()) {
      json in;
      try {
        in = json::parse(read_file(config_file));
      } catch (const json::exception& e) {
        throw InvalidArgument(config_file + ": " + e.what());
      }
      try {
        c = config_from_json(in);
      } catch (const json::exception& e) {
        throw InvalidArgument(config_file + ": " + e.what());
      }
    }
    if (!members.empty()) {
      c.selection.members.clear();
      for (const auto& m : members) c.selection.members.push_back(parse_member(m));
    }
    if (!name.empty()) c.selection.display_name = name;
    if (!alter_kind.empty()) {
      auto kind = parse_kind(alter_kind);
      if (!kind) throw InvalidArgument("unknown alter kind " + alter_kind);
      c.alter_kind = *kind;
    }
    if (!pub.empty()) c.pub_range = parse_range(pub);
    if (!cite.empty()) c.cite_range = parse_range(cite);
    if (petals) c.petal_count = *petals;
    if (!sort.empty()) {
      auto mode = parse_sort_mode(sort);
      if (!mode) throw InvalidArgument("unknown sort mode " + sort);
      c.sort_mode = *mode;
    }
    if (no_self_citations) c.include_self_citations = false;
    if (exclude_co) c.exclude_co_contributors = true;
    if (no_s1) c.schemes.s1 = false;
    if (s2) c.schemes.s2 = true;
    if (s3) c.schemes.s3 = true;
    if (topic_level) c.topic_level = *topic_level;
    if (contrast_pub.empty() != contrast_cite.empty())
      throw InvalidArgument("--contrast-pub and --contrast-cite go together");
    if (!contrast_pub.empty())
      c.contrast = ContrastRanges{parse_range(contrast_pub), parse_range(contrast_cite)};
    return c;
  }
};

InfluenceServer* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Citation influence flowers for scholarly entities"};
  app.require_subcommand(1);

  CorpusFlags ingest_flags;
  std::string ingest_out;
  auto* ingest = app.add_subcommand("ingest", "Validate a corpus and print its load report");
  ingest_flags.add_to(*ingest, false);
  ingest->add_option("--out", ingest_out, "Write the report here instead of stdout");

  CorpusFlags index_flags;
  std::string index_out;
  auto* index = app.add_subcommand("index", "Build the entity and citation indexes and persist them");
  index_flags.add_to(*index, false);
  index->add_option("--out", index_out, "Snapshot file")->required();

  CorpusFlags warm_flags;
  std::vector<std::string> warm_members;
  std::string warm_config;
  auto* warm = app.add_subcommand("warm", "Fill the bundle cache for a selection");
  warm_flags.add_to(*warm);
  warm->add_option("--select", warm_members, "Member as kind:id (repeatable)");
  warm->add_option("--config", warm_config, "Take the selection from a flower config file");

  CorpusFlags flower_corpus;
  FlowerFlags flower_flags;
  auto* flower = app.add_subcommand("flower", "Generate a flower as SVG, JSON and/or CSV");
  flower_corpus.add_to(*flower);
  flower_flags.add_to(*flower);

  CorpusFlags serve_flags;
  std::string host;
  std::optional<int> port;
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve_flags.add_to(*serve);
  serve->add_option("--host", host, "Bind address (default 127.0.0.1)");
  serve->add_option("--port", port, "Port (default INFLUENCE_PORT or 8080)");
  serve->add_option("--static", static_dir, "Serve static files from this directory");

  std::uint64_t seed = 7;
  std::size_t cases = 200;
  bool verbose = false;
  auto* oracle = app.add_subcommand("oracle-check", "Compare indexed scores with the dense reference");
  oracle->add_option("--seed", seed, "Random seed");
  oracle->add_option("--cases", cases, "Number of random corpora");
  oracle->add_flag("--verbose", verbose, "Print every failing comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*ingest) {
      LoadReport report;
      ingest_flags.load(&report);
      emit(ingest_out, report_json(report).dump(2) + "\n");
    } else if (*index) {
      const auto corpus = index_flags.load();
      const auto store = IndexStore::build(corpus);
      if (!store.verify()) throw std::runtime_error("index verification failed");
      store.save(index_out);
      std::cout << "indexed " << corpus.paper_count() << " papers, " << corpus.edges().size()
                << " citations, " << corpus.entities().size() << " entities\n";
    } else if (*warm) {
      EntitySelection selection;
      if (!warm_config.empty()) {
        FlowerFlags f;
        f.config_file = warm_config;
        selection = f.config().selection;
      }
      for (const auto& m : warm_members) selection.members.push_back(parse_member(m));
      if (selection.members.empty()) throw InvalidArgument("warm needs --select or --config");
      auto engine = warm_flags.engine();
      const auto r = engine.warm(selection);
      std::cout << json{{"complete", r.complete}, {"partial", r.partial}, {"written", r.written}}.dump()
                << "\n";
    } else if (*flower) {
      const auto config = flower_flags.config();
      auto engine = flower_corpus.engine();
      const auto result = engine.flower(config);
      std::string svg_path = flower_flags.svg;
      std::string json_path = flower_flags.json_out;
      std::string csv_path = flower_flags.csv;
      if (!flower_flags.out_dir.empty()) {
        const fs::path dir = flower_flags.out_dir;
        if (svg_path.empty()) svg_path = (dir / "flower.svg").string();
        if (json_path.empty()) json_path = (dir / "flower.json").string();
        if (csv_path.empty()) csv_path = (dir / "flower.csv").string();
      }
      if (svg_path.empty() && json_path.empty() && csv_path.empty()) json_path = "-";
      if (!svg_path.empty())
        emit(svg_path, result.contrast ? render_svg(*result.contrast) : render_svg(result.layout));
      if (!json_path.empty()) emit(json_path, flower_response(result).dump() + "\n");
      if (!csv_path.empty()) emit(csv_path, profile_to_csv(result.profile));
    } else if (*serve) {
      auto settings = ServerSettings::from_environment();
      if (!host.empty()) settings.host = host;
      if (port) settings.port = *port;
      if (!static_dir.empty()) settings.static_dir = fs::path(static_dir);
      auto engine = serve_flags.engine();
      InfluenceServer server(engine, settings.static_dir);
      const int bound = server.bind(settings.host, settings.port);
      if (bound < 0)
        throw InvalidArgument("cannot bind " + settings.host + ":" + std::to_string(settings.port));
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cout << "listening on http://" << settings.host << ":" << bound << std::endl;
      server.serve();
      g_server = nullptr;
    } else if (*oracle) {
      if (cases == 0) throw InvalidArgument("--cases must be positive");
      std::size_t passed = 0;
      std::size_t comparisons = 0;
      for (std::size_t i = 0; i < cases; ++i) {
        const auto report = run_oracle_case(seed, i);
        comparisons += report.comparisons;
        if (report.passed()) {
          ++passed;
        } else if (verbose) {
          for (const auto& f : report.failures) std::cerr << f << "\n";
        } else {
          std::cerr << report.failures.front() << "\n";
        }
      }
      std::cout << passed << "/" << cases << " pass (" << comparisons << " profile comparisons)\n";
      return passed == cases ? 0 : 1;
    }
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
