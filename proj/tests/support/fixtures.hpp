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
#include <random>
#include <string>

#include "influence/corpus.hpp"
#include "influence/flower_config.hpp"

namespace influence::testing {

/// Three-paper fixture: P1 (2000; A1, A2; V1; T1), P2 (2001; A3; V2; T1, T2),
/// P3 (2005; A1, A3; V1; T2); citations P2->P1, P3->P1, P3->P2.
Corpus m1_corpus();

std::filesystem::path data_dir();
std::filesystem::path m1_dir();
std::filesystem::path cli_path();

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

/// Arbitrary config covering every field, including awkward strings. Not
/// necessarily valid against any corpus.
FlowerConfig random_flower_config(std::mt19937_64& rng);

/// Valid config for an entity that exists in `corpus`; ranges and contrast
/// are optional and consistent.
FlowerConfig random_valid_config(std::mt19937_64& rng, const Corpus& corpus);

/// Writes papers.jsonl, citations.tsv and entities.jsonl for `corpus` into
/// `dir`. Implicit entities are left out, as they are derived on load.
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);

/// Runs a shell command; returns its exit status and captures stdout.
int run_command(const std::string& command, std::string* output = nullptr);

}  // namespace influence::testing
