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

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace influence {

enum class EntityKind { author, venue, institution, topic, paper };

std::string_view to_string(EntityKind kind);
std::optional<EntityKind> parse_kind(std::string_view text);

/// True for the kinds that can sit on the arc of a flower.
constexpr bool is_alter_kind(EntityKind kind) {
  return kind != EntityKind::paper;
}

struct EntityRef {
  std::string id;
  EntityKind kind = EntityKind::author;

  auto operator<=>(const EntityRef&) const = default;
};

/// Closed interval of calendar years.
struct YearRange {
  int first = 0;
  int last = 0;

  bool contains(int year) const { return year >= first && year <= last; }
  bool empty() const { return first > last; }
  bool covers(const YearRange& other) const {
    return first <= other.first && other.last <= last;
  }
  bool operator==(const YearRange&) const = default;
};

// Error hierarchy. `UserError` subclasses map to CLI exit code 1 and HTTP 4xx.

class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UserError {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotFound : public UserError {
 public:
  using UserError::UserError;
};

class InvalidArgument : public UserError {
 public:
  using UserError::UserError;
};

}  // namespace influence
