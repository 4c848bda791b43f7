// Copyright 2026 The Equidist Authors.
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

#include "equidist/table.h"

#include <charconv>
#include <cmath>
#include <ostream>

#include "json.hpp"

namespace equidist {
namespace {

std::string CsvCell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return FormatDouble(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

std::string JsonCell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "null";
        } else if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(v) ? FormatDouble(v) : "null";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return nlohmann::json(v).dump();
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ec == std::errc() ? end : buf);
}

void WriteCsv(const Table& table, std::ostream& out) {
  for (const auto& [key, value] : table.metadata) {
    out << "# " << key << '=' << CsvCell(value) << '\n';
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << CsvCell(row[c]);
    }
    out << '\n';
  }
}

void WriteJson(const Table& table, std::ostream& out) {
  out << '{';
  for (const auto& [key, value] : table.metadata) {
    out << nlohmann::json(key).dump() << ':' << JsonCell(value) << ',';
  }
  out << "\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r > 0) out << ',';
    out << "\n{";
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << nlohmann::json(table.columns[c]).dump() << ':' << JsonCell(row[c]);
    }
    out << '}';
  }
  out << "\n]}\n";
}

}  // namespace equidist
