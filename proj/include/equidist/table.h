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

#ifndef EQUIDIST_TABLE_H_
#define EQUIDIST_TABLE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace equidist {

// monostate renders as an empty CSV cell and as JSON null.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double,
                          std::string>;

// Row-oriented report shared by the CSV and JSON writers. Metadata entries
// become "# key=value" lines ahead of the CSV header and top-level keys in
// JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> metadata;
};

// 17 significant digits, '.' separator, independent of the C locale.
std::string FormatDouble(double v);

void WriteCsv(const Table& table, std::ostream& out);
void WriteJson(const Table& table, std::ostream& out);

}  // namespace equidist

#endif  // EQUIDIST_TABLE_H_
