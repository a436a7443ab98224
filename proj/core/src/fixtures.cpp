// Copyright 2026 The qassist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qassist/fixtures.hpp"

#include <array>
#include <charconv>
#include <string>

#include "qassist/errors.hpp"

namespace qassist {

namespace detail {
extern const std::string_view kFixtureCsv[3];
}  // namespace detail

namespace {

// Checksums of core/data/table{1,2,3}.csv. Update together with the data.
constexpr std::array<std::uint64_t, 3> kChecksums{
    0x04a27e21b009bb46ULL,
    0x4a118695ed34ef81ULL,
    0x1a1e48b3348a80e1ULL,
};

constexpr std::array<std::size_t, 3> kRowCounts{19, 19, 16};

void check_id(int table_id) {
  if (table_id < 1 || table_id > 3) {
    throw ParameterError("fixture table must be 1, 2 or 3, got " + std::to_string(table_id));
  }
}

double parse_number(std::string_view field) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error("bad number in fixture: '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view fixture_csv(int table_id) {
  check_id(table_id);
  return detail::kFixtureCsv[table_id - 1];
}

FixtureTable load_fixture(int table_id) {
  const std::string_view text = fixture_csv(table_id);
  const auto idx = static_cast<std::size_t>(table_id - 1);
  if (fnv1a64(text) != kChecksums[idx]) {
    throw Error("fixture table " + std::to_string(table_id) + " failed its checksum");
  }

  FixtureTable table;
  table.table_id = table_id;
  std::size_t pos = text.find('\n') + 1;  // skip header
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view line = text.substr(pos, end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    if (line.empty()) continue;

    std::array<double, 4> fields{};
    std::size_t start = 0;
    for (std::size_t f = 0; f < fields.size(); ++f) {
      const std::size_t comma = line.find(',', start);
      if ((comma == std::string_view::npos) != (f + 1 == fields.size())) {
        throw Error("fixture row has the wrong number of fields: '" + std::string(line) + "'");
      }
      fields[f] = parse_number(line.substr(start, comma - start));
      start = comma + 1;
    }
    table.rows.push_back({fields[0], fields[1], fields[2], fields[3]});
  }
  if (table.rows.size() != kRowCounts[idx]) throw Error("fixture table has an unexpected row count");
  return table;
}

}  // namespace qassist
