// Copyright 2026 The maqaoa Authors.
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

/**
 * @file
 * Minimal RFC 4180 CSV reading and writing. Output is locale independent:
 * comma delimiter, CRLF record terminator, fields quoted only when needed.
 */

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace maqaoa::csv {

using Row = std::vector<std::string>;

std::string quote(std::string_view field);
void write_row(std::ostream &out, const Row &row);
std::string format_row(const Row &row);

/// Parses a whole document. A trailing record without terminator is kept.
std::vector<Row> parse(std::string_view text);

/// Shortest round-trip is not the goal here: 12 significant digits.
std::string format_real(double x);
double parse_real(std::string_view s);
std::int64_t parse_int(std::string_view s);

} // namespace maqaoa::csv
