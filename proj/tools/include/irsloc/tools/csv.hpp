// Copyright 2026 The irsloc Authors
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

#ifndef IRSLOC_TOOLS_CSV_HPP
#define IRSLOC_TOOLS_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

namespace irsloc::tools {

/// Shortest round-trippable-enough text for a number ("{:.12g}"); inf as "inf".
std::string format_number(double value);

/// In-memory table written as RFC 4180 CSV (CRLF line breaks, quoted fields
/// when they contain a comma, quote or line break).
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  /// Throws ArgumentError if the row width differs from the header.
  void add_row(std::vector<std::string> row);

  void write(std::ostream& out) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string escape_csv_field(const std::string& field);

}  // namespace irsloc::tools

#endif  // IRSLOC_TOOLS_CSV_HPP
