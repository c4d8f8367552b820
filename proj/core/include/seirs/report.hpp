// Copyright (c) 2026 the seirs authors.
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

#ifndef SEIRS_REPORT_HPP
#define SEIRS_REPORT_HPP

#include <string>
#include <vector>

namespace seirs {

/// One double with 17 significant digits (shortest text that survives a
/// round trip).
std::string format_full(double v);

/// RFC-4180-style CSV: header row, LF line endings, full-precision
/// numbers.  Non-finite values are spelled "nan"/"inf"/"-inf".
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// "key: value" lines.
void write_text(const std::string& path,
                const std::vector<std::pair<std::string, std::string>>& lines);

void write_file(const std::string& path, const std::string& content);

} // namespace seirs

#endif
