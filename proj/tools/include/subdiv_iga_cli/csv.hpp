/*
 * Copyright 2026 The subdiv-iga Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#pragma once

#include <fstream>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace subdiv_iga::cli {

/// Empty cells are written as missing values.
using CsvCell = std::variant<std::monostate, long long, double, std::string>;

/// RFC 4180 writer: CRLF line endings, quoting where needed, doubles with 17 significant digits.
class CsvWriter
{
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

    void row(const std::vector<CsvCell>& cells);

    static std::string format(const CsvCell& cell);
    static std::string quote(const std::string& field);

private:
    void write_line(const std::vector<std::string>& fields);

    std::ofstream m_out;
    std::size_t m_columns;
};

} // namespace subdiv_iga::cli
