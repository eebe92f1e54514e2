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
#include <subdiv_iga_cli/csv.hpp>

#include <cstdio>
#include <stdexcept>

namespace subdiv_iga::cli {

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : m_out(path, std::ios::binary)
    , m_columns(header.size())
{
    if (!m_out) throw std::runtime_error("cannot write " + path.string());
    write_line(header);
}

void CsvWriter::row(const std::vector<CsvCell>& cells)
{
    if (cells.size() != m_columns)
        throw std::invalid_argument("CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(m_columns));
    std::vector<std::string> fields;
    fields.reserve(cells.size());
    for (const CsvCell& c : cells) fields.push_back(format(c));
    write_line(fields);
}

std::string CsvWriter::format(const CsvCell& cell)
{
    if (std::holds_alternative<long long>(cell)) return std::to_string(std::get<long long>(cell));
    if (std::holds_alternative<double>(cell)) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(cell));
        return buf;
    }
    if (std::holds_alternative<std::string>(cell)) return quote(std::get<std::string>(cell));
    return {};
}

std::string CsvWriter::quote(const std::string& field)
{
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void CsvWriter::write_line(const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) m_out << ',';
        m_out << fields[i];
    }
    m_out << "\r\n";
    if (!m_out) throw std::runtime_error("CSV write failed");
}

} // namespace subdiv_iga::cli
