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

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace subdiv_iga::cli {

/// Invalid run configuration. The message carries file and line when known.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    /// Built-in case name (see case_names()).
    std::string case_name;
    /// Optional OBJ control mesh replacing the case's generated coarse mesh.
    std::optional<std::filesystem::path> mesh;
    /// Number of mesh levels; 0 selects the case default.
    int levels = 0;
    /// Adaptive depth on irregular elements, 0 for the standard rule; unset selects the case default.
    std::optional<int> adaptive_depth;
    double beta = 1e8;
    std::filesystem::path out = ".";
    int threads = 1;
    /// Parametric samples per direction and element in pointwise_error.csv.
    int samples = 5;
    /// Assembly repetitions per timing entry (minimum is reported).
    int repeats = 3;
};

/// Parses "standard" or "adaptive:N" (N >= 1) into an adaptive depth.
int parse_quadrature(const std::string& text);
std::string format_quadrature(int adaptive_depth);

/// Applies one key/value pair. Throws ConfigError for unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads a flat "key = value" file. Blank lines and lines starting with '#' are ignored.
/// Errors are reported as "<file>:<line>: <reason>".
RunConfig load_config(const std::filesystem::path& path);

/// Same as load_config on in-memory text; `origin` names the source in error messages.
RunConfig parse_config(const std::string& text, const std::string& origin);

} // namespace subdiv_iga::cli
