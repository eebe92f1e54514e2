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
#include <subdiv_iga_cli/config.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace subdiv_iga::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value)
{
    T out{};
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ConfigError("invalid value '" + value + "' for " + key);
    return out;
}

int parse_positive(const std::string& key, const std::string& value, int minimum)
{
    const int v = parse_number<int>(key, value);
    if (v < minimum) throw ConfigError(key + " must be at least " + std::to_string(minimum) + ", got " + value);
    return v;
}

} // namespace

int parse_quadrature(const std::string& text)
{
    if (text == "standard") return 0;
    const std::string prefix = "adaptive:";
    if (text.rfind(prefix, 0) == 0) {
        const int depth = parse_number<int>("quadrature", text.substr(prefix.size()));
        if (depth < 1) throw ConfigError("adaptive quadrature depth must be at least 1, got " + text);
        return depth;
    }
    throw ConfigError("quadrature must be 'standard' or 'adaptive:N', got '" + text + "'");
}

std::string format_quadrature(int adaptive_depth)
{
    return adaptive_depth == 0 ? "standard" : "adaptive:" + std::to_string(adaptive_depth);
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value)
{
    if (value.empty()) throw ConfigError("missing value for " + key);
    if (key == "case")
        config.case_name = value;
    else if (key == "mesh")
        config.mesh = value;
    else if (key == "levels")
        config.levels = parse_positive(key, value, 1);
    else if (key == "quadrature")
        config.adaptive_depth = parse_quadrature(value);
    else if (key == "beta") {
        const double beta = parse_number<double>(key, value);
        if (!(beta > 0.0)) throw ConfigError("beta must be positive, got " + value);
        config.beta = beta;
    } else if (key == "out")
        config.out = value;
    else if (key == "threads")
        config.threads = parse_positive(key, value, 1);
    else if (key == "samples")
        config.samples = parse_positive(key, value, 2);
    else if (key == "repeats")
        config.repeats = parse_positive(key, value, 1);
    else
        throw ConfigError("unknown key '" + key + "'");
}

RunConfig parse_config(const std::string& text, const std::string& origin)
{
    RunConfig config;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        const auto eq = content.find('=');
        try {
            if (eq == std::string::npos) throw ConfigError("expected 'key = value'");
            const std::string key = trim(content.substr(0, eq));
            if (key.empty()) throw ConfigError("empty key");
            apply_setting(config, key, trim(content.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(origin + ":" + std::to_string(number) + ": " + e.what());
        }
    }
    if (config.case_name.empty()) throw ConfigError(origin + ": missing required key 'case'");
    return config;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.string());
}

} // namespace subdiv_iga::cli
