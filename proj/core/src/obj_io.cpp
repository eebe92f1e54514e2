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
#include <subdiv_iga/mesh.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace subdiv_iga {

namespace {

double parse_double(const std::string& token, const std::string& where)
{
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    if (!token.empty() && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) throw MeshError(where + ": bad coordinate '" + token + "'");
    return value;
}

int parse_index(const std::string& token, int num_vertices, const std::string& where)
{
    // Accept "i", "i/t", "i/t/n" and "i//n"; only the position index is used.
    const std::string head = token.substr(0, token.find('/'));
    int value = 0;
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), value);
    if (ec != std::errc() || ptr != head.data() + head.size() || value == 0)
        throw MeshError(where + ": bad vertex index '" + token + "'");
    return value > 0 ? value - 1 : num_vertices + value;
}

} // namespace

ControlMesh load_obj(const std::filesystem::path& path, std::vector<std::string>* warnings)
{
    std::ifstream in(path);
    if (!in) throw MeshError("cannot open OBJ file '" + path.string() + "'");

    std::vector<Vec3> vertices;
    std::vector<Quad> faces;
    std::string line;
    int line_no = 0;
    auto warn = [&](const std::string& msg) {
        if (warnings)
            warnings->push_back(msg);
        else
            std::clog << "warning: " << msg << '\n';
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag[0] == '#') continue;
        const std::string where = path.filename().string() + ":" + std::to_string(line_no);
        if (tag == "v") {
            std::string x, y, z;
            if (!(ss >> x >> y >> z)) throw MeshError(where + ": vertex needs three coordinates");
            vertices.emplace_back(parse_double(x, where), parse_double(y, where), parse_double(z, where));
        } else if (tag == "f") {
            std::vector<std::string> tokens;
            for (std::string t; ss >> t;) tokens.push_back(t);
            if (tokens.size() != 4)
                throw MeshError(where + ": non-quad face (face index " + std::to_string(faces.size()) + ", " +
                                std::to_string(tokens.size()) + " vertices)");
            Quad q{};
            for (std::size_t i = 0; i < 4; ++i)
                q[i] = parse_index(tokens[i], static_cast<int>(vertices.size()), where);
            faces.push_back(q);
        } else {
            warn(where + ": ignoring unsupported record '" + tag + "'");
        }
    }
    return ControlMesh(std::move(vertices), std::move(faces));
}

void save_obj(const ControlMesh& mesh, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    char buf[128];
    for (const Vec3& p : mesh.vertices()) {
        std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", p.x(), p.y(), p.z());
        out << buf;
    }
    for (const Quad& q : mesh.faces())
        out << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
    out.flush();
    if (!out) throw Error("write to '" + path.string() + "' failed");
}

} // namespace subdiv_iga
