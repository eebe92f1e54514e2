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

#include <subdiv_iga/types.hpp>

#include <string>
#include <vector>

namespace subdiv_iga {

struct QuadraturePoint
{
    Vec2 xi;
    double weight = 0.0;
};

struct QuadratureRule
{
    enum class Kind
    {
        Standard,
        Adaptive,
    };

    std::vector<QuadraturePoint> points;
    Kind kind = Kind::Standard;
    /// Gauss points per direction (per sub-square for adaptive rules).
    int order = 2;
    /// Number of dyadic levels n_d; 0 for standard rules.
    int depth = 0;

    int size() const { return static_cast<int>(points.size()); }
    double total_weight() const;
    std::string describe() const;
};

/// Gauss-Legendre nodes and weights on [0,1].
void gauss_legendre_01(int q, std::vector<double>& nodes, std::vector<double>& weights);

/// q x q tensor Gauss rule on [0,1]^2.
QuadratureRule gauss_2d(int q);

/// Three q x q Gauss sub-squares of side 2^-m for m = 1..depth around the corner (0,0).
/// The innermost cell [0, 2^-depth]^2 is left out, so the weights add up to 1 - 4^-depth.
QuadratureRule adaptive_rule(int depth, int q = 2);

} // namespace subdiv_iga
