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
#include <subdiv_iga/quadrature.hpp>

#include <cmath>
#include <numbers>

namespace subdiv_iga {

double QuadratureRule::total_weight() const
{
    double w = 0.0;
    for (const auto& p : points) w += p.weight;
    return w;
}

std::string QuadratureRule::describe() const
{
    if (kind == Kind::Standard) return "gauss " + std::to_string(order) + "x" + std::to_string(order);
    return "adaptive depth " + std::to_string(depth) + " gauss " + std::to_string(order) + "x" + std::to_string(order);
}

void gauss_legendre_01(int q, std::vector<double>& nodes, std::vector<double>& weights)
{
    if (q < 1) throw std::invalid_argument("Gauss rule needs at least one point");
    nodes.assign(static_cast<std::size_t>(q), 0.0);
    weights.assign(static_cast<std::size_t>(q), 0.0);
    for (int i = 0; i < q; ++i) {
        // Newton iteration on P_q from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= q; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = q * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= q; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = q * (x * p1 - p0) / (x * x - 1.0);
        const auto idx = static_cast<std::size_t>(q - 1 - i); // ascending order
        nodes[idx] = 0.5 * (1.0 + x);
        weights[idx] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

QuadratureRule gauss_2d(int q)
{
    std::vector<double> x, w;
    gauss_legendre_01(q, x, w);
    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::Standard;
    rule.order = q;
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < q; ++i)
            rule.points.push_back({Vec2(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]),
                                   w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)]});
    return rule;
}

QuadratureRule adaptive_rule(int depth, int q)
{
    if (depth < 1) throw std::invalid_argument("adaptive quadrature needs depth >= 1");
    const QuadratureRule base = gauss_2d(q);
    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::Adaptive;
    rule.order = q;
    rule.depth = depth;
    for (int m = 1; m <= depth; ++m) {
        const double h = std::ldexp(1.0, -m);
        const Vec2 offsets[3] = {Vec2(h, 0.0), Vec2(h, h), Vec2(0.0, h)};
        for (const Vec2& off : offsets)
            for (const auto& p : base.points) rule.points.push_back({off + h * p.xi, h * h * p.weight});
    }
    return rule;
}

} // namespace subdiv_iga
