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

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace subdiv_iga {

/// Deepest implicit subdivision level used by irregular evaluation.
inline constexpr int kMaxSubdivisionLevel = 20;

///
/// Operators for an irregular patch of valence k (see ElementPatch for the ordering).
///
/// A maps the 2k+8 patch points to 2k+17 points of the once-subdivided patch: the first
/// 2k+8 rows give the subdivided patch in the same ordering (the rows of Abar), the extra
/// nine sit at grid positions (3,-1),(3,0),(3,1),(3,2),(3,3),(2,3),(1,3),(0,3),(-1,3) of the
/// refined grid. D_k picks the 4x4 regular sub-patch of sub-element k (1: right,
/// 2: diagonal, 3: top), ordered a + 4b on the grid.
///
class SubdivisionOperators
{
public:
    explicit SubdivisionOperators(int valence);

    int valence() const { return m_valence; }
    int patch_size() const { return 2 * m_valence + 8; }

    const Eigen::MatrixXd& A() const { return m_A; }
    const Eigen::MatrixXd& Abar() const { return m_Abar; }

    /// Rows of A selected by D_k.
    const std::array<int, 16>& selection(int k) const;
    /// D_k as a 16 x (2k+17) 0/1 matrix.
    Eigen::MatrixXd selection_matrix(int k) const;

    /// Abar^p for 0 <= p < kMaxSubdivisionLevel.
    const Eigen::MatrixXd& Abar_power(int p) const;

    /// D_k A Abar^(n-1), 16 x (2k+8), for 1 <= n <= kMaxSubdivisionLevel.
    const Eigen::MatrixXd& picking_matrix(int n, int k) const;

private:
    int m_valence;
    Eigen::MatrixXd m_A;
    Eigen::MatrixXd m_Abar;
    std::array<std::array<int, 16>, 3> m_select{};
    std::vector<Eigen::MatrixXd> m_powers;
    std::vector<Eigen::MatrixXd> m_picking; // index 3 * (n - 1) + (k - 1)
};

/// Builds operators for valence k >= 3. Throws std::invalid_argument otherwise.
SubdivisionOperators build_operators(int valence);

/// Shared, lazily built operators; safe to call from several threads.
const SubdivisionOperators& operators_for_valence(int valence);

} // namespace subdiv_iga
