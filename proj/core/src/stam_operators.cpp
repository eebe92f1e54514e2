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
#include <subdiv_iga/stam_operators.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace subdiv_iga {

namespace {

struct Layout
{
    int k;
    int ev() const { return 0; }
    int e(int s) const { return 1 + 2 * (((s % k) + k) % k); }
    int f(int s) const { return 2 + 2 * (((s % k) + k) % k); }
    int o(int m) const { return 2 * k + 1 + m; }
    int x(int t) const { return 2 * k + 8 + t; }

    /// Index of the refined-grid point at (i, j); the extraordinary vertex sits at (0,0).
    int at(int i, int j) const
    {
        static constexpr std::array<std::array<int, 2>, 7> outer{{{2, -1}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {-1, 2}}};
        static constexpr std::array<std::array<int, 2>, 9> extra{
            {{3, -1}, {3, 0}, {3, 1}, {3, 2}, {3, 3}, {2, 3}, {1, 3}, {0, 3}, {-1, 3}}};
        if (i == 0 && j == 0) return ev();
        if (i == 1 && j == 0) return e(0);
        if (i == 1 && j == 1) return f(0);
        if (i == 0 && j == 1) return e(1);
        if (i == -1 && j == 1) return f(1);
        if (i == -1 && j == 0) return e(2);
        if (i == 0 && j == -1) return e(k - 1);
        if (i == 1 && j == -1) return f(k - 1);
        for (int m = 0; m < 7; ++m)
            if (outer[static_cast<std::size_t>(m)][0] == i && outer[static_cast<std::size_t>(m)][1] == j) return o(m);
        for (int t = 0; t < 9; ++t)
            if (extra[static_cast<std::size_t>(t)][0] == i && extra[static_cast<std::size_t>(t)][1] == j) return x(t);
        throw std::logic_error("grid position outside the extended irregular patch");
    }
};

void add(Eigen::MatrixXd& A, int row, double w, std::initializer_list<int> cols)
{
    for (int c : cols) A(row, c) += w;
}

} // namespace

SubdivisionOperators::SubdivisionOperators(int valence)
    : m_valence(valence)
{
    if (valence < 3) throw std::invalid_argument("subdivision operators need valence >= 3, got " + std::to_string(valence));
    const int k = valence;
    const Layout L{k};
    const int K = 2 * k + 8;
    m_A = Eigen::MatrixXd::Zero(2 * k + 17, K);

    const double kk = static_cast<double>(k);
    m_A(0, 0) = 1.0 - 7.0 / (4.0 * kk);
    for (int s = 0; s < k; ++s) {
        m_A(0, L.e(s)) += 3.0 / (2.0 * kk * kk);
        m_A(0, L.f(s)) += 1.0 / (4.0 * kk * kk);

        add(m_A, L.e(s), 3.0 / 8.0, {L.ev(), L.e(s)});
        add(m_A, L.e(s), 1.0 / 16.0, {L.f(s), L.e(s + 1), L.e(s - 1), L.f(s - 1)});
        add(m_A, L.f(s), 0.25, {L.ev(), L.e(s), L.f(s), L.e(s + 1)});
    }

    const double ve = 36.0 / 64.0, vn = 6.0 / 64.0, vd = 1.0 / 64.0;
    const double eh = 3.0 / 8.0, eq = 1.0 / 16.0;
    const int fl = L.f(k - 1), el = L.e(k - 1);
    // Refined outer ring.
    add(m_A, L.o(0), eh, {fl, L.e(0)});
    add(m_A, L.o(0), eq, {L.ev(), el, L.o(0), L.o(1)});
    add(m_A, L.o(1), ve, {L.e(0)});
    add(m_A, L.o(1), vn, {L.ev(), L.o(1), fl, L.f(0)});
    add(m_A, L.o(1), vd, {el, L.o(0), L.o(2), L.e(1)});
    add(m_A, L.o(2), eh, {L.e(0), L.f(0)});
    add(m_A, L.o(2), eq, {L.ev(), L.e(1), L.o(1), L.o(2)});
    add(m_A, L.o(3), ve, {L.f(0)});
    add(m_A, L.o(3), vn, {L.e(0), L.o(2), L.o(4), L.e(1)});
    add(m_A, L.o(3), vd, {L.ev(), L.o(1), L.o(3), L.o(5)});
    add(m_A, L.o(4), eh, {L.e(1), L.f(0)});
    add(m_A, L.o(4), eq, {L.ev(), L.e(0), L.o(4), L.o(5)});
    add(m_A, L.o(5), ve, {L.e(1)});
    add(m_A, L.o(5), vn, {L.ev(), L.f(0), L.o(5), L.f(1)});
    add(m_A, L.o(5), vd, {L.e(2), L.e(0), L.o(4), L.o(6)});
    add(m_A, L.o(6), eh, {L.f(1), L.e(1)});
    add(m_A, L.o(6), eq, {L.ev(), L.e(2), L.o(5), L.o(6)});
    // Extra points beyond the patch at the refined level.
    add(m_A, L.x(0), 0.25, {fl, L.o(0), L.o(1), L.e(0)});
    add(m_A, L.x(1), eh, {L.e(0), L.o(1)});
    add(m_A, L.x(1), eq, {fl, L.o(0), L.o(2), L.f(0)});
    add(m_A, L.x(2), 0.25, {L.e(0), L.o(1), L.o(2), L.f(0)});
    add(m_A, L.x(3), eh, {L.f(0), L.o(2)});
    add(m_A, L.x(3), eq, {L.e(0), L.o(1), L.o(3), L.o(4)});
    add(m_A, L.x(4), 0.25, {L.f(0), L.o(2), L.o(3), L.o(4)});
    add(m_A, L.x(5), eh, {L.f(0), L.o(4)});
    add(m_A, L.x(5), eq, {L.o(2), L.o(3), L.e(1), L.o(5)});
    add(m_A, L.x(6), 0.25, {L.e(1), L.f(0), L.o(4), L.o(5)});
    add(m_A, L.x(7), eh, {L.e(1), L.o(5)});
    add(m_A, L.x(7), eq, {L.f(0), L.o(4), L.f(1), L.o(6)});
    add(m_A, L.x(8), 0.25, {L.f(1), L.e(1), L.o(5), L.o(6)});

    m_Abar = m_A.topRows(K);

    for (int kk2 = 1; kk2 <= 3; ++kk2) {
        auto& sel = m_select[static_cast<std::size_t>(kk2 - 1)];
        for (int b = 0; b < 4; ++b)
            for (int a = 0; a < 4; ++a) {
                int i = a, j = b;
                if (kk2 == 1) j = b - 1;
                if (kk2 == 3) i = a - 1;
                sel[static_cast<std::size_t>(a + 4 * b)] = L.at(i, j);
            }
    }

    m_powers.reserve(kMaxSubdivisionLevel);
    m_powers.push_back(Eigen::MatrixXd::Identity(K, K));
    for (int p = 1; p < kMaxSubdivisionLevel; ++p) m_powers.push_back(m_Abar * m_powers.back());

    m_picking.reserve(3 * kMaxSubdivisionLevel);
    for (int n = 1; n <= kMaxSubdivisionLevel; ++n)
        for (int kk2 = 1; kk2 <= 3; ++kk2) {
            Eigen::MatrixXd DA(16, K);
            const auto& sel = m_select[static_cast<std::size_t>(kk2 - 1)];
            for (int r = 0; r < 16; ++r) DA.row(r) = m_A.row(sel[static_cast<std::size_t>(r)]);
            m_picking.push_back(DA * m_powers[static_cast<std::size_t>(n - 1)]);
        }
}

const std::array<int, 16>& SubdivisionOperators::selection(int k) const
{
    if (k < 1 || k > 3) throw std::invalid_argument("sub-element index must be 1, 2 or 3");
    return m_select[static_cast<std::size_t>(k - 1)];
}

Eigen::MatrixXd SubdivisionOperators::selection_matrix(int k) const
{
    const auto& sel = selection(k);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(16, m_A.rows());
    for (int r = 0; r < 16; ++r) D(r, sel[static_cast<std::size_t>(r)]) = 1.0;
    return D;
}

const Eigen::MatrixXd& SubdivisionOperators::Abar_power(int p) const
{
    if (p < 0 || p >= kMaxSubdivisionLevel) throw std::invalid_argument("Abar power out of cached range");
    return m_powers[static_cast<std::size_t>(p)];
}

const Eigen::MatrixXd& SubdivisionOperators::picking_matrix(int n, int k) const
{
    if (n < 1 || n > kMaxSubdivisionLevel) throw std::invalid_argument("subdivision level out of range");
    if (k < 1 || k > 3) throw std::invalid_argument("sub-element index must be 1, 2 or 3");
    return m_picking[static_cast<std::size_t>(3 * (n - 1) + (k - 1))];
}

SubdivisionOperators build_operators(int valence)
{
    return SubdivisionOperators(valence);
}

const SubdivisionOperators& operators_for_valence(int valence)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const SubdivisionOperators>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[valence];
    if (!slot) slot = std::make_unique<const SubdivisionOperators>(valence);
    return *slot;
}

} // namespace subdiv_iga
