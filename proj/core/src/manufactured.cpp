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
#include <subdiv_iga/manufactured.hpp>

#include <cmath>
#include <numbers>

namespace subdiv_iga {

ManufacturedCase sine_exponential_case()
{
    using std::numbers::pi;
    ManufacturedCase c;
    c.name = "sin(pi x1) cos(pi x2) exp(x3)";
    c.u = [](const Vec3& x) { return std::sin(pi * x[0]) * std::cos(pi * x[1]) * std::exp(x[2]); };
    c.grad = [](const Vec3& x) {
        const double s1 = std::sin(pi * x[0]), c1 = std::cos(pi * x[0]);
        const double s2 = std::sin(pi * x[1]), c2 = std::cos(pi * x[1]);
        const double e = std::exp(x[2]);
        return Vec3(pi * c1 * c2 * e, -pi * s1 * s2 * e, s1 * c2 * e);
    };
    c.hess = [](const Vec3& x) {
        const double s1 = std::sin(pi * x[0]), c1 = std::cos(pi * x[0]);
        const double s2 = std::sin(pi * x[1]), c2 = std::cos(pi * x[1]);
        const double e = std::exp(x[2]);
        Mat3 H;
        H(0, 0) = -pi * pi * s1 * c2 * e;
        H(1, 1) = -pi * pi * s1 * c2 * e;
        H(2, 2) = s1 * c2 * e;
        H(0, 1) = H(1, 0) = -pi * pi * c1 * s2 * e;
        H(0, 2) = H(2, 0) = pi * c1 * c2 * e;
        H(1, 2) = H(2, 1) = -pi * s1 * s2 * e;
        return H;
    };
    return c;
}

ManufacturedCase plate_case(int test)
{
    using std::numbers::pi;
    // Profiles in x2 only: value, first and second derivative.
    std::function<double(double)> g, dg, ddg;
    switch (test) {
    case 1:
        g = [](double y) { return 2.0 * y; };
        dg = [](double) { return 2.0; };
        ddg = [](double) { return 0.0; };
        break;
    case 2:
        g = [](double y) { return -0.5 * y * y + 3.0 * y; };
        dg = [](double y) { return -y + 3.0; };
        ddg = [](double) { return -1.0; };
        break;
    case 3:
        g = [](double y) { return -y * y * y / 6.0 + 8.0 * y / 3.0; };
        dg = [](double y) { return -0.5 * y * y + 8.0 / 3.0; };
        ddg = [](double y) { return -y; };
        break;
    case 4:
        g = [](double y) { return std::sin(pi * y) / pi + 2.0 * y; };
        dg = [](double y) { return std::cos(pi * y) + 2.0; };
        ddg = [](double y) { return -pi * std::sin(pi * y); };
        break;
    default: throw std::invalid_argument("plate case must be 1..4, got " + std::to_string(test));
    }
    ManufacturedCase c;
    c.name = "plate test " + std::to_string(test);
    c.u = [g](const Vec3& x) { return g(x[1]); };
    c.grad = [dg](const Vec3& x) { return Vec3(0.0, dg(x[1]), 0.0); };
    c.hess = [ddg](const Vec3& x) {
        Mat3 H = Mat3::Zero();
        H(1, 1) = ddg(x[1]);
        return H;
    };
    return c;
}

double manufactured_rhs(const ManufacturedCase& mcase, const Vec3& x, const Vec3& n, double c)
{
    const Mat3 H = mcase.hess(x);
    return -H.trace() + n.dot(H * n) + c * n.dot(mcase.grad(x));
}

} // namespace subdiv_iga
