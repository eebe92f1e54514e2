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

#include <functional>
#include <string>

namespace subdiv_iga {

/// Exact solution u with its spatial gradient and Hessian.
struct ManufacturedCase
{
    std::string name;
    std::function<double(const Vec3&)> u;
    std::function<Vec3(const Vec3&)> grad;
    std::function<Mat3(const Vec3&)> hess;
};

/// u = sin(pi x1) cos(pi x2) exp(x3).
ManufacturedCase sine_exponential_case();

/// Plate cases 1..4 on [0,2]^2 with u(x2=0) = 0 and u(x2=2) = 4:
/// 1: u = 2 x2, 2: u = -x2^2/2 + 3 x2, 3: u = -x2^3/6 + 8 x2/3, 4: u = sin(pi x2)/pi + 2 x2.
ManufacturedCase plate_case(int test);

/// Forcing of -Lap_Gamma u = f on a surface with unit normal n and total curvature c = div_Gamma n:
/// f = -tr(H) + n.H.n + c (n . grad u).
double manufactured_rhs(const ManufacturedCase& mcase, const Vec3& x, const Vec3& n, double c);

} // namespace subdiv_iga
