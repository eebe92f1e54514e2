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

#include <Eigen/Core>

#include <array>
#include <stdexcept>
#include <string>

namespace subdiv_iga {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat32 = Eigen::Matrix<double, 3, 2>;

/// Quad face: four vertex indices in counter-clockwise order.
using Quad = std::array<int, 4>;

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Invalid mesh topology or unsupported patch configuration.
class MeshError : public Error
{
public:
    using Error::Error;
};

/// Basis or surface evaluation outside the admissible parameter set.
class EvaluationError : public Error
{
public:
    using Error::Error;
};

/// Linear solver breakdown or non-convergence.
class SolverError : public Error
{
public:
    using Error::Error;
};

} // namespace subdiv_iga
