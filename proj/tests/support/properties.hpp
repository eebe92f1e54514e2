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

#include <subdiv_iga/mesh.hpp>
#include <subdiv_iga/patch.hpp>
#include <subdiv_iga/solver.hpp>

#include <random>
#include <string>
#include <vector>

namespace subdiv_iga::testing {

/// Uniform points in [lo, hi]^2.
std::vector<Vec2> random_points(int n, unsigned seed, double lo = 0.0, double hi = 1.0);

/// Copy of the mesh with every vertex moved by a uniform offset in [-amplitude, amplitude]^3.
ControlMesh perturb(const ControlMesh& mesh, double amplitude, unsigned seed);

/// Patch carrying only the type and valence, enough for basis evaluation.
ElementPatch synthetic_patch(PatchType type, int valence = 4);

/// Patch types exercised by the basis property checks, with labels.
struct BasisKind
{
    std::string label;
    ElementPatch patch;
};
std::vector<BasisKind> basis_kinds();

struct PartitionError
{
    double values = 0.0;      ///< max |sum N - 1|
    double derivatives = 0.0; ///< max |sum dN|
};
PartitionError partition_of_unity_error(const ElementPatch& patch, int n_points, unsigned seed);

/// Max over points of |FD - dN|_inf / max(|dN|_inf, 1) with central differences.
/// Irregular patches are sampled with max(xi, eta) >= 1/16.
double finite_difference_error(const ElementPatch& patch, int n_points, unsigned seed, double h = 1e-6);

/// Max |x_parent(u) - x_child(u')| between a mesh and its subdivision over all faces,
/// with u' the child-face parameter of the same surface point.
double stam_cross_level_error(const ControlMesh& mesh, int points_per_face, unsigned seed);

/// Max position difference between the irregular-layout (all four origin corners) and
/// regular evaluations of ordinary interior faces of a perturbed grid.
double valence4_equivalence_error(int points_per_face, unsigned seed);

/// Max |row sum - 1| of the extended subdivision operator for the given valences.
double operator_row_sum_error(const std::vector<int>& valences);

/// Max |S(T(V)) - T(S(V))| for a random affine map T and one subdivision step S.
double affine_invariance_error(const ControlMesh& mesh, unsigned seed);

struct InterfaceJumps
{
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};
/// Jumps of position and first/second parametric derivatives across every interior
/// edge shared by two regular interior faces of a perturbed grid.
InterfaceJumps regular_interface_jumps(int grid, int points_per_edge, unsigned seed);

struct StiffnessChecks
{
    double max_row_sum = 0.0;       ///< |K 1|_inf
    double relative_asymmetry = 0.0; ///< |K - K^T|_inf / |K|_inf
};
StiffnessChecks stiffness_checks(const ControlMesh& mesh, const Problem& problem);

/// Max |P_fit - P| when fitting exact limit samples of a perturbed mesh.
double fitting_recovery_error(const ControlMesh& mesh, unsigned seed);

/// max_deviation of the sine-curve interpolant for each sample count.
std::vector<double> sine_fit_deviations(const std::vector<int>& sample_counts);

/// Infinity norm of a sparse matrix.
double sparse_inf_norm(const Eigen::SparseMatrix<double>& A);

} // namespace subdiv_iga::testing
