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

#include <subdiv_iga_cli/cases.hpp>
#include <subdiv_iga_cli/config.hpp>

#include <optional>
#include <ostream>
#include <vector>

namespace subdiv_iga::cli {

struct LevelResult
{
    int level = 0;
    int n_elements = 0;
    int n_dofs = 0;
    double h_normalized = 1.0;
    ErrorNorms errors;
    std::optional<double> rate_L2;
    std::optional<double> rate_H1;
    double assembly_seconds = 0.0;
    double solve_seconds = 0.0;
    int iterations = 0;
};

struct RunReport
{
    std::string case_name;
    std::string quadrature;
    std::vector<LevelResult> levels;
    /// Pointwise errors and row nonzeros on the finest level.
    std::vector<PointwiseError> pointwise;
    std::vector<int> row_nnz;
};

/// log2(coarse / fine).
double observed_rate(double coarse, double fine);

/// Resolves the case (plus replacement mesh) for a configuration.
CaseDefinition resolve_case(const RunConfig& config);

/// Runs the convergence study. Writes convergence.csv, pointwise_error.csv and sparsity.csv
/// into config.out (created if needed) and logs a table to `log` when given.
RunReport run_case(const RunConfig& config, std::ostream* log = nullptr);

struct TimingEntry
{
    int level = 0;
    int n_elements = 0;
    int n_irregular = 0;
    int adaptive_depth = 0;
    double assembly_seconds = 0.0;
    /// assembly_seconds relative to the standard rule on the same level.
    double overhead = 1.0;
};

/// Assembly times for adaptive depths {0, 3, 7} on every level. Writes timing.csv.
std::vector<TimingEntry> report_timing(const RunConfig& config, std::ostream* log = nullptr);

} // namespace subdiv_iga::cli
