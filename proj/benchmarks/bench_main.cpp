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
#include <subdiv_iga/basis.hpp>
#include <subdiv_iga/generators.hpp>
#include <subdiv_iga/solver.hpp>
#include <subdiv_iga/subdivision.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace subdiv_iga;

std::vector<Vec2> random_points(int n)
{
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(1e-6, 1.0);
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.emplace_back(u(rng), u(rng));
    return pts;
}

void BM_RegularBasis(benchmark::State& state)
{
    const auto pts = random_points(1024);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(regular_basis(pts[i++ & 1023]));
    }
}
BENCHMARK(BM_RegularBasis);

void BM_StamBasis(benchmark::State& state)
{
    const int valence = static_cast<int>(state.range(0));
    const SubdivisionOperators& ops = operators_for_valence(valence);
    ElementPatch patch;
    patch.type = PatchType::Irregular;
    patch.valence = valence;
    patch.control_vertices.assign(static_cast<std::size_t>(2 * valence + 8), 0);
    const auto pts = random_points(1024);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_irregular(patch, ops, pts[i++ & 1023]));
    }
}
BENCHMARK(BM_StamBasis)->Arg(3)->Arg(5)->Arg(6);

void BM_Subdivide(benchmark::State& state)
{
    const ControlMesh mesh = subdivide_mesh(hemisphere_mesh(), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(subdivide_mesh(mesh));
    }
    state.SetLabel(std::to_string(mesh.num_faces()) + " faces");
}
BENCHMARK(BM_Subdivide)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_Assemble(benchmark::State& state)
{
    const ControlMesh mesh = subdivide_mesh(cylinder_4ev_mesh(CylinderGeometry{}), static_cast<int>(state.range(0)));
    const auto patches = classify_elements(mesh);
    Problem problem;
    problem.exact = sine_exponential_case();
    AssemblyOptions options;
    options.scheme = QuadratureScheme(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(mesh, patches, problem, options));
    }
    state.SetLabel(std::to_string(mesh.num_faces()) + " elements, n_d " + std::to_string(state.range(1)));
}
BENCHMARK(BM_Assemble)->ArgsProduct({{0, 1}, {0, 3, 7}})->Unit(benchmark::kMillisecond);

void BM_SolvePenalized(benchmark::State& state)
{
    const ControlMesh mesh = subdivide_mesh(hemisphere_mesh(), static_cast<int>(state.range(0)));
    const auto patches = classify_elements(mesh);
    Problem problem;
    problem.exact = sine_exponential_case();
    const LinearSystem system = assemble(mesh, patches, problem, AssemblyOptions{});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_penalized(system));
    }
    state.SetLabel(std::to_string(mesh.num_vertices()) + " dofs");
}
BENCHMARK(BM_SolvePenalized)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
