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
#include "properties.hpp"

#include <subdiv_iga/generators.hpp>
#include <subdiv_iga/subdivision.hpp>
#include <subdiv_iga_cli/driver.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace {

using namespace subdiv_iga;
using namespace subdiv_iga::cli;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

bool within(double value, double target, double tol)
{
    return std::abs(value - target) <= tol;
}

std::filesystem::path scratch_dir(const std::string& name)
{
    return std::filesystem::temp_directory_path() / "subdiv_iga_acceptance" / name;
}

RunReport run(const std::string& case_name, int levels, int adaptive_depth)
{
    RunConfig config;
    config.case_name = case_name;
    config.levels = levels;
    config.adaptive_depth = adaptive_depth;
    config.out = scratch_dir(case_name + "-nd" + std::to_string(adaptive_depth));
    return run_case(config);
}

const LevelResult& finest(const RunReport& r)
{
    return r.levels.back();
}

Outcome patch_test_exactness()
{
    const CaseDefinition def = make_case("plate-test1-mesh1");
    const std::vector<ControlMesh> meshes = build_levels(def, 4);
    double value_err = 0.0, grad_err = 0.0;
    std::size_t samples = 0;
    for (const ControlMesh& mesh : meshes) {
        const auto patches = classify_elements(mesh);
        const LinearSystem sys = assemble(mesh, patches, def.problem, AssemblyOptions{});
        const SolveResult sol = solve_penalized(sys);
        for (const PointwiseError& p : pointwise_error_field(mesh, patches, sol.u, def.problem.exact, 9))
            value_err = std::max(value_err, p.abs_error);
        for (const ElementPatch& patch : patches)
            for (const Vec2& xi : testing::random_points(4, static_cast<unsigned>(patch.face))) {
                const SurfacePoint sp = evaluate_surface_point(patch, mesh, xi);
                Eigen::VectorXd ue(patch.size());
                for (int a = 0; a < patch.size(); ++a) ue[a] = sol.u[patch.control_vertices[static_cast<std::size_t>(a)]];
                grad_err = std::max(grad_err, (sp.gradients * ue - Vec3(0.0, 2.0, 0.0)).norm());
                ++samples;
            }
        samples += static_cast<std::size_t>(mesh.num_faces()) * 81;
    }
    return {value_err < 1e-5 && grad_err < 1e-5,
            fmt("max |u - u_h| = %.2e, max |grad u_h - (0,2,0)| = %.2e over %zu samples on 4 levels (limit 1e-5)",
                value_err, grad_err, samples)};
}

Outcome plate_rates()
{
    bool pass = true;
    std::string detail;
    for (int test : {2, 3, 4}) {
        const RunReport r = run("plate-test" + std::to_string(test) + "-mesh1", 4, 0);
        const double l2 = *finest(r).rate_L2, h1 = *finest(r).rate_H1;
        const double target_l2 = test == 4 ? 4.0 : 2.5, target_h1 = test == 4 ? 3.0 : 1.5;
        pass = pass && within(l2, target_l2, 0.4) && within(h1, target_h1, 0.4);
        detail += fmt("test %d L2 %.2f (%.1f) H1 %.2f (%.1f); ", test, l2, target_l2, h1, target_h1);
    }
    return {pass, detail + "tolerance 0.4"};
}

Outcome ev_rate_degradation()
{
    const RunReport adaptive = run("plate-test4-mesh2", 4, 7);
    const RunReport standard = run("plate-test4-mesh2", 4, 0);
    const double rate = *finest(adaptive).rate_L2;
    return {within(rate, 2.5, 0.4), fmt("mesh 2 test 4 adaptive:7 L2 rate %.2f (target 2.5 +- 0.4); standard rule %.2f",
                                        rate, *finest(standard).rate_L2)};
}

Outcome cylinder_regular_rate()
{
    const RunReport r = run("cylinder-regular", 4, 0);
    bool pass = true;
    std::string rates;
    for (std::size_t i = 1; i < r.levels.size(); ++i) {
        pass = pass && within(*r.levels[i].rate_L2, 4.0, 0.5);
        rates += fmt("%.2f ", *r.levels[i].rate_L2);
    }
    return {pass, "L2 rates " + rates + "over " + std::to_string(r.levels.size() - 1) +
                      " refinements (target 4.0 +- 0.5), finest " + std::to_string(finest(r).n_elements) + " elements"};
}

Outcome cylinder_4ev_magnitudes()
{
    const RunReport adaptive = run("cylinder-4ev", 3, 7);
    const RunReport standard = run("cylinder-4ev", 3, 0);
    const std::array<int, 3> elements{260, 1040, 4160};
    const std::array<double, 3> reference{6.72e-3, 3.49e-4, 5.31e-5};
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < 3; ++i) {
        const LevelResult& a = adaptive.levels[i];
        const LevelResult& s = standard.levels[i];
        const double ratio = a.errors.e_L2 / reference[i];
        pass = pass && a.n_elements == elements[i] && ratio >= 0.5 && ratio <= 2.0;
        if (i > 0) pass = pass && a.errors.e_L2 < s.errors.e_L2 && a.errors.e_L2 < adaptive.levels[i - 1].errors.e_L2;
        detail += fmt("%d el: adaptive %.2e (x%.2f of ref), standard %.2e; ", a.n_elements, a.errors.e_L2, ratio,
                      s.errors.e_L2);
    }
    return {pass, detail};
}

struct Hemisphere
{
    ControlMesh mesh;
    std::vector<ElementPatch> patches;
    CaseDefinition def;
};

const Hemisphere& hemisphere_level2()
{
    static const Hemisphere h = [] {
        Hemisphere out{ControlMesh{}, {}, make_case("hemisphere")};
        out.mesh = build_levels(out.def, 3).back();
        out.patches = classify_elements(out.mesh);
        return out;
    }();
    return h;
}

Outcome ev_error_localization()
{
    const Hemisphere& h = hemisphere_level2();
    auto max_error = [&](int depth) {
        AssemblyOptions options;
        options.scheme = QuadratureScheme(depth);
        const LinearSystem sys = assemble(h.mesh, h.patches, h.def.problem, options);
        const SolveResult sol = solve_penalized(sys);
        const auto field = pointwise_error_field(h.mesh, h.patches, sol.u, h.def.problem.exact, 9);
        return *std::max_element(field.begin(), field.end(),
                                 [](const PointwiseError& a, const PointwiseError& b) { return a.abs_error < b.abs_error; });
    };
    const PointwiseError standard = max_error(0);
    const PointwiseError adaptive = max_error(7);
    return {standard.near_extraordinary && adaptive.abs_error < standard.abs_error,
            fmt("standard max %.3e in element %d (EV-adjacent: %s); adaptive:7 max %.3e", standard.abs_error,
                standard.element, standard.near_extraordinary ? "yes" : "no", adaptive.abs_error)};
}

Outcome property_suites()
{
    using namespace subdiv_iga::testing;
    std::vector<std::string> failures;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };

    for (const BasisKind& kind : basis_kinds()) {
        const PartitionError pe = partition_of_unity_error(kind.patch, 1000, 11);
        check(pe.values < 1e-12 && pe.derivatives < 1e-10, "partition of unity " + kind.label);
        check(finite_difference_error(kind.patch, 200, 12) < 1e-6, "finite differences " + kind.label);
    }
    const ControlMesh hemi = perturb(hemisphere_mesh(), 0.02, 3);
    const ControlMesh cyl = perturb(cylinder_7ev_mesh(default_cylinder()), 0.02, 4);
    check(stam_cross_level_error(hemi, 20, 5) < 1e-10, "cross-level Stam hemisphere");
    check(stam_cross_level_error(cyl, 10, 6) < 1e-10, "cross-level Stam 7-EV cylinder");
    check(valence4_equivalence_error(50, 7) < 1e-10, "valence-4 equivalence");
    check(operator_row_sum_error({3, 4, 5, 6, 7, 8, 12}) < 1e-13, "operator row sums");
    check(affine_invariance_error(hemi, 8) < 1e-12 && affine_invariance_error(perturb(plate_mesh2(), 0.1, 9), 9) < 1e-12,
          "affine invariance");
    const InterfaceJumps jumps = regular_interface_jumps(8, 20, 10);
    check(jumps.c0 < 1e-10 && jumps.c1 < 1e-10 && jumps.c2 < 1e-10, "C2 interface continuity");

    Problem curved;
    curved.exact = sine_exponential_case();
    for (const ControlMesh& m : std::vector<ControlMesh>{hemisphere_level2().mesh, subdivide_mesh(cyl)}) {
        const StiffnessChecks s = stiffness_checks(m, curved);
        check(s.max_row_sum < 1e-10, "stiffness nullspace");
        check(s.relative_asymmetry < 1e-12, "stiffness symmetry");
    }
    check(fitting_recovery_error(hemisphere_mesh(), 13) < 1e-8, "least-squares recovery");
    const auto dev = sine_fit_deviations({6, 11, 21});
    check(dev[0] > dev[1] && dev[1] > dev[2], "sine fit trend");

    std::string detail = fmt("sine fit deviation %.3f > %.3f > %.4f; ", dev[0], dev[1], dev[2]);
    if (failures.empty()) return {true, detail + "all property checks hold"};
    for (const std::string& f : failures) detail += "failed: " + f + "; ";
    return {false, detail};
}

Outcome sparsity_report()
{
    const Hemisphere& h = hemisphere_level2();
    const LinearSystem sys = assemble(h.mesh, h.patches, h.def.problem, AssemblyOptions{});
    const std::vector<int> nnz = row_nonzeros(sys.K);
    int min_interior = 1 << 30;
    for (int v = 0; v < h.mesh.num_vertices(); ++v)
        if (!h.mesh.is_boundary_vertex(v)) min_interior = std::min(min_interior, nnz[static_cast<std::size_t>(v)]);
    const bool pass = sys.K.rows() == 1313 && h.mesh.num_faces() == 1280 && min_interior >= 25;
    return {pass, fmt("dimension %ld, %d elements, min interior row nnz %d (need 1313, 1280, >= 25)",
                      static_cast<long>(sys.K.rows()), h.mesh.num_faces(), min_interior)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"patch-test exactness", patch_test_exactness},
        {"plate convergence rates", plate_rates},
        {"EV rate degradation", ev_rate_degradation},
        {"regular cylinder rate", cylinder_regular_rate},
        {"4-EV cylinder magnitudes", cylinder_4ev_magnitudes},
        {"EV error localization", ev_error_localization},
        {"property suites", property_suites},
        {"sparsity report", sparsity_report},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
