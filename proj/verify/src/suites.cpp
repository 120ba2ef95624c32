#include "geoplan/verify/properties.hpp"

#include "geoplan/errors.hpp"

#include <algorithm>

namespace geoplan::verify {

bool SuiteReport::ok() const {
    return !properties.empty() &&
           std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.ok(); });
}

namespace {

const Rational kDelta(1, 1000);

SuiteReport core_suite(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed);
    return {"core",
            {reparametrization_exact(rng, trials), straight_segments_geodesic(rng, trials), sup_distance_metric(rng, trials),
             length_partition_supremum(rng, std::max<std::size_t>(1, trials / 10))}};
}

SuiteReport torus_suite(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed + 1);
    SuiteReport s{"torus", {}};
    for (std::size_t n = 1; n <= 4; ++n) s.properties.push_back(torus_count_law(rng, n, trials));
    for (std::size_t n = 1; n <= 3; ++n) {
        s.properties.push_back(torus_partition_grid(rng, n, 50));
        s.properties.push_back(torus_partition_random(rng, n, trials));
        s.properties.push_back(torus_continuity(rng, n, trials, kDelta));
    }
    s.properties.push_back(torus_subtorus_convexity(rng, trials));
    for (std::size_t n = 1; n <= 4; ++n) s.properties.push_back(torus_local_poset_structure(n));
    s.properties.push_back(torus_monodromy_control(16));
    return s;
}

SuiteReport klein_suite(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed + 2);
    return {"klein",
            {klein_cut_locus_dichotomy(rng, trials), klein_oracle_agreement(rng, trials), klein_window_sufficiency(rng, trials),
             klein_horizontal_equivariance(rng, trials), klein_planner_partition(rng, trials),
             klein_planner_continuity(rng, trials, kDelta, Rational(1, 100)), klein_monodromy_nontrivial(16),
             klein_poset_composition()}};
}

SuiteReport cube_suite(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed + 3);
    const std::size_t searches = std::max<std::size_t>(1, trials / 10);
    return {"cube",
            {cube_normalization_identity(rng, trials), cube_formula_oracle(rng, trials), cube_diagonal_substitution(rng, trials),
             cube_symmetric_diagonal({Rational(1, 10), Rational(1, 7), Rational(1, 5), Rational(1, 4), Rational(1, 3),
                                      Rational(2, 5)}),
             cube_corner_structure(), cube_witnesses(5, 5), cube_rotation_symmetry(rng, searches),
             cube_face_bound_stability(rng, searches), cube_corner_convergence()}};
}

SuiteReport poset_suite(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed + 4);
    return {"poset",
            {poset_builtin_bounds(), poset_rejects_violations(), poset_drop_level_monotone(),
             poset_relabel_invariance(rng, std::min<std::size_t>(trials, 100)), poset_bottom_consistent()}};
}

} // namespace

std::vector<std::string> suite_names() {
    return {"core", "torus", "klein", "cube", "poset", "all"};
}

std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed, std::size_t trials) {
    using Runner = SuiteReport (*)(std::uint64_t, std::size_t);
    const std::vector<std::pair<std::string, Runner>> suites{
        {"core", core_suite}, {"torus", torus_suite}, {"klein", klein_suite}, {"cube", cube_suite}, {"poset", poset_suite},
    };
    std::vector<SuiteReport> out;
    for (const auto& [n, run] : suites)
        if (name == "all" || name == n) out.push_back(run(seed, trials));
    if (out.empty()) throw DomainError("unknown suite '" + name + "'");
    return out;
}

} // namespace geoplan::verify
