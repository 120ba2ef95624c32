#pragma once

#include "geoplan/verify/rng.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace geoplan::verify {

struct PropertyResult {
    PropertyResult() = default;
    explicit PropertyResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0 && checked > 0; }
    void fail(const std::string& why);
};

// metric_core
PropertyResult reparametrization_exact(Rng& rng, std::size_t trials);
PropertyResult straight_segments_geodesic(Rng& rng, std::size_t trials);
PropertyResult sup_distance_metric(Rng& rng, std::size_t trials);
PropertyResult length_partition_supremum(Rng& rng, std::size_t trials);

// flat_torus
PropertyResult torus_count_law(Rng& rng, std::size_t n, std::size_t trials);
PropertyResult torus_partition_grid(Rng& rng, std::size_t n, long grid);
PropertyResult torus_partition_random(Rng& rng, std::size_t n, std::size_t trials);
PropertyResult torus_continuity(Rng& rng, std::size_t n, std::size_t trials, const Rational& delta);
PropertyResult torus_subtorus_convexity(Rng& rng, std::size_t trials);
PropertyResult torus_local_poset_structure(std::size_t n);
PropertyResult torus_monodromy_control(std::size_t steps);

// klein_bottle
PropertyResult klein_cut_locus_dichotomy(Rng& rng, std::size_t trials);
PropertyResult klein_oracle_agreement(Rng& rng, std::size_t trials);
PropertyResult klein_window_sufficiency(Rng& rng, std::size_t trials);
PropertyResult klein_horizontal_equivariance(Rng& rng, std::size_t trials);
PropertyResult klein_planner_partition(Rng& rng, std::size_t trials);
PropertyResult klein_planner_continuity(Rng& rng, std::size_t trials, const Rational& delta, const Rational& tol);
PropertyResult klein_monodromy_nontrivial(std::size_t steps);
PropertyResult klein_poset_composition();

// cube_sphere
PropertyResult cube_normalization_identity(Rng& rng, std::size_t trials);
PropertyResult cube_formula_oracle(Rng& rng, std::size_t trials);
PropertyResult cube_diagonal_substitution(Rng& rng, std::size_t trials);
PropertyResult cube_symmetric_diagonal(const std::vector<Rational>& zs);
PropertyResult cube_corner_structure();
PropertyResult cube_witnesses(int max_i, int max_j);
PropertyResult cube_rotation_symmetry(Rng& rng, std::size_t trials);
PropertyResult cube_face_bound_stability(Rng& rng, std::size_t trials);
PropertyResult cube_corner_convergence();

// strat_cover
PropertyResult poset_builtin_bounds();
PropertyResult poset_rejects_violations();
PropertyResult poset_drop_level_monotone();
PropertyResult poset_relabel_invariance(Rng& rng, std::size_t trials);
PropertyResult poset_bottom_consistent();

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;
    bool ok() const;
};

// "core", "torus", "klein", "cube", "poset" or "all".
std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed, std::size_t trials);
std::vector<std::string> suite_names();

} // namespace geoplan::verify
