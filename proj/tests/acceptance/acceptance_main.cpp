// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "geoplan/torus.hpp"
#include "geoplan/verify/properties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace geoplan;
using namespace geoplan::verify;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    double time_limit; // seconds, 0 = none
    std::function<std::vector<PropertyResult>(Rng&)> run;
};

const Rational kDelta(1, 1000);

} // namespace

int main() {
    const std::uint64_t seed = default_seed();
    const std::vector<Criterion> criteria{
        {"AC1", "torus geodesic count law against lattice brute force", 30,
         [](Rng& rng) {
             std::vector<PropertyResult> out;
             for (std::size_t n = 1; n <= 4; ++n) out.push_back(torus_count_law(rng, n, 10000));
             return out;
         }},
        {"AC2", "torus planner partitions pairs and is continuous per domain", 0,
         [](Rng& rng) {
             std::vector<PropertyResult> out;
             for (std::size_t n = 1; n <= 3; ++n) {
                 out.push_back(torus_partition_grid(rng, n, 50));
                 out.push_back(torus_partition_random(rng, n, 10000));
                 out.push_back(torus_continuity(rng, n, 10000, kDelta));
             }
             return out;
         }},
        {"AC3", "klein cut locus wedge/theta dichotomy with oracle multiplicities", 0,
         [](Rng& rng) { return std::vector<PropertyResult>{klein_cut_locus_dichotomy(rng, 1000)}; }},
        {"AC4", "klein planner domains, section values, continuity and monodromy", 0,
         [](Rng& rng) {
             return std::vector<PropertyResult>{
                 klein_planner_partition(rng, 10000),
                 klein_planner_continuity(rng, 2000, kDelta, Rational(1, 100)),
                 klein_monodromy_nontrivial(64),
                 torus_monodromy_control(64),
             };
         }},
        {"AC5", "cube formulas, oracle argmin sets, diagonal, corner and witness counts", 60,
         [](Rng& rng) {
             return std::vector<PropertyResult>{
                 cube_normalization_identity(rng, 1000),
                 cube_formula_oracle(rng, 1000),
                 cube_symmetric_diagonal({Rational(1, 10), Rational(1, 7), Rational(1, 5), Rational(1, 4), Rational(1, 3),
                                          Rational(2, 5)}),
                 cube_corner_structure(),
                 cube_witnesses(5, 5),
             };
         }},
        {"AC6", "poset engine bounds and rejection of violators", 5,
         [](Rng&) { return std::vector<PropertyResult>{poset_builtin_bounds(), poset_rejects_violations()}; }},
        {"AC7", "constant-speed reparametrization is exact", 0,
         [](Rng& rng) { return std::vector<PropertyResult>{reparametrization_exact(rng, 1000)}; }},
    };

    std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        Rng rng(seed + i);
        const auto start = std::chrono::steady_clock::now();
        const auto results = c.run(rng);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::size_t checked = 0, failed = 0;
        std::string why;
        for (const auto& r : results) {
            checked += r.checked;
            failed += r.failed;
            if (!r.ok() && why.empty()) why = r.name + ": " + (r.first_failure.empty() ? "nothing checked" : r.first_failure);
        }
        const bool in_time = c.time_limit == 0 || secs < c.time_limit;
        const bool ok = failed == 0 && why.empty() && in_time;
        if (!in_time && why.empty()) why = "exceeded " + std::to_string(static_cast<int>(c.time_limit)) + " s";
        all = all && ok;
        std::printf("%s %s: %s (%zu checks, %zu failures, %.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                    checked, failed, secs, ok ? "" : " -- ", ok ? "" : why.c_str());
    }
    return all ? 0 : 1;
}
