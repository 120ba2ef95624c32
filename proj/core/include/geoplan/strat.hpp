#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geoplan {

struct PosetElement {
    std::string id;
    int level = 1;
    std::vector<std::string> sheets;
};

// Covering relation between adjacent levels with its sheet map src -> dst.
struct PosetCover {
    std::string src;
    std::string dst;
    std::map<std::string, std::string> map;
};

// Topological hypotheses the engine cannot check; asserted by the caller.
struct PosetFlags {
    bool trivial_coverings = false;
    bool locally_compact = false;
    bool nonempty_intersections = false;

    bool all() const { return trivial_coverings && locally_compact && nonempty_intersections; }
};

struct StratPoset {
    std::string name;
    std::vector<PosetElement> elements;
    std::vector<PosetCover> covers;
    PosetFlags flags;

    const PosetElement* find(std::string_view id) const;
    // Highest level present, 0 when empty.
    int levels() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

struct BoundReport {
    int levels = 0;
    // Present only when every non-bottom element is inconsistent.
    std::optional<int> lower_bound;
    std::vector<std::string> inconsistent_elements;
    std::vector<std::string> consistent_elements;
    ValidationReport validation;

    bool applicable() const { return lower_bound.has_value(); }
};

ValidationReport validate_poset(const StratPoset& p);

// At least one incoming cover and the images of all incoming maps are disjoint
// as a family (empty common intersection). Throws on an unknown id.
bool inconsistent_at(const StratPoset& p, std::string_view id);

// Throws ValidationError carrying the problems when p is invalid.
BoundReport lower_bound(const StratPoset& p);

// N - 1 as an equality when the caller asserts every flag and the lower
// bound applies; absent otherwise.
std::optional<int> upper_bound_if_trivial(const StratPoset& p, const PosetFlags& flags);

// "circle", "torus_corner:n" (1 <= n <= 4), "klein_S4", "cube_corner".
StratPoset builtin_poset(std::string_view name);
std::vector<std::string> builtin_poset_names();

StratPoset circle_poset();

// Same poset without its highest level.
StratPoset drop_top_level(const StratPoset& p);

} // namespace geoplan
