#include "geoplan/strat.hpp"

#include "geoplan/cube.hpp"
#include "geoplan/errors.hpp"
#include "geoplan/klein.hpp"
#include "geoplan/torus.hpp"

#include <algorithm>
#include <set>

namespace geoplan {

using SheetMap = std::map<std::string, std::string>;

const PosetElement* StratPoset::find(std::string_view id) const {
    for (const auto& e : elements)
        if (e.id == id) return &e;
    return nullptr;
}

int StratPoset::levels() const {
    int n = 0;
    for (const auto& e : elements) n = std::max(n, e.level);
    return n;
}

ValidationReport validate_poset(const StratPoset& p) {
    ValidationReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.problems.push_back(std::move(msg));
    };
    if (p.elements.empty()) {
        fail("poset has no elements");
        return r;
    }

    std::map<std::string, const PosetElement*> by_id;
    for (const auto& e : p.elements) {
        if (e.id.empty()) fail("element with empty id");
        if (!by_id.emplace(e.id, &e).second) fail("duplicate element id '" + e.id + "'");
        if (e.level < 1) fail("element '" + e.id + "' has level " + std::to_string(e.level) + " < 1");
        if (e.sheets.empty()) fail("element '" + e.id + "' has no sheets");
        std::set<std::string> labels(e.sheets.begin(), e.sheets.end());
        if (labels.size() != e.sheets.size()) fail("element '" + e.id + "' repeats a sheet label");
    }
    std::set<int> levels;
    for (const auto& e : p.elements) levels.insert(e.level);
    for (int l = 1; l <= p.levels(); ++l)
        if (!levels.count(l)) fail("level " + std::to_string(l) + " is empty");

    std::set<std::pair<std::string, std::string>> seen_covers;
    std::vector<const PosetCover*> good_covers;
    for (const auto& c : p.covers) {
        const std::string name = "'" + c.src + "' -> '" + c.dst + "'";
        auto src = by_id.find(c.src), dst = by_id.find(c.dst);
        if (src == by_id.end() || dst == by_id.end()) {
            fail("cover " + name + " references an unknown element");
            continue;
        }
        if (!seen_covers.insert({c.src, c.dst}).second) fail("duplicate cover " + name);
        if (dst->second->level != src->second->level + 1) {
            fail("non-adjacent cover " + name + " (levels " + std::to_string(src->second->level) + " and " +
                 std::to_string(dst->second->level) + ")");
            continue;
        }
        const auto& from = src->second->sheets;
        const auto& to = dst->second->sheets;
        bool ok = true;
        for (const auto& s : from)
            if (!c.map.count(s)) {
                fail("cover " + name + " does not map sheet '" + s + "'");
                ok = false;
            }
        std::set<std::string> images;
        for (const auto& [k, v] : c.map) {
            if (std::find(from.begin(), from.end(), k) == from.end()) {
                fail("cover " + name + " maps unknown sheet '" + k + "'");
                ok = false;
            }
            if (std::find(to.begin(), to.end(), v) == to.end()) {
                fail("cover " + name + " maps onto unknown sheet '" + v + "'");
                ok = false;
            }
            if (!images.insert(v).second) {
                fail("cover " + name + " is not injective at '" + v + "'");
                ok = false;
            }
        }
        if (ok) good_covers.push_back(&c);
    }
    if (!r.ok) return r;

    // composed[e][a] is the sheet map from ancestor a into e. Every chain of
    // covers between the same two elements must produce the same map.
    std::map<std::string, std::map<std::string, SheetMap>> composed;
    std::vector<const PosetCover*> order = good_covers;
    std::stable_sort(order.begin(), order.end(), [&](const PosetCover* a, const PosetCover* b) {
        return by_id.at(a->src)->level < by_id.at(b->src)->level;
    });
    auto record = [&](const std::string& dst, const std::string& ancestor, SheetMap m) {
        auto& slot = composed[dst];
        auto it = slot.find(ancestor);
        if (it == slot.end()) {
            slot.emplace(ancestor, std::move(m));
        } else if (it->second != m) {
            fail("composition inconsistent: chains from '" + ancestor + "' to '" + dst + "' disagree");
        }
    };
    for (const PosetCover* c : order) {
        record(c->dst, c->src, c->map);
        auto below = composed.find(c->src);
        if (below == composed.end()) continue;
        for (const auto& [ancestor, m] : below->second) {
            SheetMap through;
            for (const auto& [k, v] : m) through[k] = c->map.at(v);
            record(c->dst, ancestor, std::move(through));
        }
    }
    return r;
}

bool inconsistent_at(const StratPoset& p, std::string_view id) {
    const PosetElement* e = p.find(id);
    if (e == nullptr) throw ValidationError("unknown element '" + std::string(id) + "'");
    std::set<std::string> common(e->sheets.begin(), e->sheets.end());
    bool any = false;
    for (const auto& c : p.covers) {
        if (c.dst != id) continue;
        any = true;
        std::set<std::string> image;
        for (const auto& [k, v] : c.map) image.insert(v);
        std::set<std::string> next;
        std::set_intersection(common.begin(), common.end(), image.begin(), image.end(),
                              std::inserter(next, next.begin()));
        common = std::move(next);
    }
    return any && common.empty();
}

BoundReport lower_bound(const StratPoset& p) {
    BoundReport r;
    r.validation = validate_poset(p);
    if (!r.validation.ok) {
        std::string msg = "invalid poset";
        for (const auto& s : r.validation.problems) msg += "; " + s;
        throw ValidationError(msg);
    }
    r.levels = p.levels();
    for (const auto& e : p.elements) {
        if (e.level == 1) continue;
        (inconsistent_at(p, e.id) ? r.inconsistent_elements : r.consistent_elements).push_back(e.id);
    }
    if (r.consistent_elements.empty()) r.lower_bound = r.levels - 1;
    return r;
}

std::optional<int> upper_bound_if_trivial(const StratPoset& p, const PosetFlags& flags) {
    if (!flags.all()) return std::nullopt;
    if (!validate_poset(p).ok) return std::nullopt;
    auto report = lower_bound(p);
    return report.lower_bound;
}

StratPoset circle_poset() {
    StratPoset p;
    p.name = "circle";
    p.elements = {
        {"P1r", 1, {"sigma_r"}},
        {"P1l", 1, {"sigma_l"}},
        {"P2", 2, {"r", "l"}},
    };
    p.covers = {
        {"P1r", "P2", {{"sigma_r", "r"}}},
        {"P1l", "P2", {{"sigma_l", "l"}}},
    };
    p.flags = {true, true, true};
    return p;
}

StratPoset builtin_poset(std::string_view name) {
    if (name == "circle") return circle_poset();
    if (name == "klein_S4") return klein_local_poset("S4_point");
    if (name == "cube_corner") return cube_corner_poset();
    for (std::string_view prefix : {"torus_corner:", "torus_corner("}) {
        if (name.substr(0, prefix.size()) != prefix) continue;
        std::string digits(name.substr(prefix.size()));
        if (prefix.back() == '(') {
            if (digits.empty() || digits.back() != ')') break;
            digits.pop_back();
        }
        if (digits.size() != 1 || digits[0] < '1' || digits[0] > '4')
            throw DomainError("torus_corner dimension must be in 1..4");
        return torus_local_poset(static_cast<std::size_t>(digits[0] - '0'));
    }
    throw DomainError("unknown builtin poset '" + std::string(name) + "'");
}

std::vector<std::string> builtin_poset_names() {
    return {"circle", "torus_corner:1", "torus_corner:2", "torus_corner:3", "torus_corner:4", "klein_S4", "cube_corner"};
}

StratPoset drop_top_level(const StratPoset& p) {
    const int top = p.levels();
    StratPoset out;
    out.name = p.name;
    out.flags = p.flags;
    std::set<std::string> removed;
    for (const auto& e : p.elements) {
        if (e.level == top) removed.insert(e.id);
        else out.elements.push_back(e);
    }
    for (const auto& c : p.covers)
        if (!removed.count(c.dst) && !removed.count(c.src)) out.covers.push_back(c);
    return out;
}

} // namespace geoplan
