#include "geoplan/verify/properties.hpp"

#include "geoplan/errors.hpp"
#include "geoplan/strat.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace geoplan::verify {

namespace {

// Three levels with two routes from the bottom to the top. Valid as built.
StratPoset diamond() {
    StratPoset p;
    p.name = "diamond";
    p.elements = {
        {"a", 1, {"s"}},
        {"b1", 2, {"s", "t"}},
        {"b2", 2, {"s", "t"}},
        {"c", 3, {"s", "t", "u"}},
    };
    p.covers = {
        {"a", "b1", {{"s", "s"}}},
        {"a", "b2", {{"s", "s"}}},
        {"b1", "c", {{"s", "s"}, {"t", "t"}}},
        {"b2", "c", {{"s", "s"}, {"t", "u"}}},
    };
    return p;
}

bool rejected(const StratPoset& p) {
    if (validate_poset(p).ok) return false;
    try {
        lower_bound(p);
    } catch (const ValidationError&) {
        return true;
    }
    return false;
}

} // namespace

PropertyResult poset_builtin_bounds() {
    PropertyResult r{"builtin posets give their lower bounds"};
    const std::map<std::string, int> want{
        {"circle", 1},         {"torus_corner:1", 1}, {"torus_corner:2", 2}, {"torus_corner:3", 3},
        {"torus_corner:4", 4}, {"klein_S4", 3},       {"cube_corner", 3},
    };
    for (const auto& name : builtin_poset_names()) {
        ++r.checked;
        const StratPoset p = builtin_poset(name);
        const auto v = validate_poset(p);
        if (!v.ok) {
            r.fail(name + " invalid: " + v.problems.front());
            continue;
        }
        const auto b = lower_bound(p);
        if (!want.count(name) || !b.lower_bound || *b.lower_bound != want.at(name))
            r.fail(name + " bound " + (b.lower_bound ? std::to_string(*b.lower_bound) : "none"));
        // The equality only follows when every hypothesis is asserted.
        const auto eq = upper_bound_if_trivial(p, p.flags);
        if (p.flags.all() != eq.has_value()) r.fail(name + " equality availability does not follow the flags");
        if (upper_bound_if_trivial(p, PosetFlags{})) r.fail(name + " equality without hypotheses");
    }
    return r;
}

PropertyResult poset_rejects_violations() {
    PropertyResult r{"validation rejects structural violations"};
    ++r.checked;
    if (!validate_poset(diamond()).ok) r.fail("the base poset is rejected");

    const std::vector<std::pair<std::string, std::function<void(StratPoset&)>>> breaks{
        {"non-adjacent cover", [](StratPoset& p) { p.covers.push_back({"a", "c", {{"s", "s"}}}); }},
        {"inconsistent composition", [](StratPoset& p) { p.covers[1].map = {{"s", "t"}}; }},
        {"non-injective map", [](StratPoset& p) { p.covers[3].map = {{"s", "s"}, {"t", "s"}}; }},
        {"partial map", [](StratPoset& p) { p.covers[2].map.erase("t"); }},
        {"unknown sheet", [](StratPoset& p) { p.covers[0].map = {{"s", "zz"}}; }},
        {"unknown element", [](StratPoset& p) { p.covers.push_back({"a", "nowhere", {}}); }},
        {"empty level", [](StratPoset& p) {
             for (auto& e : p.elements)
                 if (e.level == 3) e.level = 4;
             p.covers.pop_back();
             p.covers.pop_back();
         }},
        {"duplicate id", [](StratPoset& p) { p.elements.push_back({"b1", 2, {"s"}}); }},
        {"duplicate cover", [](StratPoset& p) { p.covers.push_back(p.covers.front()); }},
    };
    for (const auto& [name, mutate] : breaks) {
        ++r.checked;
        StratPoset p = diamond();
        mutate(p);
        if (!rejected(p)) r.fail(name + " accepted");
    }
    return r;
}

PropertyResult poset_drop_level_monotone() {
    PropertyResult r{"dropping the top level never raises the bound"};
    for (const auto& name : builtin_poset_names()) {
        const StratPoset p = builtin_poset(name);
        if (p.levels() < 2) continue;
        ++r.checked;
        const StratPoset q = drop_top_level(p);
        if (q.levels() != p.levels() - 1 || !validate_poset(q).ok) {
            r.fail(name + " truncation malformed");
            continue;
        }
        const auto a = lower_bound(p), b = lower_bound(q);
        if (b.lower_bound && a.lower_bound && *b.lower_bound > *a.lower_bound) r.fail(name + " bound grows");
        if (b.lower_bound && *b.lower_bound != q.levels() - 1) r.fail(name + " truncated bound wrong");
    }
    return r;
}

PropertyResult poset_relabel_invariance(Rng& rng, std::size_t trials) {
    PropertyResult r{"bounds are invariant under renaming"};
    const auto names = builtin_poset_names();
    for (std::size_t t = 0; t < trials; ++t) {
        const StratPoset p = builtin_poset(names[t % names.size()]);
        const std::string salt = std::to_string(rng.below(1000000));
        auto id = [&](const std::string& s) { return "e" + salt + "_" + s; };
        auto sheet = [&](const std::string& s) { return "q" + salt + "_" + s; };
        StratPoset q;
        q.name = p.name;
        q.flags = p.flags;
        for (const auto& e : p.elements) {
            PosetElement f{id(e.id), e.level, {}};
            for (const auto& s : e.sheets) f.sheets.push_back(sheet(s));
            std::reverse(f.sheets.begin(), f.sheets.end());
            q.elements.push_back(std::move(f));
        }
        for (std::size_t i = q.elements.size(); i > 1; --i) std::swap(q.elements[i - 1], q.elements[rng.below(i)]);
        for (const auto& c : p.covers) {
            PosetCover d{id(c.src), id(c.dst), {}};
            for (const auto& [k, v] : c.map) d.map[sheet(k)] = sheet(v);
            q.covers.push_back(std::move(d));
        }
        for (std::size_t i = q.covers.size(); i > 1; --i) std::swap(q.covers[i - 1], q.covers[rng.below(i)]);
        ++r.checked;
        const auto a = lower_bound(p), b = lower_bound(q);
        if (a.lower_bound != b.lower_bound || a.inconsistent_elements.size() != b.inconsistent_elements.size())
            r.fail(p.name + " changes under renaming");
    }
    return r;
}

PropertyResult poset_bottom_consistent() {
    PropertyResult r{"bottom elements are never inconsistent"};
    for (const auto& name : builtin_poset_names()) {
        const StratPoset p = builtin_poset(name);
        for (const auto& e : p.elements) {
            if (e.level != 1) continue;
            ++r.checked;
            if (inconsistent_at(p, e.id)) r.fail(name + ":" + e.id + " marked inconsistent");
        }
    }
    return r;
}

} // namespace geoplan::verify
