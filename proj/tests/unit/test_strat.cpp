#include "geoplan/errors.hpp"
#include "geoplan/strat.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace geoplan;

namespace {

bool mentions(const ValidationReport& r, const std::string& what) {
    return std::any_of(r.problems.begin(), r.problems.end(),
                       [&](const std::string& p) { return p.find(what) != std::string::npos; });
}

StratPoset three_levels() {
    StratPoset p;
    p.elements = {{"a", 1, {"s"}}, {"b1", 2, {"s", "t"}}, {"b2", 2, {"s", "t"}}, {"c", 3, {"s", "t"}}};
    p.covers = {
        {"a", "b1", {{"s", "s"}}},
        {"a", "b2", {{"s", "s"}}},
        {"b1", "c", {{"s", "s"}, {"t", "t"}}},
        {"b2", "c", {{"s", "s"}, {"t", "t"}}},
    };
    return p;
}

} // namespace

TEST(Validate, CirclePasses) {
    EXPECT_TRUE(validate_poset(circle_poset()).ok);
    EXPECT_TRUE(validate_poset(three_levels()).ok);
}

TEST(Validate, NonAdjacentCover) {
    StratPoset p = three_levels();
    p.covers.push_back({"a", "c", {{"s", "s"}}});
    const auto r = validate_poset(p);
    EXPECT_FALSE(r.ok);
    EXPECT_TRUE(mentions(r, "non-adjacent cover"));
}

TEST(Validate, ConflictingChains) {
    StratPoset p = three_levels();
    p.covers[3].map = {{"s", "t"}, {"t", "s"}};
    const auto r = validate_poset(p);
    EXPECT_FALSE(r.ok);
    EXPECT_TRUE(mentions(r, "composition"));
    EXPECT_THROW(lower_bound(p), ValidationError);
}

TEST(Validate, MapDefects) {
    StratPoset p = three_levels();
    p.covers[2].map = {{"s", "s"}, {"t", "s"}};
    EXPECT_TRUE(mentions(validate_poset(p), "not injective"));
    p = three_levels();
    p.covers[2].map.erase("t");
    EXPECT_TRUE(mentions(validate_poset(p), "does not map"));
    p = three_levels();
    p.elements.push_back({"a", 1, {"s"}});
    EXPECT_TRUE(mentions(validate_poset(p), "duplicate element"));
}

TEST(Inconsistency, Examples) {
    const auto c = circle_poset();
    EXPECT_TRUE(inconsistent_at(c, "P2"));
    EXPECT_FALSE(inconsistent_at(c, "P1r"));
    StratPoset one = three_levels();
    EXPECT_FALSE(inconsistent_at(one, "b1"));
    EXPECT_THROW(inconsistent_at(one, "zz"), ValidationError);

    // Corner of the square: four edge images with empty intersection.
    StratPoset corner;
    corner.elements = {{"e1", 1, {"UR", "DR"}}, {"e2", 1, {"UL", "DL"}}, {"e3", 1, {"UR", "UL"}}, {"e4", 1, {"DR", "DL"}},
                       {"v", 2, {"UR", "UL", "DR", "DL"}}};
    for (const auto& e : corner.elements)
        if (e.level == 1) {
            PosetCover c{e.id, "v", {}};
            for (const auto& s : e.sheets) c.map[s] = s;
            corner.covers.push_back(c);
        }
    EXPECT_TRUE(inconsistent_at(corner, "v"));
}

TEST(LowerBound, Examples) {
    EXPECT_EQ(lower_bound(circle_poset()).lower_bound, 1);
    StratPoset single;
    single.elements = {{"only", 1, {"s"}}};
    EXPECT_EQ(lower_bound(single).lower_bound, 0);
    // A consistent upper element leaves the bound inapplicable.
    const auto r = lower_bound(three_levels());
    EXPECT_FALSE(r.applicable());
    EXPECT_EQ(r.consistent_elements.size(), 3u);
}

TEST(UpperBound, NeedsEveryFlag) {
    EXPECT_EQ(upper_bound_if_trivial(circle_poset(), {true, true, true}), 1);
    EXPECT_FALSE(upper_bound_if_trivial(circle_poset(), {true, false, true}).has_value());
    EXPECT_EQ(upper_bound_if_trivial(builtin_poset("torus_corner:2"), {true, true, true}), 2);
}

TEST(Builtins, NamesAndLevels) {
    EXPECT_EQ(builtin_poset("circle").levels(), 2);
    EXPECT_EQ(builtin_poset("torus_corner(2)").levels(), 3);
    EXPECT_EQ(builtin_poset("torus_corner:3").levels(), 4);
    EXPECT_EQ(lower_bound(builtin_poset("torus_corner:3")).lower_bound, 3);
    EXPECT_THROW(builtin_poset("torus_corner:5"), DomainError);
    EXPECT_THROW(builtin_poset("sphere"), DomainError);
}

TEST(Builtins, DropTopLevel) {
    const auto p = drop_top_level(builtin_poset("torus_corner:3"));
    EXPECT_EQ(p.levels(), 3);
    EXPECT_TRUE(validate_poset(p).ok);
    EXPECT_EQ(lower_bound(p).lower_bound, 2);
}
