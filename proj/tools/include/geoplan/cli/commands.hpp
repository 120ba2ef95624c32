#pragma once

#include "geoplan/cube.hpp"
#include "geoplan/klein.hpp"
#include "geoplan/strat.hpp"
#include "geoplan/torus.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace geoplan::cli {

using Json = nlohmann::ordered_json;

struct Space {
    enum class Kind { torus, klein, cube } kind;
    std::size_t dim = 2; // torus dimension
    std::string name;
};

// "torus:n", "klein" or "cube".
Space parse_space(std::string_view text);

// Torus and Klein points are comma separated rationals. Cube points are
// "corner:p", "corner:q", "FACE:u,v" (FACE one of zm zp xp xm yp ym) or a
// surface position "X,Y,Z".
TorusPoint parse_torus_point(std::string_view text, std::size_t n);
KleinPoint parse_klein_point(std::string_view text);
CubePoint parse_cube_point(std::string_view text);

// Geodesics of any space reduced to what the renderers need.
struct GeodesicView {
    Json data;
    Polyline path;
};

struct GeodesicSet {
    Space space;
    Json x, y;
    int stratum = 0;
    std::vector<GeodesicView> geodesics;
};

GeodesicSet compute_geodesics(const Space& space, std::string_view x, std::string_view y);
Json geodesics_json(const GeodesicSet& set);
std::string geodesics_svg(const GeodesicSet& set, int resolution);
std::string geodesics_csv(const GeodesicSet& set, int resolution);

Json cutlocus_json(const Space& space, std::string_view x);
std::string cutlocus_svg(const Space& space, std::string_view x);

Json plan_json(const Space& space, std::string_view x, std::string_view y);

// CSV columns x, y, stratum, count, min_sq_length over a grid of targets.
std::string sample_csv(const Space& space, std::string_view x, long grid);

// PosetDocument <-> StratPoset. Throws ParseError on schema violations.
StratPoset poset_from_json(const Json& doc);
Json poset_to_json(const StratPoset& p);
Json bound_json(const StratPoset& p);

Json rational_json(const Rational& q);
Json vec_json(const Vec& v);
Json polyline_json(const Polyline& p);

// Entry point; returns the process exit code (0 ok, 1 verification failure,
// 2 usage or parse error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace geoplan::cli
