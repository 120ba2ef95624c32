#include "geoplan/cli/commands.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using geoplan::cli::Json;

namespace {

struct Result {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = geoplan::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("geoplan_test_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

} // namespace

TEST(Cli, GeodesicsExamples) {
    auto r = run({"geodesics", "torus:2", "0,0", "1/2,1/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["count"], 4);

    r = run({"geodesics", "cube", "corner:p", "corner:q"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["count"], 6);
    for (const auto& g : r.json()["geodesics"]) EXPECT_EQ(g["squared_length"], "5");

    r = run({"geodesics", "klein", "1/4,1/4", "1/4,1/4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["count"], 1);
    EXPECT_EQ(r.json()["geodesics"][0]["length"], "0");
}

TEST(Cli, CutLocusExamples) {
    auto r = run({"cutlocus", "klein", "1/2,1/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["shape"], "wedge");
    EXPECT_EQ(r.json()["vertices"].size(), 1u);
    EXPECT_EQ(r.json()["vertices"][0]["multiplicity"], 4);

    r = run({"cutlocus", "klein", "1/2,3/10"});
    EXPECT_EQ(r.json()["shape"], "theta");
    for (const auto& v : r.json()["vertices"]) EXPECT_EQ(v["multiplicity"], 3);

    r = run({"cutlocus", "torus:2", "0,0"});
    EXPECT_EQ(r.json()["shape"], "wedge");
    EXPECT_EQ(r.json()["vertices"][0]["point"], Json::array({"1/2", "1/2"}));
}

TEST(Cli, PlanExamples) {
    EXPECT_EQ(run({"plan", "torus:2", "0,0", "1/2,1/5"}).json()["domain"], 1);
    EXPECT_EQ(run({"plan", "klein", "1/2,1/2", "0,0"}).json()["domain"], 3);
    EXPECT_EQ(run({"plan", "torus:2", "0,0", "1/10,1/10"}).json()["domain"], 0);
}

TEST(Cli, Bounds) {
    EXPECT_EQ(run({"bound", "--builtin", "circle"}).json()["lower_bound"], 1);
    EXPECT_EQ(run({"bound", "--builtin", "cube_corner"}).json()["lower_bound"], 3);

    const std::string bad = temp_path("bad.json");
    std::ofstream(bad) << "{\"elements\": [";
    auto r = run({"bound", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);

    // Round trip through a document, then break it.
    const std::string doc = temp_path("circle.json");
    std::ofstream(doc) << run({"poset", "circle"}).out;
    r = run({"bound", doc});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["lower_bound"], 1);
    EXPECT_EQ(r.json()["equality"], 1);

    Json j = Json::parse(slurp(doc));
    j["covers"][0]["map"]["sigma_r"] = "nowhere";
    std::ofstream(doc) << j.dump();
    r = run({"bound", doc});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.json()["valid"].get<bool>());
    std::remove(bad.c_str());
    std::remove(doc.c_str());
}

TEST(Cli, UsageAndParseErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"geodesics", "torus:2", "0,0"}).code, 2);
    EXPECT_EQ(run({"geodesics", "torus:2", "0,0", "1/2"}).code, 2);
    EXPECT_EQ(run({"geodesics", "torus:2", "0,0", "x/y"}).code, 2);
    EXPECT_EQ(run({"geodesics", "sphere", "0,0", "0,0"}).code, 2);
    EXPECT_EQ(run({"geodesics", "cube", "zz:0,0", "corner:q"}).code, 2);
    EXPECT_EQ(run({"geodesics", "torus:2", "0,0", "1/2,1/2", "--resolution", "1", "--svg", temp_path("x.svg")}).code, 2);
    EXPECT_EQ(run({"verify", "nothing"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, NegativeCoordinatesAreValues) {
    auto r = run({"geodesics", "klein", "-1/4,0", "1/4,1/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["count"], 4);
    EXPECT_EQ(r.json()["x"], Json::array({"3/4", "0"}));
}

TEST(Cli, ArtifactsAreByteStable) {
    const std::string a = temp_path("a.svg"), b = temp_path("b.svg"), c = temp_path("c.csv");
    ASSERT_EQ(run({"geodesics", "cube", "corner:p", "corner:q", "--svg", a, "--csv", c}).code, 0);
    ASSERT_EQ(run({"geodesics", "cube", "corner:p", "corner:q", "--svg", b}).code, 0);
    const std::string svg = slurp(a);
    EXPECT_EQ(svg, slurp(b));
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("D1"), std::string::npos);
    EXPECT_EQ(slurp(c).rfind("geodesic,t,point\n", 0), 0u);
    ASSERT_EQ(run({"cutlocus", "klein", "1/2,3/10", "--svg", a}).code, 0);
    EXPECT_NE(slurp(a).find("<polygon"), std::string::npos);
    for (const auto& p : {a, b, c}) std::remove(p.c_str());
}

TEST(Cli, SampleCsv) {
    const auto r = run({"sample", "torus:2", "0,0", "--grid", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x,y,stratum,count,min_sq_length");
    int rows = 0, corner = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line == "0 0,1/2 1/2,3,4,1/2") ++corner;
    }
    EXPECT_EQ(rows, 16);
    EXPECT_EQ(corner, 1);
}

TEST(Cli, VerifyIsDeterministic) {
    const auto a = run({"verify", "poset", "--seed", "7", "--trials", "20"});
    const auto b = run({"verify", "poset", "--seed", "7", "--trials", "20"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("FAIL"), std::string::npos);
}
