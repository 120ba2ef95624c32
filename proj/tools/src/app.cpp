#include "geoplan/cli/commands.hpp"

#include "geoplan/errors.hpp"
#include "geoplan/verify/properties.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace geoplan::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw ParseError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), {});
}

struct Outputs {
    std::string json, svg, csv;
    int resolution = 2;
};

void add_outputs(CLI::App* cmd, Outputs& o, bool svg, bool csv) {
    cmd->add_option("--json", o.json, "Also write the JSON result to this file");
    if (svg) cmd->add_option("--svg", o.svg, "Write an SVG figure");
    if (csv) cmd->add_option("--csv", o.csv, "Write sampled points as CSV");
    if (svg || csv)
        cmd->add_option("--resolution", o.resolution, "Samples per edge when discretizing curves")
            ->check(CLI::Range(2, 100000));
}

void emit_json(const Json& j, const Outputs& o, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (!o.json.empty()) write_file(o.json, text);
}

std::string verify_text(const std::vector<verify::SuiteReport>& reports, std::uint64_t seed, std::size_t trials) {
    std::ostringstream os;
    os << "seed " << seed << ", trials " << trials << "\n";
    for (const auto& s : reports)
        for (const auto& p : s.properties) {
            os << (p.ok() ? "PASS " : "FAIL ") << s.suite << ": " << p.name << " (" << p.checked << " checked, " << p.failed
               << " failed)";
            if (!p.first_failure.empty()) os << "\n     first failure: " << p.first_failure;
            os << "\n";
        }
    return os.str();
}

Json verify_json(const std::vector<verify::SuiteReport>& reports, std::uint64_t seed, std::size_t trials) {
    Json j;
    j["seed"] = seed;
    j["trials"] = trials;
    Json suites = Json::array();
    bool ok = true;
    for (const auto& s : reports) {
        Json props = Json::array();
        for (const auto& p : s.properties)
            props.push_back(Json{{"name", p.name}, {"ok", p.ok()}, {"checked", p.checked}, {"failed", p.failed},
                                 {"first_failure", p.first_failure}});
        suites.push_back(Json{{"suite", s.suite}, {"ok", s.ok()}, {"properties", props}});
        ok = ok && s.ok();
    }
    j["ok"] = ok;
    j["suites"] = suites;
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geodesic motion planning on flat tori, the flat Klein bottle and the cube surface", "geoplan"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "geoplan 0.1.0");

    std::string space, x, y;
    Outputs o;

    auto* geo = app.add_subcommand("geodesics", "All geodesics between two points");
    geo->add_option("space", space, "torus:n, klein or cube")->required();
    geo->add_option("x", x, "Start point")->required();
    geo->add_option("y", y, "End point")->required();
    add_outputs(geo, o, true, true);

    auto* cut = app.add_subcommand("cutlocus", "Cut locus of a point");
    cut->add_option("space", space, "torus:n or klein")->required();
    cut->add_option("x", x, "Basepoint")->required();
    add_outputs(cut, o, true, false);

    auto* plan = app.add_subcommand("plan", "Domain and geodesic chosen by the motion planner");
    plan->add_option("space", space, "torus:n or klein")->required();
    plan->add_option("x", x, "Start point")->required();
    plan->add_option("y", y, "End point")->required();
    add_outputs(plan, o, false, false);

    std::string doc_path, builtin;
    auto* bound = app.add_subcommand("bound", "Validate a poset document and evaluate its lower bound");
    bound->add_option("document", doc_path, "Poset document (JSON)");
    bound->add_option("--builtin", builtin, "Use a builtin poset instead of a file");
    add_outputs(bound, o, false, false);

    bool list = false;
    auto* poset = app.add_subcommand("poset", "Print a builtin poset as a document");
    poset->add_option("name", builtin, "Builtin name");
    poset->add_flag("--list", list, "List the builtin names");
    add_outputs(poset, o, false, false);

    std::string suite = "all";
    std::uint64_t seed = verify::default_seed();
    std::size_t trials = 1000;
    auto* ver = app.add_subcommand("verify", "Run the randomized property suites");
    ver->add_option("suite", suite, "core, torus, klein, cube, poset or all")
        ->check(CLI::IsMember({"core", "torus", "klein", "cube", "poset", "all"}));
    ver->add_option("--seed", seed, "Random seed (default: GEOPLAN_SEED or a fixed value)");
    ver->add_option("--trials", trials, "Random trials per property")->check(CLI::PositiveNumber);
    add_outputs(ver, o, false, false);

    long grid = 20;
    auto* sample = app.add_subcommand("sample", "Strata and distances from a point to a grid of targets");
    sample->add_option("space", space, "torus:n, klein or cube")->required();
    sample->add_option("x", x, "Basepoint")->required();
    sample->add_option("--grid", grid, "Grid points per coordinate")->check(CLI::PositiveNumber);
    sample->add_option("--csv", o.csv, "Write the CSV to this file instead of stdout");

    // Coordinates such as -1/4,0 are values, not options.
    for (auto* cmd : {geo, cut, plan, sample}) cmd->positionals_at_end(false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*geo) {
            const auto set = compute_geodesics(parse_space(space), x, y);
            if (!o.svg.empty()) write_file(o.svg, geodesics_svg(set, o.resolution));
            if (!o.csv.empty()) write_file(o.csv, geodesics_csv(set, o.resolution));
            emit_json(geodesics_json(set), o, out);
        } else if (*cut) {
            const Space s = parse_space(space);
            const Json j = cutlocus_json(s, x);
            if (!o.svg.empty()) write_file(o.svg, cutlocus_svg(s, x));
            emit_json(j, o, out);
        } else if (*plan) {
            emit_json(plan_json(parse_space(space), x, y), o, out);
        } else if (*bound) {
            if (doc_path.empty() == builtin.empty()) throw ParseError("give either a document path or --builtin");
            StratPoset p;
            if (!builtin.empty()) {
                p = builtin_poset(builtin);
            } else {
                Json doc;
                try {
                    doc = Json::parse(read_file(doc_path));
                } catch (const nlohmann::json::parse_error& e) {
                    throw ParseError("malformed JSON in '" + doc_path + "': " + e.what());
                }
                p = poset_from_json(doc);
            }
            const Json j = bound_json(p);
            emit_json(j, o, out);
            if (!j["valid"].get<bool>()) {
                err << "error: invalid poset\n";
                return 1;
            }
        } else if (*poset) {
            if (list) {
                Json names = builtin_poset_names();
                emit_json(names, o, out);
            } else {
                if (builtin.empty()) throw ParseError("poset needs a builtin name or --list");
                emit_json(poset_to_json(builtin_poset(builtin)), o, out);
            }
        } else if (*ver) {
            const auto reports = verify::run_suite(suite, seed, trials);
            out << verify_text(reports, seed, trials);
            const Json j = verify_json(reports, seed, trials);
            if (!o.json.empty()) write_file(o.json, j.dump(2) + "\n");
            return j["ok"].get<bool>() ? 0 : 1;
        } else if (*sample) {
            const std::string csv = sample_csv(parse_space(space), x, grid);
            if (o.csv.empty()) out << csv;
            else write_file(o.csv, csv);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace geoplan::cli
