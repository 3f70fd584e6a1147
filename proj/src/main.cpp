// Command-line front end: gen, solve, verify, bench, gauge, render.
//
// Exit codes, shared by every subcommand:
//   0  success
//   1  bad usage, malformed input files, or violated input invariants
//   2  local search exceeded its iteration cap
//   3  infeasible instance (even the full object set fails)
//   4  a verification report failed (the report is still written)
//   5  the exact oracle exceeded its budget

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "geoset/baselines.hpp"
#include "geoset/bench.hpp"
#include "geoset/decomposition.hpp"
#include "geoset/errors.hpp"
#include "geoset/gauge.hpp"
#include "geoset/instances.hpp"
#include "geoset/json_io.hpp"
#include "geoset/render.hpp"
#include "geoset/solver.hpp"

namespace {

using namespace geoset;

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

struct GlobalOpts {
    Seed seed = 0;
    std::string in_path;
    std::string out_path;
    LogLevel log = LogLevel::Info;
};

void log_info(const GlobalOpts& g, const std::string& msg) {
    if (g.log >= LogLevel::Info) std::cerr << msg << '\n';
}

void log_debug(const GlobalOpts& g, const std::string& msg) {
    if (g.log >= LogLevel::Debug) std::cerr << msg << '\n';
}

// Thrown after a verification report concludes "fail"; mapped to exit code 4.
struct ReportFailed {};

const std::string& require(const std::string& value, const char* flag, const char* sub) {
    if (value.empty()) {
        throw InvalidParams(std::string(flag) + " is required for '" + sub + "'");
    }
    return value;
}

// "x,y" with exact rational components, e.g. "3/2,-1".
Point parse_point_arg(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw InvalidParams("point must be 'x,y' with rational coordinates: '" + text + "'");
    }
    return Point{rational_from_string(text.substr(0, comma)),
                 rational_from_string(text.substr(comma + 1))};
}

// {"polygon": [[x, y], ...], "center": [x, y]} with rational strings.
BaseShape load_base_shape(const std::string& path) {
    const Json j = read_json_file(path);
    if (!j.is_object() || !j.contains("polygon") || !j.contains("center")) {
        throw ParseError("shape file requires 'polygon' and 'center': " + path);
    }
    return make_base_shape(polygon_from_json(j["polygon"]), point_from_json(j["center"]));
}

// A polygon file is either a bare vertex array or an object with "polygon".
ConvexPolygon load_polygon(const std::string& path) {
    const Json j = read_json_file(path);
    if (j.is_array()) return polygon_from_json(j);
    if (j.is_object() && j.contains("polygon")) return polygon_from_json(j["polygon"]);
    throw ParseError("polygon file must be a vertex array or contain 'polygon': " + path);
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
    if (!out) throw Error("write failed: " + path);
}

void emit_json(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        write_json_file(j, out_path);
    }
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenOpts {
    std::string kind = "domination";
    std::size_t n = 8;
    std::size_t points = 16;
    std::string shape = "square";
    std::string object_kind = "square-homothets";
    int k = 6;
    std::string shape_file;
    std::string scale_min = "1/2";
    std::string scale_max = "2";
    std::string extent = "10";
    unsigned center_denom = 64;
    unsigned scale_denom = 16;
    std::size_t retry_budget = 1000;
};

void run_gen(const GlobalOpts& g, const GenOpts& o) {
    const Instance instance = [&]() -> Instance {
        if (o.kind == "domination") {
            DominationGenParams params;
            params.n = o.n;
            params.kind = parse_shape_kind(o.shape);
            params.k = o.k;
            if (params.kind == ShapeKind::Custom) {
                params.custom = load_base_shape(require(o.shape_file, "--shape-file", "gen"));
            }
            params.scale_min = rational_from_string(o.scale_min);
            params.scale_max = rational_from_string(o.scale_max);
            params.extent = rational_from_string(o.extent);
            params.center_denom = o.center_denom;
            params.scale_denom = o.scale_denom;
            return gen_domination(params, g.seed);
        }
        if (o.kind == "cover") {
            CoverGenParams params;
            params.n_objects = o.n;
            params.n_points = o.points;
            params.kind = parse_cover_kind(o.object_kind);
            params.k = o.k;
            params.scale_min = rational_from_string(o.scale_min);
            params.scale_max = rational_from_string(o.scale_max);
            params.extent = rational_from_string(o.extent);
            params.center_denom = o.center_denom;
            params.scale_denom = o.scale_denom;
            params.retry_budget = o.retry_budget;
            GenStats stats;
            CoverInstance cover = gen_cover(params, g.seed, &stats);
            log_debug(g, "gen: object draws " + std::to_string(stats.object_draws) +
                             ", rejected crossings " + std::to_string(stats.rejected_crossings) +
                             ", rejected overlap " + std::to_string(stats.rejected_overlap) +
                             ", point draws " + std::to_string(stats.point_draws));
            return cover;
        }
        throw InvalidParams("unknown instance kind: " + o.kind);
    }();

    emit_json(instance_to_json(instance), g.out_path);
    log_info(g, "gen: " + o.kind + " instance, " +
                    std::to_string(instance_polygons(instance).size()) + " objects, hash " +
                    instance_hash(instance));
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveOpts {
    std::string algo = "local-search";
    std::optional<std::size_t> b;
    std::string epsilon;
    std::string alpha = "1";
    std::string init = "greedy";
    std::string trace_path;
    bool timing = false;
    std::size_t max_n = OracleBudget{}.max_n;
    std::size_t max_nodes = OracleBudget{}.max_nodes;
    std::optional<double> time_limit_ms;
};

void run_solve(const GlobalOpts& g, const SolveOpts& o) {
    const Instance instance = load_instance(require(g.in_path, "--in", "solve"));
    const std::string hash = instance_hash(instance);

    Solution solution;
    if (o.algo == "local-search") {
        SolverConfig config;
        config.b = o.b;
        if (!o.epsilon.empty()) config.epsilon = rational_from_string(o.epsilon);
        config.alpha = rational_from_string(o.alpha);
        if (o.init == "greedy") {
            config.init = InitKind::Greedy;
        } else if (o.init == "full") {
            config.init = InitKind::FullSet;
        } else {
            throw InvalidParams("--init must be 'greedy' or 'full'");
        }
        config.timing = o.timing;

        const ProblemInstance problem = make_problem(instance);
        auto [found, trace] = local_search(problem, config);
        solution = std::move(found);
        if (!o.trace_path.empty()) save_trace(trace, hash, o.trace_path);
        log_debug(g, "solve: " + std::to_string(trace.entries.size()) + " swaps over " +
                         std::to_string(trace.rounds) + " round(s)");
    } else if (o.algo == "greedy" || o.algo == "exact") {
        if (o.b || !o.epsilon.empty() || !o.trace_path.empty()) {
            throw InvalidParams("--b, --epsilon, and --trace apply only to local-search");
        }
        const auto start = std::chrono::steady_clock::now();
        if (o.algo == "greedy") {
            if (const auto* dom = std::get_if<DominationInstance>(&instance)) {
                solution.indices = greedy_dominating_set(*dom);
            } else {
                solution.indices = greedy_set_cover(std::get<CoverInstance>(instance));
            }
            solution.meta.solver = "greedy";
        } else {
            OracleBudget budget;
            budget.max_n = o.max_n;
            budget.max_nodes = o.max_nodes;
            budget.time_limit_ms = o.time_limit_ms;
            OracleResult result;
            if (const auto* dom = std::get_if<DominationInstance>(&instance)) {
                result = exact_min_dominating_set(*dom, budget);
            } else {
                result = exact_min_set_cover(std::get<CoverInstance>(instance), budget);
            }
            solution.indices = result.indices;
            solution.meta.solver = "exact";
            solution.meta.parameters.emplace_back("nodes", std::to_string(result.nodes));
        }
        if (o.timing) {
            const auto stop = std::chrono::steady_clock::now();
            solution.meta.wall_time_ms =
                std::chrono::duration<double, std::milli>(stop - start).count();
        }
    } else {
        throw InvalidParams("--algo must be local-search, greedy, or exact");
    }

    emit_json(solution_to_json(solution, hash), g.out_path);
    log_info(g, "solve: " + o.algo + " found " + std::to_string(solution.indices.size()) +
                    " object(s) on instance " + hash);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOpts {
    std::string solution_path;
    bool decomposition = false;
    bool pseudodisks = false;
};

Json verify_solution_report(const Instance& instance, const std::string& solution_path) {
    std::string recorded_hash;
    const Solution solution = load_solution(solution_path, &recorded_hash);
    const std::string hash = instance_hash(instance);

    Json report = Json::object();
    report["version"] = 1;
    report["mode"] = "solution";
    report["instance_hash"] = hash;
    report["recorded_hash"] = recorded_hash;
    const bool hash_match = recorded_hash == hash;
    report["hash_match"] = hash_match;
    report["size"] = solution.indices.size();

    const ProblemInstance problem = make_problem(instance);
    bool indices_valid = true;
    bool feasible = false;
    try {
        normalize_indices(solution.indices, problem.system.num_objects);
        feasible = problem.system.feasible(solution.indices);
    } catch (const InvariantViolation&) {
        indices_valid = false;
    }
    report["indices_valid"] = indices_valid;
    report["feasible"] = feasible;
    report["pass"] = hash_match && indices_valid && feasible;
    return report;
}

Json verify_decomposition_report(const Instance& instance) {
    const std::vector<ConvexPolygon> family = instance_polygons(instance);
    Json report = Json::object();
    report["version"] = 1;
    report["mode"] = "decomposition";
    try {
        const DecompositionResult result = disjoint_union_decomposition(family);
        const DecompositionReport check = verify_decomposition(family, result.tilde);
        report["pieces"] = result.tilde.size();
        report["chords"] = result.chords.size();
        report["tangential_skips"] = result.tangential_skips;
        report["sizes_match"] = check.sizes_match;
        report["subsets"] = check.subsets;
        report["union_area_preserved"] = check.union_area_preserved;
        report["pairwise_disjoint"] = check.pairwise_disjoint;
        report["cover_free_contained"] = check.cover_free_contained;
        report["failures"] = check.failures;
        report["pass"] = check.pass();
    } catch (const NotCoverFree& e) {
        report["error"] = std::string("not cover-free: ") + e.what();
        report["pass"] = false;
    } catch (const NotPseudodisks& e) {
        report["error"] = std::string("not pseudodisks: ") + e.what();
        report["pass"] = false;
    } catch (const DegenerateOverlap& e) {
        report["error"] = std::string("degenerate overlap: ") + e.what();
        report["pass"] = false;
    } catch (const DegenerateChord& e) {
        report["error"] = std::string("degenerate chord: ") + e.what();
        report["pass"] = false;
    }
    return report;
}

Json verify_pseudodisks_report(const Instance& instance) {
    const std::vector<ConvexPolygon> family = instance_polygons(instance);
    const std::vector<PseudodiskOffender> offenders = verify_pseudodisk_family(family);
    Json report = Json::object();
    report["version"] = 1;
    report["mode"] = "pseudodisks";
    report["objects"] = family.size();
    Json items = Json::array();
    for (const PseudodiskOffender& off : offenders) {
        Json item = Json::object();
        item["i"] = off.i;
        item["j"] = off.j;
        item["crossings"] = off.crossings ? Json(*off.crossings) : Json(nullptr);
        items.push_back(std::move(item));
    }
    report["offenders"] = std::move(items);
    report["pass"] = offenders.empty();
    return report;
}

void run_verify(const GlobalOpts& g, const VerifyOpts& o) {
    const int modes = (o.solution_path.empty() ? 0 : 1) + (o.decomposition ? 1 : 0) +
                      (o.pseudodisks ? 1 : 0);
    if (modes != 1) {
        throw InvalidParams("choose exactly one of --solution, --decomposition, --pseudodisks");
    }
    const Instance instance = load_instance(require(g.in_path, "--in", "verify"));

    Json report;
    if (!o.solution_path.empty()) {
        report = verify_solution_report(instance, o.solution_path);
    } else if (o.decomposition) {
        report = verify_decomposition_report(instance);
    } else {
        report = verify_pseudodisks_report(instance);
    }

    if (!g.out_path.empty()) write_json_file(report, g.out_path);
    const bool pass = report["pass"].get<bool>();
    std::cout << (pass ? "PASS" : "FAIL") << " " << report["mode"].get<std::string>() << '\n';
    if (!pass) {
        log_info(g, "verify: report " + report.dump());
        throw ReportFailed{};
    }
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchOpts {
    std::string spec_path;
    std::string text_path;
};

Rational spec_rational(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a rational string");
    return rational_from_string(j.get<std::string>());
}

BenchItem bench_item_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
        throw ParseError("bench item requires a string id");
    }
    const std::string id = j["id"].get<std::string>();
    const Instance instance = [&]() -> Instance {
        if (j.contains("file")) return load_instance(j["file"].get<std::string>());
        if (!j.contains("kind") || !j["kind"].is_string()) {
            throw ParseError("bench item requires 'kind' or 'file': " + id);
        }
        const std::string kind = j["kind"].get<std::string>();
        const Seed seed = j.value("seed", Seed{0});
        const Json params = j.value("params", Json::object());
        if (kind == "domination") {
            DominationGenParams p;
            if (params.contains("n")) p.n = params["n"].get<std::size_t>();
            if (params.contains("shape")) {
                p.kind = parse_shape_kind(params["shape"].get<std::string>());
            }
            if (p.kind == ShapeKind::Custom) {
                throw ParseError("bench items do not support custom base shapes: " + id);
            }
            if (params.contains("k")) p.k = params["k"].get<int>();
            if (params.contains("scale_min")) {
                p.scale_min = spec_rational(params["scale_min"], "scale_min");
            }
            if (params.contains("scale_max")) {
                p.scale_max = spec_rational(params["scale_max"], "scale_max");
            }
            if (params.contains("extent")) p.extent = spec_rational(params["extent"], "extent");
            if (params.contains("center_denom")) {
                p.center_denom = params["center_denom"].get<unsigned>();
            }
            if (params.contains("scale_denom")) {
                p.scale_denom = params["scale_denom"].get<unsigned>();
            }
            return gen_domination(p, seed);
        }
        if (kind == "cover") {
            CoverGenParams p;
            if (params.contains("n_objects")) p.n_objects = params["n_objects"].get<std::size_t>();
            if (params.contains("n_points")) p.n_points = params["n_points"].get<std::size_t>();
            if (params.contains("object_kind")) {
                p.kind = parse_cover_kind(params["object_kind"].get<std::string>());
            }
            if (params.contains("k")) p.k = params["k"].get<int>();
            if (params.contains("scale_min")) {
                p.scale_min = spec_rational(params["scale_min"], "scale_min");
            }
            if (params.contains("scale_max")) {
                p.scale_max = spec_rational(params["scale_max"], "scale_max");
            }
            if (params.contains("extent")) p.extent = spec_rational(params["extent"], "extent");
            if (params.contains("center_denom")) {
                p.center_denom = params["center_denom"].get<unsigned>();
            }
            if (params.contains("scale_denom")) {
                p.scale_denom = params["scale_denom"].get<unsigned>();
            }
            if (params.contains("retry_budget")) {
                p.retry_budget = params["retry_budget"].get<std::size_t>();
            }
            return gen_cover(p, seed);
        }
        throw ParseError("bench item kind must be 'domination' or 'cover': " + id);
    }();
    return BenchItem{id, instance};
}

// Bench spec file:
//   {"version": 1,
//    "items": [{"id": "...", "kind": "domination"|"cover", "seed": u64,
//               "params": {...}} | {"id": "...", "file": "instance.json"}],
//    "algorithms": ["exact", "greedy", "local-search"],
//    "solver"?: {"b"?: k, "epsilon"?: "p/q", "alpha"?: "p/q",
//                "init"?: "greedy"|"full"},
//    "budget"?: {"max_n"?: k, "max_nodes"?: k, "time_limit_ms"?: number},
//    "timing"?: bool}
BenchSpec bench_spec_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("version") || j["version"] != 1) {
            throw ParseError("unsupported bench spec version");
        }
        if (!j.contains("items") || !j["items"].is_array()) {
            throw ParseError("bench spec requires an items array");
        }
        if (!j.contains("algorithms") || !j["algorithms"].is_array()) {
            throw ParseError("bench spec requires an algorithms array");
        }
        BenchSpec spec;
        for (const Json& item : j["items"]) spec.items.push_back(bench_item_from_json(item));
        for (const Json& algo : j["algorithms"]) {
            spec.algorithms.push_back(algo.get<std::string>());
        }
        if (j.contains("solver")) {
            const Json& s = j["solver"];
            if (s.contains("b")) spec.solver.b = s["b"].get<std::size_t>();
            if (s.contains("epsilon")) spec.solver.epsilon = spec_rational(s["epsilon"], "epsilon");
            if (s.contains("alpha")) spec.solver.alpha = spec_rational(s["alpha"], "alpha");
            if (s.contains("init")) {
                const std::string init = s["init"].get<std::string>();
                if (init == "greedy") {
                    spec.solver.init = InitKind::Greedy;
                } else if (init == "full") {
                    spec.solver.init = InitKind::FullSet;
                } else {
                    throw ParseError("solver init must be 'greedy' or 'full'");
                }
            }
        }
        if (j.contains("budget")) {
            const Json& b = j["budget"];
            if (b.contains("max_n")) spec.budget.max_n = b["max_n"].get<std::size_t>();
            if (b.contains("max_nodes")) spec.budget.max_nodes = b["max_nodes"].get<std::size_t>();
            if (b.contains("time_limit_ms")) {
                spec.budget.time_limit_ms = b["time_limit_ms"].get<double>();
            }
        }
        spec.timing = j.value("timing", false);
        spec.solver.timing = spec.timing;
        return spec;
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed bench spec: ") + e.what());
    }
}

void run_bench_cmd(const GlobalOpts& g, const BenchOpts& o) {
    const Json spec_json = read_json_file(require(o.spec_path, "--spec", "bench"));
    const BenchSpec spec = bench_spec_from_json(spec_json);
    const BenchResult result = run_bench(spec);
    const Json table = bench_to_json(result);
    const std::string text = bench_table_text(table);

    if (!g.out_path.empty()) write_json_file(table, g.out_path);
    if (!o.text_path.empty()) {
        write_text_file(text, o.text_path);
    } else if (g.out_path.empty()) {
        std::cout << text;
    }
    log_info(g, "bench: " + std::to_string(result.rows.size()) + " row(s) from " +
                    std::to_string(spec.items.size()) + " instance(s)");
}

// ---------------------------------------------------------------------------
// gauge
// ---------------------------------------------------------------------------

struct GaugeOpts {
    std::string shape_path;
    std::vector<std::string> delta_args;  // two points
    std::vector<std::string> dist_args;   // point, polygon file
};

void run_gauge(const GaugeOpts& o) {
    const BaseShape shape = load_base_shape(require(o.shape_path, "--shape", "gauge"));
    const Gauge g = make_gauge(shape.polygon, shape.center);
    if (!o.delta_args.empty() && !o.dist_args.empty()) {
        throw InvalidParams("choose exactly one of --delta, --dist");
    }
    if (!o.delta_args.empty()) {
        const Point p1 = parse_point_arg(o.delta_args[0]);
        const Point p2 = parse_point_arg(o.delta_args[1]);
        std::cout << to_string(delta(g, p1, p2)) << '\n';
        return;
    }
    if (!o.dist_args.empty()) {
        const Point p = parse_point_arg(o.dist_args[0]);
        const ConvexPolygon target = load_polygon(o.dist_args[1]);
        std::cout << to_string(dist_to_convex(g, p, target)) << '\n';
        return;
    }
    throw InvalidParams("gauge requires --delta or --dist");
}

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

struct RenderOpts {
    std::string solution_path;
    bool decomposition = false;
};

void run_render(const GlobalOpts& g, const RenderOpts& o) {
    const Instance instance = load_instance(require(g.in_path, "--in", "render"));
    Scene scene = scene_from_instance(instance);
    if (!o.solution_path.empty()) {
        std::string recorded_hash;
        const Solution solution = load_solution(o.solution_path, &recorded_hash);
        if (recorded_hash != instance_hash(instance)) {
            throw InvariantViolation("solution was produced for a different instance");
        }
        add_highlight(scene, solution.indices);
    }
    if (o.decomposition) {
        add_decomposition(scene, disjoint_union_decomposition(instance_polygons(instance)));
    }
    const std::string svg = render_svg(scene);
    if (g.out_path.empty()) {
        std::cout << svg;
    } else {
        write_text_file(svg, g.out_path);
    }
    log_info(g, "render: " + std::to_string(scene.objects.size()) + " object(s), " +
                    std::to_string(scene.outlines.size()) + " outline(s), " +
                    std::to_string(scene.segments.size()) + " segment(s)");
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts global;
    std::string log_level = "info";

    CLI::App app{"Geometric set cover and domination toolkit"};
    app.require_subcommand(1);
    app.add_option("--seed", global.seed, "Generator seed (64-bit unsigned)");
    app.add_option("--in", global.in_path, "Input instance file (JSON)");
    app.add_option("--out", global.out_path, "Output file (stdout when omitted)");
    app.add_option("--log-level", log_level, "quiet, info, or debug")
        ->check(CLI::IsMember({"quiet", "info", "debug"}));

    GenOpts gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "Generate a seeded random instance");
    gen->fallthrough();
    gen->add_option("--kind", gen_opts.kind, "domination or cover")
        ->check(CLI::IsMember({"domination", "cover"}));
    gen->add_option("--n", gen_opts.n, "Number of objects");
    gen->add_option("--points", gen_opts.points, "Number of points (cover only)");
    gen->add_option("--shape", gen_opts.shape, "Base shape: square, kgon, custom");
    gen->add_option("--object-kind", gen_opts.object_kind,
                    "Cover objects: square-homothets, kgon-homothets, rect");
    gen->add_option("--k", gen_opts.k, "Vertex count for kgon shapes");
    gen->add_option("--shape-file", gen_opts.shape_file, "Custom base shape JSON");
    gen->add_option("--scale-min", gen_opts.scale_min, "Smallest homothet scale (rational)");
    gen->add_option("--scale-max", gen_opts.scale_max, "Largest homothet scale (rational)");
    gen->add_option("--extent", gen_opts.extent, "Center range [0, extent]^2 (rational)");
    gen->add_option("--center-denom", gen_opts.center_denom, "Center grid denominator");
    gen->add_option("--scale-denom", gen_opts.scale_denom, "Scale grid denominator");
    gen->add_option("--retry-budget", gen_opts.retry_budget, "Rejection retries (cover only)");

    SolveOpts solve_opts;
    CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->fallthrough();
    solve->add_option("--algo", solve_opts.algo, "local-search, greedy, or exact");
    solve->add_option("--b", solve_opts.b, "Swap size for local search");
    solve->add_option("--epsilon", solve_opts.epsilon, "Derive b from epsilon (rational)");
    solve->add_option("--alpha", solve_opts.alpha, "Scale for the epsilon-derived b (rational)");
    solve->add_option("--init", solve_opts.init, "Initial solution: greedy or full");
    solve->add_option("--trace", solve_opts.trace_path, "Write the swap trace JSON here");
    solve->add_flag("--timing", solve_opts.timing, "Record wall time in the solution meta");
    solve->add_option("--max-n", solve_opts.max_n, "Exact oracle: object-count budget");
    solve->add_option("--max-nodes", solve_opts.max_nodes, "Exact oracle: search-node budget");
    solve->add_option("--time-limit-ms", solve_opts.time_limit_ms,
                      "Exact oracle: wall-clock budget");

    VerifyOpts verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "Check a solution or family property");
    verify->fallthrough();
    verify->add_option("--solution", verify_opts.solution_path,
                       "Verify this solution JSON against --in");
    verify->add_flag("--decomposition", verify_opts.decomposition,
                     "Decompose --in and verify all invariants");
    verify->add_flag("--pseudodisks", verify_opts.pseudodisks,
                     "Check the pairwise crossing bound on --in");

    BenchOpts bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark spec");
    bench->fallthrough();
    bench->add_option("--spec", bench_opts.spec_path, "Bench spec JSON");
    bench->add_option("--text", bench_opts.text_path, "Write the text table here");

    GaugeOpts gauge_opts;
    CLI::App* gauge = app.add_subcommand("gauge", "Evaluate a convex distance gauge");
    gauge->fallthrough();
    gauge->add_option("--shape", gauge_opts.shape_path, "Gauge shape JSON");
    gauge->add_option("--delta", gauge_opts.delta_args, "Two points 'x,y' 'x,y'")
        ->expected(2);
    gauge->add_option("--dist", gauge_opts.dist_args, "Point 'x,y' and a polygon file")
        ->expected(2);

    RenderOpts render_opts;
    CLI::App* render = app.add_subcommand("render", "Draw an instance as SVG");
    render->fallthrough();
    render->add_option("--solution", render_opts.solution_path, "Highlight these objects");
    render->add_flag("--decomposition", render_opts.decomposition,
                     "Overlay the disjoint decomposition");

    try {
        app.parse(argc, argv);
        if (log_level == "quiet") global.log = LogLevel::Quiet;
        if (log_level == "debug") global.log = LogLevel::Debug;

        if (*gen) run_gen(global, gen_opts);
        if (*solve) run_solve(global, solve_opts);
        if (*verify) run_verify(global, verify_opts);
        if (*bench) run_bench_cmd(global, bench_opts);
        if (*gauge) run_gauge(gauge_opts);
        if (*render) run_render(global, render_opts);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const ReportFailed&) {
        return 4;
    } catch (const IterationCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InfeasibleInstance& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
