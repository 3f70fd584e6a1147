#include "geoset/bench.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "geoset/errors.hpp"

namespace geoset {

bool is_bench_algorithm(const std::string& name) {
    return name == "greedy" || name == "local-search" || name == "exact";
}

namespace {

void validate_spec(const BenchSpec& spec) {
    if (spec.items.empty()) throw InvalidParams("bench spec has no instances");
    if (spec.algorithms.empty()) throw InvalidParams("bench spec has no algorithms");
    std::set<std::string> ids;
    for (const BenchItem& item : spec.items) {
        if (item.id.empty()) throw InvalidParams("bench instance id must be nonempty");
        if (!ids.insert(item.id).second)
            throw InvalidParams("duplicate bench instance id: " + item.id);
    }
    for (const std::string& algo : spec.algorithms) {
        if (!is_bench_algorithm(algo)) throw InvalidParams("unknown algorithm: " + algo);
    }
}

std::vector<std::size_t> run_algorithm(const std::string& algo, const Instance& instance,
                                       const ProblemInstance& problem, const BenchSpec& spec,
                                       BenchRow& row) {
    if (algo == "greedy") {
        if (const auto* dom = std::get_if<DominationInstance>(&instance))
            return greedy_dominating_set(*dom);
        return greedy_set_cover(std::get<CoverInstance>(instance));
    }
    if (algo == "local-search") {
        const Solution solution = local_search(problem, spec.solver).first;
        row.audited =
            audit_b_local_optimality(problem, solution.indices, resolve_b(spec.solver).b);
        return solution.indices;
    }
    OracleResult oracle;
    if (const auto* dom = std::get_if<DominationInstance>(&instance))
        oracle = exact_min_dominating_set(*dom, spec.budget);
    else
        oracle = exact_min_set_cover(std::get<CoverInstance>(instance), spec.budget);
    return oracle.indices;
}

}  // namespace

BenchResult run_bench(const BenchSpec& spec) {
    validate_spec(spec);
    BenchResult result;
    for (const BenchItem& item : spec.items) {
        const ProblemInstance problem = make_problem(item.instance);
        const std::size_t n = problem.system.num_objects;

        // Oracle optimum for ratio columns, shared by all rows of this item.
        std::optional<std::size_t> optimum;
        try {
            if (const auto* dom = std::get_if<DominationInstance>(&item.instance))
                optimum = exact_min_dominating_set(*dom, spec.budget).optimum;
            else
                optimum = exact_min_set_cover(std::get<CoverInstance>(item.instance),
                                              spec.budget).optimum;
        } catch (const Error&) {
            // over budget or infeasible: ratio columns stay empty
        }

        for (const std::string& algo : spec.algorithms) {
            BenchRow row;
            row.instance_id = item.id;
            row.n = n;
            row.algorithm = algo;
            try {
                const auto start = std::chrono::steady_clock::now();
                const std::vector<std::size_t> indices =
                    run_algorithm(algo, item.instance, problem, spec, row);
                if (spec.timing) {
                    const auto stop = std::chrono::steady_clock::now();
                    row.wall_time_ms =
                        std::chrono::duration<double, std::milli>(stop - start).count();
                }
                row.size = indices.size();
                row.feasible = problem.system.feasible(indices);
                if (optimum && *optimum > 0) {
                    row.ratio = to_string(make_rational(static_cast<long>(indices.size()),
                                                        static_cast<long>(*optimum)));
                }
            } catch (const Error& e) {
                row.error = e.what();
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

Json bench_to_json(const BenchResult& result) {
    Json table = Json::object();
    table["version"] = 1;
    Json rows = Json::array();
    for (const BenchRow& row : result.rows) {
        Json r = Json::object();
        r["instance"] = row.instance_id;
        r["n"] = row.n;
        r["algorithm"] = row.algorithm;
        r["size"] = row.size ? Json(*row.size) : Json(nullptr);
        r["feasible"] = row.feasible;
        r["audited"] = row.audited;
        r["ratio"] = row.ratio ? Json(*row.ratio) : Json(nullptr);
        if (row.wall_time_ms) r["wall_time_ms"] = *row.wall_time_ms;
        if (row.error) r["error"] = *row.error;
        rows.push_back(std::move(r));
    }
    table["rows"] = std::move(rows);
    return table;
}

std::string bench_table_text(const Json& table) {
    if (!table.is_object() || !table.contains("rows") || !table["rows"].is_array())
        throw InvalidParams("bench table JSON requires a rows array");

    const std::vector<std::string> headers = {"instance", "n",     "algorithm", "size",
                                              "feasible", "audited", "ratio",   "time_ms",
                                              "error"};
    auto cell = [](const Json& row, const std::string& key) -> std::string {
        const std::string jkey = key == "time_ms" ? "wall_time_ms" : key;
        if (!row.contains(jkey) || row[jkey].is_null()) return "-";
        const Json& v = row[jkey];
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
        if (v.is_number_float()) {
            std::ostringstream os;
            os.setf(std::ios::fixed);
            os.precision(2);
            os << v.get<double>();
            return os.str();
        }
        return v.dump();
    };

    std::vector<std::size_t> widths;
    widths.reserve(headers.size());
    for (const std::string& h : headers) widths.push_back(h.size());
    for (const Json& row : table["rows"]) {
        for (std::size_t c = 0; c < headers.size(); ++c) {
            widths[c] = std::max(widths[c], cell(row, headers[c]).size());
        }
    }

    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out << "  ";
            out << cells[c];
            if (c + 1 < cells.size()) {  // no trailing spaces on the last column
                for (std::size_t pad = cells[c].size(); pad < widths[c]; ++pad) out << ' ';
            }
        }
        out << '\n';
    };
    emit_row(headers);
    {
        std::vector<std::string> rule;
        rule.reserve(headers.size());
        for (const std::size_t w : widths) rule.push_back(std::string(w, '-'));
        emit_row(rule);
    }
    for (const Json& row : table["rows"]) {
        std::vector<std::string> cells;
        cells.reserve(headers.size());
        for (const std::string& h : headers) cells.push_back(cell(row, h));
        emit_row(cells);
    }
    return out.str();
}

}  // namespace geoset
