#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoset/baselines.hpp"
#include "geoset/instances.hpp"
#include "geoset/json_io.hpp"
#include "geoset/solver.hpp"

namespace geoset {

// Supported algorithm names: "greedy", "local-search", "exact".
bool is_bench_algorithm(const std::string& name);

struct BenchItem {
    std::string id;  // nonempty, unique within a spec
    Instance instance;
};

struct BenchSpec {
    std::vector<BenchItem> items;          // nonempty
    std::vector<std::string> algorithms;   // nonempty, known names
    SolverConfig solver;                   // local-search rows
    OracleBudget budget;                   // exact rows and ratio baselines
    bool timing = false;                   // include wall times in rows
};

struct BenchRow {
    std::string instance_id;
    std::size_t n = 0;
    std::string algorithm;
    std::optional<std::size_t> size;
    bool feasible = false;
    bool audited = false;                 // local-search rows, re-verified
    std::optional<std::string> ratio;     // exact "p/q" vs oracle optimum
    std::optional<double> wall_time_ms;   // only when spec.timing
    std::optional<std::string> error;     // captured failure; row retained
};

struct BenchResult {
    std::vector<BenchRow> rows;
};

// Runs every (item, algorithm) pair in spec order; a row failure is captured
// in the row, never aborting the table. Deterministic given the spec, apart
// from wall times when timing is enabled. Throws InvalidParams for an empty
// or inconsistent spec.
BenchResult run_bench(const BenchSpec& spec);

// {"version": 1, "rows": [...]} with a fixed key order.
Json bench_to_json(const BenchResult& result);

// Fixed-width text table derived from the JSON form.
std::string bench_table_text(const Json& table);

}  // namespace geoset
