#include <doctest.h>

#include <cstdio>
#include <string>

#include "geoset/errors.hpp"
#include "geoset/json_io.hpp"
#include "geoset/solver.hpp"

using namespace geoset;

namespace {

Solution sample_solution() {
    Solution s;
    s.indices = {0, 2, 5};
    s.meta.solver = "local-search";
    s.meta.parameters = {{"b", "2"}, {"init", "greedy"}};
    s.meta.swap_count = 3;
    return s;
}

SwapTrace sample_trace() {
    SwapTrace t;
    t.rounds = 2;
    t.extra_rounds = true;
    t.entries.push_back(SwapRecord{1, {4, 7}, {2}, 5});
    t.entries.push_back(SwapRecord{2, {2}, {6}, 5});
    return t;
}

const std::string kHash = "0123456789abcdef";

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("solution JSON: schema fields and byte-stable round-trip") {
    const Solution s = sample_solution();
    const Json j = solution_to_json(s, kHash);

    CHECK(j["version"] == 1);
    CHECK(j["instance_hash"] == kHash);
    CHECK(j["indices"] == Json::array({0, 2, 5}));
    CHECK(j["meta"]["solver"] == "local-search");
    CHECK(j["meta"]["parameters"]["b"] == "2");
    CHECK(j["meta"]["parameters"]["init"] == "greedy");
    CHECK(j["meta"]["swap_count"] == 3);
    CHECK_FALSE(j["meta"].contains("wall_time_ms"));  // absent unless recorded

    std::string hash_out;
    const Solution back = solution_from_json(j, &hash_out);
    CHECK(hash_out == kHash);
    CHECK(back.indices == s.indices);
    CHECK(back.meta.solver == s.meta.solver);
    CHECK(back.meta.parameters == s.meta.parameters);
    CHECK(back.meta.swap_count == s.meta.swap_count);
    CHECK_FALSE(back.meta.wall_time_ms.has_value());

    // Serialize -> parse -> serialize is byte-identical.
    CHECK(solution_to_json(back, hash_out).dump() == j.dump());
}

TEST_CASE("solution JSON: wall time is kept when present") {
    Solution s = sample_solution();
    s.meta.wall_time_ms = 12.5;
    const Json j = solution_to_json(s, kHash);
    CHECK(j["meta"]["wall_time_ms"] == 12.5);
    const Solution back = solution_from_json(j);
    REQUIRE(back.meta.wall_time_ms.has_value());
    CHECK(*back.meta.wall_time_ms == 12.5);
}

TEST_CASE("solution JSON: malformed inputs are rejected") {
    const Json good = solution_to_json(sample_solution(), kHash);

    {
        Json j = good;
        j["version"] = 2;
        CHECK_THROWS_AS(solution_from_json(j), ParseError);
    }
    {
        Json j = good;
        j.erase("version");
        CHECK_THROWS_AS(solution_from_json(j), ParseError);
    }
    {
        Json j = good;
        j["instance_hash"] = "0123456789ABCDEF";  // uppercase
        CHECK_THROWS_AS(solution_from_json(j), ParseError);
    }
    {
        Json j = good;
        j["instance_hash"] = "012345";  // too short
        CHECK_THROWS_AS(solution_from_json(j), ParseError);
    }
    {
        Json j = good;
        j.erase("indices");
        CHECK_THROWS_AS(solution_from_json(j), ParseError);
    }
    {
        Json j = good;
        j["indices"] = Json::array({0, "two"});
        CHECK_THROWS_AS(solution_from_json(j), ParseError);
    }
    {
        Json j = good;
        j["indices"] = Json::parse("[0, 2, 2]");  // duplicate
        CHECK_THROWS_AS(solution_from_json(j), InvariantViolation);
    }
    {
        Json j = good;
        j["indices"] = Json::parse("[2, 0]");  // decreasing
        CHECK_THROWS_AS(solution_from_json(j), InvariantViolation);
    }
    {
        Json j = good;
        j["indices"] = Json::parse("[-1, 2]");  // negative
        CHECK_THROWS_AS(solution_from_json(j), ParseError);
    }
    {
        Json j = good;
        j.erase("meta");
        CHECK_THROWS_AS(solution_from_json(j), ParseError);
    }
    {
        Json j = good;
        j["meta"].erase("solver");
        CHECK_THROWS_AS(solution_from_json(j), ParseError);
    }
}

TEST_CASE("trace JSON: schema fields and byte-stable round-trip") {
    const SwapTrace t = sample_trace();
    const Json j = trace_to_json(t, kHash);

    CHECK(j["version"] == 1);
    CHECK(j["instance_hash"] == kHash);
    CHECK(j["rounds"] == 2);
    CHECK(j["extra_rounds"] == true);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["loop"] == 1);
    CHECK(j["entries"][0]["removed"] == Json::array({4, 7}));
    CHECK(j["entries"][0]["added"] == Json::array({2}));
    CHECK(j["entries"][0]["witness_size"] == 5);
    CHECK(j["entries"][1]["loop"] == 2);

    std::string hash_out;
    const SwapTrace back = trace_from_json(j, &hash_out);
    CHECK(hash_out == kHash);
    CHECK(back.rounds == t.rounds);
    CHECK(back.extra_rounds == t.extra_rounds);
    REQUIRE(back.entries.size() == 2);
    CHECK(back.entries[0].loop == 1);
    CHECK(back.entries[0].removed == t.entries[0].removed);
    CHECK(back.entries[0].added == t.entries[0].added);
    CHECK(back.entries[0].witness_size == t.entries[0].witness_size);
    CHECK(back.entries[1].loop == 2);
    CHECK(trace_to_json(back, hash_out).dump() == j.dump());
}

TEST_CASE("trace JSON: malformed inputs are rejected") {
    const Json good = trace_to_json(sample_trace(), kHash);

    {
        Json j = good;
        j["version"] = "1";
        CHECK_THROWS_AS(trace_from_json(j), ParseError);
    }
    {
        Json j = good;
        j.erase("rounds");
        CHECK_THROWS_AS(trace_from_json(j), ParseError);
    }
    {
        Json j = good;
        j["entries"][0]["loop"] = 3;
        CHECK_THROWS_AS(trace_from_json(j), InvariantViolation);
    }
    {
        Json j = good;
        j["entries"][0].erase("loop");
        CHECK_THROWS_AS(trace_from_json(j), ParseError);
    }
    {
        Json j = good;
        j["entries"][0].erase("witness_size");
        CHECK_THROWS_AS(trace_from_json(j), ParseError);
    }
    {
        Json j = good;
        j["entries"] = Json::object();
        CHECK_THROWS_AS(trace_from_json(j), ParseError);
    }
}

TEST_CASE("trace JSON: missing removed/added arrays default to empty") {
    Json j = trace_to_json(sample_trace(), kHash);
    j["entries"][0].erase("removed");
    j["entries"][0].erase("added");
    const SwapTrace back = trace_from_json(j);
    CHECK(back.entries[0].removed.empty());
    CHECK(back.entries[0].added.empty());
}

TEST_CASE("solution and trace files round-trip through disk") {
    const TempFile sol_file{"tmp_test_solution.json"};
    const TempFile trace_file{"tmp_test_trace.json"};

    const Solution s = sample_solution();
    save_solution(s, kHash, sol_file.path);
    std::string hash_out;
    const Solution s_back = load_solution(sol_file.path, &hash_out);
    CHECK(hash_out == kHash);
    CHECK(solution_to_json(s_back, hash_out).dump() == solution_to_json(s, kHash).dump());

    const SwapTrace t = sample_trace();
    save_trace(t, kHash, trace_file.path);
    hash_out.clear();
    const SwapTrace t_back = load_trace(trace_file.path, &hash_out);
    CHECK(hash_out == kHash);
    CHECK(trace_to_json(t_back, hash_out).dump() == trace_to_json(t, kHash).dump());

    CHECK_THROWS_AS(load_solution("no_such_file.json", nullptr), ParseError);
    CHECK_THROWS_AS(load_trace("no_such_file.json", nullptr), ParseError);
}

TEST_CASE("solver output serializes against the instance hash end to end") {
    DominationGenParams params;
    params.n = 8;
    const DominationInstance instance = gen_domination(params, 42);
    const Instance wrapped{instance};
    const std::string hash = instance_hash(wrapped);

    const ProblemInstance problem = make_problem(wrapped);
    SolverConfig config;
    config.b = 2;
    const auto [solution, trace] = local_search(problem, config);

    const std::string sol_bytes = solution_to_json(solution, hash).dump();
    const std::string trace_bytes = trace_to_json(trace, hash).dump();

    // A second run of the whole pipeline yields the same bytes.
    const auto [solution2, trace2] = local_search(make_problem(wrapped), config);
    CHECK(solution_to_json(solution2, hash).dump() == sol_bytes);
    CHECK(trace_to_json(trace2, hash).dump() == trace_bytes);

    // Round-trip parses back to the same serialization.
    std::string hash_out;
    const Solution back = solution_from_json(Json::parse(sol_bytes), &hash_out);
    CHECK(hash_out == hash);
    CHECK(solution_to_json(back, hash_out).dump() == sol_bytes);
}
