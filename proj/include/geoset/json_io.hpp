#pragma once

#include <string>

#include <json.hpp>

#include "geoset/instances.hpp"
#include "geoset/solver.hpp"

namespace geoset {

// Ordered so serialized files are stable byte-for-byte.
using Json = nlohmann::ordered_json;

// Coordinates serialize as exact rational strings, e.g. ["3/2", "-1"].
Json point_to_json(const Point& p);
Point point_from_json(const Json& j);
Json polygon_to_json(const ConvexPolygon& poly);
ConvexPolygon polygon_from_json(const Json& j);

// Instance schema, version 1:
//   {"version": 1, "kind": "domination", "base": {"polygon": [...],
//    "center": [...]}, "homothets": [{"center": [...], "scale": "q"}, ...],
//    "seed"?: u64, "params"?: {string: string}}
//   {"version": 1, "kind": "cover", "objects": [[...], ...],
//    "points": [[...], ...], "seed"?: u64, "params"?: {string: string}}
// Loading re-validates all instance invariants (throws InvariantViolation).
Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& j);
void save_instance(const Instance& instance, const std::string& path);
Instance load_instance(const std::string& path);

// 16 lowercase hex digits: FNV-1a 64 over the canonical compact geometry
// serialization (seed and params provenance excluded).
std::string instance_hash(const Instance& instance);
std::uint64_t fnv1a64(const std::string& bytes);

// Solution schema, version 1:
//   {"version": 1, "instance_hash": "16 hex digits", "indices": [...],
//    "meta": {"solver": "...", "parameters": {string: string},
//             "swap_count": N, "wall_time_ms"?: number}}
// Loading validates the shape and requires strictly increasing indices.
Json solution_to_json(const Solution& solution, const std::string& hash);
Solution solution_from_json(const Json& j, std::string* hash_out = nullptr);
void save_solution(const Solution& solution, const std::string& hash, const std::string& path);
Solution load_solution(const std::string& path, std::string* hash_out = nullptr);

// Trace schema, version 1:
//   {"version": 1, "instance_hash": "...", "rounds": N, "extra_rounds": bool,
//    "entries": [{"loop": 1|2, "removed": [...], "added": [...],
//                 "witness_size": N}, ...]}
Json trace_to_json(const SwapTrace& trace, const std::string& hash);
SwapTrace trace_from_json(const Json& j, std::string* hash_out = nullptr);
void save_trace(const SwapTrace& trace, const std::string& hash, const std::string& path);
SwapTrace load_trace(const std::string& path, std::string* hash_out = nullptr);

// Throws ParseError when the file is missing or not valid JSON.
Json read_json_file(const std::string& path);
// Pretty-prints with 2-space indent and a trailing newline.
void write_json_file(const Json& j, const std::string& path);

}  // namespace geoset
