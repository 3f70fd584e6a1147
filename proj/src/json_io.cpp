#include "geoset/json_io.hpp"

#include <fstream>
#include <sstream>

#include "geoset/errors.hpp"

namespace geoset {

Json point_to_json(const Point& p) {
    return Json::array({to_string(p.x), to_string(p.y)});
}

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError("point must be an array of two rational strings");
    return Point{rational_from_string(j[0].get<std::string>()),
                 rational_from_string(j[1].get<std::string>())};
}

Json polygon_to_json(const ConvexPolygon& poly) {
    Json arr = Json::array();
    for (const Point& v : poly.vertices()) arr.push_back(point_to_json(v));
    return arr;
}

ConvexPolygon polygon_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polygon must be an array of points");
    std::vector<Point> verts;
    verts.reserve(j.size());
    for (const Json& p : j) verts.push_back(point_from_json(p));
    return ConvexPolygon::from_vertices(std::move(verts));
}

namespace {

Json params_to_json(const ParamsNote& params) {
    Json obj = Json::object();
    for (const auto& [key, value] : params) obj[key] = value;
    return obj;
}

ParamsNote params_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("params must be an object");
    ParamsNote params;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) throw ParseError("params values must be strings");
        params.emplace_back(key, value.get<std::string>());
    }
    return params;
}

// Geometry-only serialization: the canonical identity of an instance,
// independent of seed/params provenance.
Json geometry_json(const Instance& instance) {
    Json j = Json::object();
    j["version"] = 1;
    if (const auto* dom = std::get_if<DominationInstance>(&instance)) {
        j["kind"] = "domination";
        Json base = Json::object();
        base["polygon"] = polygon_to_json(dom->base.polygon);
        base["center"] = point_to_json(dom->base.center);
        j["base"] = std::move(base);
        Json homs = Json::array();
        for (const Homothet& h : dom->objects) {
            Json hj = Json::object();
            hj["center"] = point_to_json(h.center);
            hj["scale"] = to_string(h.scale);
            homs.push_back(std::move(hj));
        }
        j["homothets"] = std::move(homs);
    } else {
        const auto& cover = std::get<CoverInstance>(instance);
        j["kind"] = "cover";
        Json objs = Json::array();
        for (const ConvexPolygon& p : cover.objects) objs.push_back(polygon_to_json(p));
        j["objects"] = std::move(objs);
        Json pts = Json::array();
        for (const Point& p : cover.points) pts.push_back(point_to_json(p));
        j["points"] = std::move(pts);
    }
    return j;
}

void append_provenance(Json& j, const std::optional<Seed>& seed, const ParamsNote& params) {
    if (seed) j["seed"] = *seed;
    if (!params.empty()) j["params"] = params_to_json(params);
}

void validate_cover(const CoverInstance& cover) {
    if (cover.objects.empty()) throw InvariantViolation("cover instance has no objects");
    const auto offenders = verify_pseudodisk_family(cover.objects);
    if (!offenders.empty()) {
        const auto& off = offenders.front();
        std::ostringstream msg;
        msg << "objects " << off.i << " and " << off.j << " violate the pseudodisk family: ";
        if (off.crossings)
            msg << *off.crossings << " boundary crossings";
        else
            msg << "boundary-segment overlap";
        throw InvariantViolation(msg.str());
    }
    for (std::size_t i = 0; i < cover.points.size(); ++i) {
        bool covered = false;
        for (const ConvexPolygon& obj : cover.objects) {
            if (contains_point(obj, cover.points[i])) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            std::ostringstream msg;
            msg << "point " << i << " is not covered by any object";
            throw InvariantViolation(msg.str());
        }
    }
}

}  // namespace

Json instance_to_json(const Instance& instance) {
    Json j = geometry_json(instance);
    if (const auto* dom = std::get_if<DominationInstance>(&instance))
        append_provenance(j, dom->seed, dom->params);
    else {
        const auto& cover = std::get<CoverInstance>(instance);
        append_provenance(j, cover.seed, cover.params);
    }
    return j;
}

Instance instance_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw ParseError("instance must be a JSON object");
        if (!j.contains("version") || !j["version"].is_number_integer() || j["version"] != 1)
            throw ParseError("unsupported instance version");
        if (!j.contains("kind") || !j["kind"].is_string())
            throw ParseError("missing instance kind");

        std::optional<Seed> seed;
        if (j.contains("seed")) {
            if (!j["seed"].is_number_unsigned()) throw ParseError("seed must be a u64");
            seed = j["seed"].get<std::uint64_t>();
        }
        ParamsNote params;
        if (j.contains("params")) params = params_from_json(j["params"]);

        const std::string kind = j["kind"].get<std::string>();
        if (kind == "domination") {
            if (!j.contains("base") || !j.contains("homothets"))
                throw ParseError("domination instance requires base and homothets");
            const Json& bj = j["base"];
            if (!bj.is_object() || !bj.contains("polygon") || !bj.contains("center"))
                throw ParseError("base requires polygon and center");
            BaseShape base = make_base_shape(polygon_from_json(bj["polygon"]),
                                             point_from_json(bj["center"]));
            if (!j["homothets"].is_array() || j["homothets"].empty())
                throw InvariantViolation("domination instance has no objects");
            DominationInstance dom{std::move(base), {}, seed, std::move(params)};
            for (const Json& hj : j["homothets"]) {
                if (!hj.is_object() || !hj.contains("center") || !hj.contains("scale") ||
                    !hj["scale"].is_string())
                    throw ParseError("homothet requires center and scale string");
                Homothet h{point_from_json(hj["center"]),
                           rational_from_string(hj["scale"].get<std::string>())};
                if (sign(h.scale) <= 0)
                    throw InvariantViolation("homothet scale must be positive");
                instantiate(dom.base, h);  // validates the expanded polygon
                dom.objects.push_back(std::move(h));
            }
            return dom;
        }
        if (kind == "cover") {
            if (!j.contains("objects") || !j["objects"].is_array())
                throw ParseError("cover instance requires objects");
            CoverInstance cover;
            cover.seed = seed;
            cover.params = std::move(params);
            for (const Json& oj : j["objects"]) cover.objects.push_back(polygon_from_json(oj));
            if (j.contains("points")) {
                if (!j["points"].is_array()) throw ParseError("points must be an array");
                for (const Json& pj : j["points"]) cover.points.push_back(point_from_json(pj));
            }
            validate_cover(cover);
            return cover;
        }
        throw ParseError("unknown instance kind: " + kind);
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed instance JSON: ") + e.what());
    }
}

void save_instance(const Instance& instance, const std::string& path) {
    write_json_file(instance_to_json(instance), path);
}

Instance load_instance(const std::string& path) {
    return instance_from_json(read_json_file(path));
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string instance_hash(const Instance& instance) {
    const std::uint64_t h = fnv1a64(geometry_json(instance).dump());
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 0; i < 16; ++i) hex[15 - i] = digits[(h >> (4 * i)) & 0xF];
    return hex;
}

namespace {

std::vector<std::size_t> indices_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::size_t> indices;
    indices.reserve(j.size());
    for (const Json& e : j) {
        if (!e.is_number_unsigned()) throw ParseError(std::string(what) + " must hold unsigned integers");
        indices.push_back(e.get<std::size_t>());
    }
    return indices;
}

std::string hash_from_json(const Json& j) {
    if (!j.contains("instance_hash") || !j["instance_hash"].is_string())
        throw ParseError("missing instance_hash");
    const std::string hash = j["instance_hash"].get<std::string>();
    if (hash.size() != 16 || hash.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw ParseError("instance_hash must be 16 lowercase hex digits");
    return hash;
}

void check_version(const Json& j, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"] != 1)
        throw ParseError(std::string("unsupported ") + what + " version");
}

}  // namespace

Json solution_to_json(const Solution& solution, const std::string& hash) {
    Json j = Json::object();
    j["version"] = 1;
    j["instance_hash"] = hash;
    j["indices"] = solution.indices;
    Json meta = Json::object();
    meta["solver"] = solution.meta.solver;
    meta["parameters"] = params_to_json(solution.meta.parameters);
    meta["swap_count"] = solution.meta.swap_count;
    if (solution.meta.wall_time_ms) meta["wall_time_ms"] = *solution.meta.wall_time_ms;
    j["meta"] = std::move(meta);
    return j;
}

Solution solution_from_json(const Json& j, std::string* hash_out) {
    try {
        check_version(j, "solution");
        const std::string hash = hash_from_json(j);
        if (hash_out) *hash_out = hash;
        if (!j.contains("indices")) throw ParseError("missing solution indices");
        Solution solution;
        solution.indices = indices_from_json(j["indices"], "indices");
        for (std::size_t i = 1; i < solution.indices.size(); ++i) {
            if (solution.indices[i - 1] >= solution.indices[i])
                throw InvariantViolation("solution indices must be strictly increasing");
        }
        if (!j.contains("meta") || !j["meta"].is_object())
            throw ParseError("missing solution meta");
        const Json& meta = j["meta"];
        if (!meta.contains("solver") || !meta["solver"].is_string())
            throw ParseError("missing solver name");
        solution.meta.solver = meta["solver"].get<std::string>();
        if (meta.contains("parameters"))
            solution.meta.parameters = params_from_json(meta["parameters"]);
        if (meta.contains("swap_count")) {
            if (!meta["swap_count"].is_number_unsigned())
                throw ParseError("swap_count must be unsigned");
            solution.meta.swap_count = meta["swap_count"].get<std::size_t>();
        }
        if (meta.contains("wall_time_ms")) {
            if (!meta["wall_time_ms"].is_number())
                throw ParseError("wall_time_ms must be a number");
            solution.meta.wall_time_ms = meta["wall_time_ms"].get<double>();
        }
        return solution;
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed solution JSON: ") + e.what());
    }
}

void save_solution(const Solution& solution, const std::string& hash, const std::string& path) {
    write_json_file(solution_to_json(solution, hash), path);
}

Solution load_solution(const std::string& path, std::string* hash_out) {
    return solution_from_json(read_json_file(path), hash_out);
}

Json trace_to_json(const SwapTrace& trace, const std::string& hash) {
    Json j = Json::object();
    j["version"] = 1;
    j["instance_hash"] = hash;
    j["rounds"] = trace.rounds;
    j["extra_rounds"] = trace.extra_rounds;
    Json entries = Json::array();
    for (const SwapRecord& rec : trace.entries) {
        Json e = Json::object();
        e["loop"] = rec.loop;
        e["removed"] = rec.removed;
        e["added"] = rec.added;
        e["witness_size"] = rec.witness_size;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

SwapTrace trace_from_json(const Json& j, std::string* hash_out) {
    try {
        check_version(j, "trace");
        const std::string hash = hash_from_json(j);
        if (hash_out) *hash_out = hash;
        SwapTrace trace;
        if (!j.contains("rounds") || !j["rounds"].is_number_unsigned())
            throw ParseError("missing trace rounds");
        trace.rounds = j["rounds"].get<std::size_t>();
        if (!j.contains("extra_rounds") || !j["extra_rounds"].is_boolean())
            throw ParseError("missing trace extra_rounds");
        trace.extra_rounds = j["extra_rounds"].get<bool>();
        if (!j.contains("entries") || !j["entries"].is_array())
            throw ParseError("missing trace entries");
        for (const Json& e : j["entries"]) {
            if (!e.is_object() || !e.contains("loop") || !e["loop"].is_number_integer())
                throw ParseError("trace entry requires a loop tag");
            SwapRecord rec;
            rec.loop = e["loop"].get<int>();
            if (rec.loop != 1 && rec.loop != 2)
                throw InvariantViolation("trace entry loop must be 1 or 2");
            rec.removed = indices_from_json(e.value("removed", Json::array()), "removed");
            rec.added = indices_from_json(e.value("added", Json::array()), "added");
            if (!e.contains("witness_size") || !e["witness_size"].is_number_unsigned())
                throw ParseError("trace entry requires witness_size");
            rec.witness_size = e["witness_size"].get<std::size_t>();
            trace.entries.push_back(std::move(rec));
        }
        return trace;
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed trace JSON: ") + e.what());
    }
}

void save_trace(const SwapTrace& trace, const std::string& hash, const std::string& path) {
    write_json_file(trace_to_json(trace, hash), path);
}

SwapTrace load_trace(const std::string& path, std::string* hash_out) {
    return trace_from_json(read_json_file(path), hash_out);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const Json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw Error("write failed: " + path);
}

}  // namespace geoset
