#include "hsi/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hsi/errors.hpp"

namespace hsi {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
T get_number(const nlohmann::json& value, const char* key) {
    if (!value.is_number()) throw UsageError(std::string("instance key '") + key + "' must be a number");
    return value.get<T>();
}

}  // namespace

std::string serialize_instance(const Instance& instance) {
    ordered_json out;
    out["n"] = instance.graph.n();
    out["d"] = instance.graph.d();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : instance.graph.edges()) edges.push_back(e);
    out["edges"] = std::move(edges);
    if (instance.p) out["p"] = *instance.p;
    if (instance.seed) out["seed"] = *instance.seed;
    return out.dump();
}

Instance parse_instance(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw UsageError("instance must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "n" && key != "d" && key != "edges" && key != "p" && key != "seed") {
            throw UsageError("unknown instance key '" + key + "'");
        }
    }
    for (const char* required : {"n", "d", "edges"}) {
        if (!doc.contains(required)) throw UsageError(std::string("instance is missing '") + required + "'");
    }
    if (!doc["n"].is_number_unsigned() || !doc["d"].is_number_unsigned()) {
        throw UsageError("'n' and 'd' must be non-negative integers");
    }
    const auto n = doc["n"].get<std::size_t>();
    const auto d = doc["d"].get<std::size_t>();
    if (!doc["edges"].is_array()) throw UsageError("'edges' must be an array");
    std::vector<Edge> edges;
    edges.reserve(doc["edges"].size());
    for (const auto& raw : doc["edges"]) {
        if (!raw.is_array()) throw UsageError("each edge must be an array");
        Edge e;
        for (const auto& v : raw) {
            if (!v.is_number_unsigned()) throw UsageError("edge vertices must be non-negative integers");
            e.push_back(v.get<Vertex>());
        }
        edges.push_back(std::move(e));
    }
    Instance instance{Hypergraph(n, d, std::move(edges)), std::nullopt, std::nullopt};
    if (doc.contains("p")) instance.p = get_number<double>(doc["p"], "p");
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) throw UsageError("'seed' must be a non-negative integer");
        instance.seed = doc["seed"].get<std::uint64_t>();
    }
    return instance;
}

Instance read_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open instance file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

void write_instance_file(const std::filesystem::path& path, const Instance& instance) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write instance file " + path.string());
    out << serialize_instance(instance) << '\n';
}

}  // namespace hsi
