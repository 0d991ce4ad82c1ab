#include "ohr/json_io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace ohr {

OrderedHypergraph parse_hypergraph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw HypergraphParseError(ParseErrorCode::MalformedJson, e.what());
    }
    if (!j.is_object())
        throw HypergraphParseError(ParseErrorCode::BadFieldType, "top level must be an object");
    for (const char* field : {"k", "n", "edges"})
        if (!j.contains(field))
            throw HypergraphParseError(ParseErrorCode::MissingField,
                                       std::string("missing field: ") + field);
    if (!j["k"].is_number_integer() || !j["n"].is_number_integer() || !j["edges"].is_array())
        throw HypergraphParseError(ParseErrorCode::BadFieldType,
                                   "k and n must be integers, edges an array");
    const int k = j["k"].get<int>();
    const int n = j["n"].get<int>();
    if (k < 2 || n < 0)
        throw HypergraphParseError(ParseErrorCode::BadFieldType, "require k >= 2 and n >= 0");

    std::vector<std::vector<int>> edges;
    std::set<std::vector<int>> seen;
    for (const auto& je : j["edges"]) {
        if (!je.is_array())
            throw HypergraphParseError(ParseErrorCode::BadFieldType, "edge must be an array");
        if (static_cast<int>(je.size()) != k)
            throw HypergraphParseError(ParseErrorCode::ArityMismatch,
                                       "edge arity differs from k");
        std::vector<int> e;
        for (const auto& jv : je) {
            if (!jv.is_number_integer())
                throw HypergraphParseError(ParseErrorCode::BadFieldType,
                                           "edge entries must be integers");
            int v = jv.get<int>();
            if (v < 0 || v >= n)
                throw HypergraphParseError(ParseErrorCode::VertexOutOfRange,
                                           "vertex outside [0, n)");
            e.push_back(v);
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw HypergraphParseError(ParseErrorCode::ArityMismatch,
                                       "edge has a repeated vertex");
        if (!seen.insert(e).second)
            throw HypergraphParseError(ParseErrorCode::DuplicateEdge, "duplicate edge");
        edges.push_back(std::move(e));
    }
    try {
        return OrderedHypergraph(k, n, std::move(edges));
    } catch (const InvalidParameter& e) {
        throw HypergraphParseError(ParseErrorCode::BadFieldType, e.what());
    }
}

std::string serialize_hypergraph(const OrderedHypergraph& h) {
    nlohmann::json j;
    j["k"] = h.k();
    j["n"] = h.n();
    auto edges = h.edges();
    std::sort(edges.begin(), edges.end());
    j["edges"] = edges;
    return j.dump() + "\n";
}

}  // namespace ohr
