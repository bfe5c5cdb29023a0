#include "hrg/json_io.hpp"

#include <initializer_list>
#include <set>

#include <json.hpp>

namespace hrg {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text, const char* what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Err::Parse, std::string(what) + ": malformed JSON");
    return j;
}

void expect_keys(const Json& o, const char* where, std::initializer_list<const char*> keys) {
    if (!o.is_object()) fail(Err::Parse, std::string(where) + " must be an object");
    for (const auto& item : o.items()) {
        bool known = false;
        for (const char* k : keys)
            if (item.key() == k) known = true;
        if (!known)
            fail(Err::Parse, std::string(where) + ": unknown field '" + item.key() + "'");
    }
    for (const char* k : keys)
        if (!o.contains(k)) fail(Err::Parse, std::string(where) + ": missing field '" + k + "'");
}

int int_field(const Json& o, const char* key, const char* where) {
    const Json& v = o.at(key);
    if (!v.is_number_integer())
        fail(Err::Parse, std::string(where) + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

std::string str_field(const Json& o, const char* key, const char* where) {
    const Json& v = o.at(key);
    if (!v.is_string())
        fail(Err::Parse, std::string(where) + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

std::array<std::string, 2> id_pair(const Json& v, const char* where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
        fail(Err::Parse, std::string(where) + " must be a pair of edge ids");
    return {v[0].get<std::string>(), v[1].get<std::string>()};
}

} // namespace

Skeleton skeleton_from_json(const std::string& text) {
    Json j = parse_text(text, "skeleton");
    expect_keys(j, "skeleton", {"k", "vertices", "edges", "squares"});
    const int k = int_field(j, "k", "skeleton");
    if (k < 1) fail(Err::Parse, "skeleton: k must be positive");

    const Json& jv = j.at("vertices");
    if (!jv.is_array()) fail(Err::Parse, "skeleton: vertices must be an array");
    std::vector<std::string> vertices;
    std::set<std::string> seen;
    for (const Json& v : jv) {
        if (!v.is_string()) fail(Err::Parse, "skeleton: vertex ids must be strings");
        std::string id = v.get<std::string>();
        if (!seen.insert(id).second) fail(Err::Parse, "skeleton: duplicate vertex id '" + id + "'");
        vertices.push_back(std::move(id));
    }

    const Json& je = j.at("edges");
    if (!je.is_array()) fail(Err::Parse, "skeleton: edges must be an array");
    std::vector<Edge> edges;
    seen.clear();
    for (const Json& e : je) {
        expect_keys(e, "edge", {"id", "color", "range", "source"});
        Edge edge{str_field(e, "id", "edge"), int_field(e, "color", "edge"),
                  str_field(e, "range", "edge"), str_field(e, "source", "edge")};
        if (!seen.insert(edge.id).second)
            fail(Err::Parse, "skeleton: duplicate edge id '" + edge.id + "'");
        edges.push_back(std::move(edge));
    }

    const Json& jq = j.at("squares");
    if (!jq.is_array()) fail(Err::Parse, "skeleton: squares must be an array");
    std::vector<Square> squares;
    for (const Json& q : jq) {
        expect_keys(q, "square", {"first", "second"});
        squares.push_back({id_pair(q.at("first"), "square first"),
                           id_pair(q.at("second"), "square second")});
    }

    return Skeleton(k, std::move(vertices), std::move(edges), std::move(squares));
}

std::string skeleton_to_json(const Skeleton& sk) {
    Json j;
    j["k"] = sk.k();
    j["vertices"] = sk.vertices();
    Json edges = Json::array();
    for (const Edge& e : sk.edges())
        edges.push_back({{"id", e.id}, {"color", e.color}, {"range", e.range}, {"source", e.source}});
    j["edges"] = std::move(edges);
    Json squares = Json::array();
    for (const Square& q : sk.squares())
        squares.push_back({{"first", {q.first[0], q.first[1]}},
                           {"second", {q.second[0], q.second[1]}}});
    j["squares"] = std::move(squares);
    return j.dump(2) + "\n";
}

namespace {

// Total map on the named index set; unknown images become -1 so that
// validate_action reports them rather than the parser.
std::vector<int> parse_map(const Json& o, const char* where,
                           const std::vector<std::string>& names,
                           int (Skeleton::*lookup)(const std::string&) const,
                           const Skeleton& sk) {
    if (!o.is_object()) fail(Err::Parse, std::string(where) + " must be an object");
    std::vector<int> out(names.size(), -1);
    std::vector<bool> covered(names.size(), false);
    for (const auto& item : o.items()) {
        int idx = -1;
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == item.key()) idx = static_cast<int>(i);
        if (idx < 0) fail(Err::Parse, std::string(where) + ": unknown id '" + item.key() + "'");
        if (covered[idx]) fail(Err::Parse, std::string(where) + ": duplicate id '" + item.key() + "'");
        covered[idx] = true;
        if (!item.value().is_string())
            fail(Err::Parse, std::string(where) + ": images must be strings");
        out[idx] = (sk.*lookup)(item.value().get<std::string>());
    }
    for (size_t i = 0; i < names.size(); ++i)
        if (!covered[i]) fail(Err::Parse, std::string(where) + ": missing id '" + names[i] + "'");
    return out;
}

std::vector<std::string> edge_ids(const Skeleton& sk) {
    std::vector<std::string> ids;
    for (const Edge& e : sk.edges()) ids.push_back(e.id);
    return ids;
}

} // namespace

ZlAction action_from_json(const Skeleton& sk, const std::string& text) {
    Json j = parse_text(text, "action");
    expect_keys(j, "action", {"l", "generators"});
    const int l = int_field(j, "l", "action");
    if (l < 0) fail(Err::Parse, "action: l must be nonnegative");
    const Json& jg = j.at("generators");
    if (!jg.is_array()) fail(Err::Parse, "action: generators must be an array");
    if (static_cast<int>(jg.size()) != l)
        fail(Err::Parse, "action: generator count does not match l");

    const std::vector<std::string> eids = edge_ids(sk);
    std::vector<Automorphism> gens;
    for (const Json& g : jg) {
        expect_keys(g, "generator", {"vertex_map", "edge_map"});
        Automorphism phi;
        phi.vertex_map =
            parse_map(g.at("vertex_map"), "vertex_map", sk.vertices(), &Skeleton::vertex_index, sk);
        phi.edge_map = parse_map(g.at("edge_map"), "edge_map", eids, &Skeleton::edge_index, sk);
        gens.push_back(std::move(phi));
    }
    return ZlAction(sk, std::move(gens));
}

std::string action_to_json(const ZlAction& a) {
    const Skeleton& sk = *a.skeleton_ptr();
    Json j;
    j["l"] = a.l();
    Json gens = Json::array();
    for (int g = 0; g < a.l(); ++g) {
        const Automorphism& phi = a.generator(g);
        Json vm = Json::object(), em = Json::object();
        for (int v = 0; v < sk.vertex_count(); ++v)
            vm[sk.vertex_id(v)] = phi.vertex_map[v] >= 0 ? sk.vertex_id(phi.vertex_map[v]) : "";
        for (int e = 0; e < sk.edge_count(); ++e)
            em[sk.edge(e).id] = phi.edge_map[e] >= 0 ? sk.edge(phi.edge_map[e]).id : "";
        gens.push_back({{"vertex_map", std::move(vm)}, {"edge_map", std::move(em)}});
    }
    j["generators"] = std::move(gens);
    return j.dump(2) + "\n";
}

Cocycle cocycle_from_json(const std::string& text) {
    Json j = parse_text(text, "cocycle");
    expect_keys(j, "cocycle", {"values"});
    const Json& jv = j.at("values");
    if (!jv.is_object()) fail(Err::Parse, "cocycle: values must be an object");
    Cocycle c;
    bool first = true;
    for (const auto& item : jv.items()) {
        if (!item.value().is_array())
            fail(Err::Parse, "cocycle: value for '" + item.key() + "' must be an array");
        std::vector<int> val;
        for (const Json& x : item.value()) {
            if (!x.is_number_integer())
                fail(Err::Parse, "cocycle: entries for '" + item.key() + "' must be integers");
            val.push_back(x.get<int>());
        }
        if (first) {
            c.l = static_cast<int>(val.size());
            first = false;
        }
        c.values.emplace(item.key(), std::move(val));
    }
    return c;
}

std::string cocycle_to_json(const Cocycle& c) {
    Json j;
    Json values = Json::object();
    for (const auto& [id, val] : c.values) values[id] = val;
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
}

} // namespace hrg
