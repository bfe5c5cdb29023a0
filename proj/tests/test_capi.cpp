#include <doctest.h>

#include <memory>
#include <string>

#include <json.hpp>

#include "hrg.h"

using Json = nlohmann::json;

namespace {

struct SkDel {
    void operator()(hrg_skeleton* p) const { hrg_skeleton_free(p); }
};
struct ActDel {
    void operator()(hrg_action* p) const { hrg_action_free(p); }
};
using SkPtr = std::unique_ptr<hrg_skeleton, SkDel>;
using ActPtr = std::unique_ptr<hrg_action, ActDel>;

std::string take(char* s) {
    std::string out = s ? s : "";
    hrg_string_free(s);
    return out;
}

const char* kO2 = R"({
  "k": 1,
  "vertices": ["v"],
  "edges": [
    {"id": "f1", "color": 1, "range": "v", "source": "v"},
    {"id": "f2", "color": 1, "range": "v", "source": "v"}
  ],
  "squares": []
})";

const char* kSwap = R"({
  "l": 1,
  "generators": [
    {"vertex_map": {"v": "v"}, "edge_map": {"f1": "f2", "f2": "f1"}}
  ]
})";

SkPtr parse_sk(const char* json) {
    hrg_skeleton* sk = nullptr;
    REQUIRE(hrg_skeleton_parse(json, &sk) == HRG_OK);
    return SkPtr(sk);
}

ActPtr parse_act(const hrg_skeleton* sk, const char* json) {
    hrg_action* a = nullptr;
    REQUIRE(hrg_action_parse(sk, json, &a) == HRG_OK);
    return ActPtr(a);
}

} // namespace

TEST_CASE("skeleton handles parse, validate and serialize") {
    SkPtr sk = parse_sk(kO2);
    int ok = 0;
    char* report = nullptr;
    REQUIRE(hrg_skeleton_validate(sk.get(), &ok, &report) == HRG_OK);
    CHECK(ok == 1);
    Json r = Json::parse(take(report));
    CHECK(r["ok"] == true);
    CHECK(r["flags"]["no_sources"] == true);

    char* out = nullptr;
    REQUIRE(hrg_skeleton_to_json(sk.get(), &out) == HRG_OK);
    std::string text = take(out);
    SkPtr again = parse_sk(text.c_str());
    char* out2 = nullptr;
    REQUIRE(hrg_skeleton_to_json(again.get(), &out2) == HRG_OK);
    CHECK(take(out2) == text);

    hrg_skeleton* bad = nullptr;
    CHECK(hrg_skeleton_parse("{", &bad) == HRG_ERR_PARSE);
    CHECK(std::string(hrg_last_error()).find("malformed") != std::string::npos);
    CHECK(hrg_skeleton_parse(nullptr, &bad) == HRG_ERR_BAD_ARGUMENT);
}

TEST_CASE("action handles parse, validate and serialize") {
    SkPtr sk = parse_sk(kO2);
    ActPtr a = parse_act(sk.get(), kSwap);
    int ok = 0;
    REQUIRE(hrg_action_validate(a.get(), &ok, nullptr) == HRG_OK);
    CHECK(ok == 1);

    char* out = nullptr;
    REQUIRE(hrg_action_to_json(a.get(), &out) == HRG_OK);
    std::string text = take(out);
    ActPtr again = parse_act(sk.get(), text.c_str());
    char* out2 = nullptr;
    REQUIRE(hrg_action_to_json(again.get(), &out2) == HRG_OK);
    CHECK(take(out2) == text);
}

TEST_CASE("path and mce queries") {
    SkPtr sk = parse_sk(kO2);
    const int deg2[] = {2};
    char* out = nullptr;
    REQUIRE(hrg_paths(sk.get(), "v", deg2, 1, &out) == HRG_OK);
    Json paths = Json::parse(take(out));
    CHECK(paths["count"] == 4);
    CHECK(paths["paths"][0]["degree"] == Json::array({2}));

    CHECK(hrg_paths(sk.get(), "v", deg2, 2, &out) == HRG_ERR_BAD_ARGUMENT);
    CHECK(hrg_paths(sk.get(), "ghost", deg2, 1, &out) == HRG_ERR_BAD_ARGUMENT);

    REQUIRE(hrg_mce(sk.get(), R"(["f1"])", R"(["f2"])", &out) == HRG_OK);
    CHECK(Json::parse(take(out))["count"] == 0);
    REQUIRE(hrg_mce(sk.get(), R"("v")", R"(["f1"])", &out) == HRG_OK);
    Json m = Json::parse(take(out));
    CHECK(m["count"] == 1);
    CHECK(m["entries"][0]["lambda"]["word"] == Json::array({"f1"}));
}

TEST_CASE("constructions through the C surface") {
    SkPtr sk = parse_sk(kO2);
    ActPtr a = parse_act(sk.get(), kSwap);

    hrg_skeleton* cp_raw = nullptr;
    REQUIRE(hrg_crossed_product(sk.get(), a.get(), &cp_raw) == HRG_OK);
    SkPtr cp(cp_raw);
    char* out = nullptr;
    REQUIRE(hrg_skeleton_to_json(cp.get(), &out) == HRG_OK);
    Json pj = Json::parse(take(out));
    CHECK(pj["k"] == 2);
    CHECK(pj["vertices"].size() == 1);
    CHECK(pj["edges"].size() == 3);

    // Recognition inverts the construction.
    const int colors[] = {2};
    hrg_skeleton* base_raw = nullptr;
    hrg_action* act_raw = nullptr;
    REQUIRE(hrg_recognize(cp.get(), colors, 1, &base_raw, &act_raw) == HRG_OK);
    SkPtr base(base_raw);
    ActPtr act(act_raw);
    REQUIRE(hrg_skeleton_to_json(base.get(), &out) == HRG_OK);
    CHECK(Json::parse(take(out))["edges"].size() == 2);
    REQUIRE(hrg_action_to_json(act.get(), &out) == HRG_OK);
    CHECK(Json::parse(take(out))["l"] == 1);

    // Skew product over the canonical cocycle window: color-2 edges step by -1.
    Json cocycle;
    cocycle["values"] = Json::object();
    for (const auto& e : pj["edges"])
        cocycle["values"][e["id"].get<std::string>()] =
            e["color"] == 2 ? Json::array({-1}) : Json::array({0});
    hrg_skeleton* skew_raw = nullptr;
    REQUIRE(hrg_skew_product(cp.get(), cocycle.dump().c_str(), 2, &skew_raw) == HRG_OK);
    SkPtr skew(skew_raw);
    REQUIRE(hrg_skeleton_to_json(skew.get(), &out) == HRG_OK);
    CHECK(Json::parse(take(out))["vertices"].size() == 5); // tags -2..2

    int holds = 0;
    REQUIRE(hrg_takai_check(sk.get(), a.get(), 2, &holds, nullptr) == HRG_OK);
    CHECK(holds == 1);
}

TEST_CASE("simplicity report through the C surface") {
    SkPtr sk = parse_sk(kO2);
    ActPtr a = parse_act(sk.get(), kSwap);
    char* out = nullptr;
    REQUIRE(hrg_simplicity(sk.get(), a.get(), 2, 4, &out) == HRG_OK);
    Json r = Json::parse(take(out));
    CHECK(r["verdict"] == "NotSimple");
    CHECK(r["cofinality"]["cofinal"] == true);
    CHECK(r["aperiodicity"]["state"] == "PeriodicPairFound");
    CHECK(r["aperiodicity"]["pair"]["n"] == Json::array({2}));
}

TEST_CASE("K-theory through the C surface") {
    SkPtr sk = parse_sk(kO2);
    ActPtr a = parse_act(sk.get(), kSwap);
    char* out = nullptr;

    REQUIRE(hrg_ktheory_graph(sk.get(), &out) == HRG_OK);
    Json g = Json::parse(take(out));
    CHECK(g["K0"]["rank"] == 0);
    CHECK(g["K0"]["torsion"].empty());
    CHECK(g["method"] == "graph");

    REQUIRE(hrg_ktheory_crossed(sk.get(), a.get(), "both", &out) == HRG_OK);
    Json c = Json::parse(take(out));
    CHECK(c["K0"]["rank"] == 0);
    CHECK(c["K0"]["torsion"].empty());
    CHECK(c["K1"]["torsion"].empty());
    CHECK(c["method"] == "both-agree");

    CHECK(hrg_ktheory_crossed(sk.get(), a.get(), "fft", &out) == HRG_ERR_BAD_ARGUMENT);

    // Inapplicable hypotheses surface as precondition failures.
    hrg_skeleton* cyc_raw = nullptr;
    hrg_action* rot_raw = nullptr;
    const int two[] = {2};
    REQUIRE(hrg_gallery("cycle_with_rotation", two, 1, &cyc_raw, &rot_raw) == HRG_OK);
    SkPtr cyc(cyc_raw);
    ActPtr rot(rot_raw);
    CHECK(hrg_ktheory_crossed(cyc.get(), rot.get(), "pv", &out) == HRG_ERR_PRECONDITION);
}

TEST_CASE("gallery dispatch") {
    char* out = nullptr;
    REQUIRE(hrg_gallery_names(&out) == HRG_OK);
    Json names = Json::parse(take(out));
    CHECK(names.contains("m_loops"));
    CHECK(names.contains("rank2_bratteli"));

    const int three[] = {3};
    hrg_skeleton* sk_raw = nullptr;
    hrg_action* a_raw = nullptr;
    REQUIRE(hrg_gallery("m_loops", three, 1, &sk_raw, &a_raw) == HRG_OK);
    SkPtr sk(sk_raw);
    ActPtr a(a_raw);
    REQUIRE(a != nullptr);
    REQUIRE(hrg_ktheory_crossed(sk.get(), a.get(), "both", &out) == HRG_OK);
    Json kg = Json::parse(take(out));
    CHECK(kg["K0"]["torsion"] == Json::array({2}));
    CHECK(kg["K1"]["torsion"] == Json::array({2}));

    const int window[] = {2, 2};
    hrg_skeleton* grid_raw = nullptr;
    hrg_action* none_raw = reinterpret_cast<hrg_action*>(1);
    REQUIRE(hrg_gallery("omega_window", window, 2, &grid_raw, &none_raw) == HRG_OK);
    SkPtr grid(grid_raw);
    CHECK(none_raw == nullptr);

    CHECK(hrg_gallery("nonesuch", nullptr, 0, &grid_raw, &none_raw) == HRG_ERR_BAD_ARGUMENT);
    CHECK(hrg_gallery("m_loops", window, 2, &grid_raw, &none_raw) == HRG_ERR_BAD_ARGUMENT);
    CHECK(std::string(hrg_version()).find('.') != std::string::npos);
}
