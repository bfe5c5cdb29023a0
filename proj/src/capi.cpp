#include "hrg.h"

#include <cstring>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hrg/constructions.hpp"
#include "hrg/dynamics.hpp"
#include "hrg/gallery.hpp"
#include "hrg/json_io.hpp"
#include "hrg/ktheory.hpp"

struct hrg_skeleton {
    std::shared_ptr<const hrg::Skeleton> p;
};

// Holds its skeleton alive so the two handles may be freed in either order.
struct hrg_action {
    std::shared_ptr<const hrg::Skeleton> keepalive;
    std::shared_ptr<const hrg::ZlAction> p;
};

namespace {

using Json = nlohmann::ordered_json;
using namespace hrg;

thread_local std::string g_last_error;

hrg_status status_of(Err e) {
    switch (e) {
        case Err::Parse:
            return HRG_ERR_PARSE;
        case Err::InvalidSkeleton:
        case Err::InvalidAction:
            return HRG_ERR_INVALID;
        case Err::NonSingletonDegree:
        case Err::BadCocycle:
        case Err::NoSources:
        case Err::NoSinks:
        case Err::RankUnsupported:
        case Err::Inapplicable:
            return HRG_ERR_PRECONDITION;
        case Err::Internal:
            return HRG_ERR_INTERNAL;
        default:
            return HRG_ERR_BAD_ARGUMENT;
    }
}

template <typename F>
hrg_status guarded(F&& body) {
    try {
        body();
        return HRG_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HRG_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require_arg(const void* p, const char* what) {
    if (!p) fail(Err::BadParameter, std::string(what) + " must not be null");
}

Json degree_json(const Degree& d) { return Json(d.c); }

Json path_json(const Path& p) {
    return Json{{"word", p.word_ids()},
                {"degree", degree_json(p.degree())},
                {"range", p.skeleton().vertex_id(p.range())},
                {"source", p.skeleton().vertex_id(p.source())}};
}

Json violations_json(const std::vector<Violation>& vs) {
    Json out = Json::array();
    for (const Violation& v : vs) out.push_back({{"kind", v.kind}, {"detail", v.detail}});
    return out;
}

Json validation_json(const ValidationReport& r) {
    return Json{{"ok", r.ok},
                {"violations", violations_json(r.violations)},
                {"flags",
                 {{"finitely_aligned", r.flags.finitely_aligned},
                  {"row_finite", r.flags.row_finite},
                  {"no_sources", r.flags.no_sources},
                  {"no_sinks", r.flags.no_sinks}}}};
}

Json group_json(const FGAbelianGroup& g) {
    Json torsion = Json::array();
    for (const BigInt& d : g.torsion) {
        if (d <= BigInt(std::numeric_limits<long long>::max()))
            torsion.push_back(d.convert_to<long long>());
        else
            torsion.push_back(d.str());
    }
    return Json{{"rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

Json kgroups_json(const KGroups& kg) {
    return Json{{"K0", group_json(kg.k0)}, {"K1", group_json(kg.k1)}, {"method", kg.method}};
}

const char* periodicity_name(Periodicity p) {
    switch (p) {
        case Periodicity::AperiodicWitnessed:
            return "AperiodicWitnessed";
        case Periodicity::PeriodicPairFound:
            return "PeriodicPairFound";
        default:
            return "UndecidedAtDepth";
    }
}

Json witness_json(const SeparationWitness& w) {
    return Json{{"at", w.vertex},
                {"p", degree_json(w.p)},
                {"q", degree_json(w.q)},
                {"path", w.path}};
}

Json pair_json(const PeriodicPair& p) {
    return Json{{"at", p.at},
                {"p", degree_json(p.p)},
                {"m", p.m},
                {"q", degree_json(p.q)},
                {"n", p.n},
                {"depth", p.depth}};
}

Json simplicity_json(const SimplicityReport& r) {
    Json aperiodicity{{"state", periodicity_name(r.aperiodicity.state)},
                      {"pair_bound", r.aperiodicity.pair_bound},
                      {"depth", r.aperiodicity.depth}};
    Json witnesses = Json::array();
    for (const SeparationWitness& w : r.aperiodicity.witnesses) witnesses.push_back(witness_json(w));
    aperiodicity["witnesses"] = std::move(witnesses);
    aperiodicity["pair"] = r.aperiodicity.pair ? pair_json(*r.aperiodicity.pair) : Json(nullptr);

    const char* verdict = r.verdict == Verdict::Simple      ? "Simple"
                          : r.verdict == Verdict::NotSimple ? "NotSimple"
                                                            : "Undecided";
    return Json{{"cofinality",
                 {{"cofinal", r.cofinality.cofinal},
                  {"failing_vertex", r.cofinality.failing_vertex},
                  {"stuck_vertices", r.cofinality.stuck_vertices}}},
                {"aperiodicity", std::move(aperiodicity)},
                {"verdict", verdict},
                {"notes", r.notes}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Path path_from_json(const Skeleton& sk, const char* text, const char* what) {
    Json j = Json::parse(std::string(text), nullptr, false);
    if (j.is_discarded()) fail(Err::Parse, std::string(what) + ": malformed JSON");
    if (j.is_string()) return Path::from_ids(sk, j.get<std::string>(), {});
    if (!j.is_array())
        fail(Err::Parse, std::string(what) + ": expected a vertex id or an array of edge ids");
    std::vector<std::string> ids;
    for (const Json& x : j) {
        if (!x.is_string()) fail(Err::Parse, std::string(what) + ": edge ids must be strings");
        ids.push_back(x.get<std::string>());
    }
    if (ids.empty()) fail(Err::Parse, std::string(what) + ": empty word has no range");
    return Path::from_ids(sk, "", ids);
}

} // namespace

extern "C" {

const char* hrg_version(void) { return "0.1.0"; }

const char* hrg_last_error(void) { return g_last_error.c_str(); }

void hrg_string_free(char* s) { delete[] s; }

hrg_status hrg_skeleton_parse(const char* json, hrg_skeleton** out) {
    return guarded([&] {
        require_arg(json, "json");
        require_arg(out, "out");
        auto sk = std::make_shared<const Skeleton>(skeleton_from_json(json));
        *out = new hrg_skeleton{std::move(sk)};
    });
}

void hrg_skeleton_free(hrg_skeleton* sk) { delete sk; }

hrg_status hrg_skeleton_to_json(const hrg_skeleton* sk, char** out) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(out, "out");
        *out = dup_string(skeleton_to_json(*sk->p));
    });
}

hrg_status hrg_skeleton_validate(const hrg_skeleton* sk, int* ok, char** report) {
    return guarded([&] {
        require_arg(sk, "sk");
        const ValidationReport& r = sk->p->validation();
        if (ok) *ok = r.ok ? 1 : 0;
        if (report) *report = dup_string(dump(validation_json(r)));
    });
}

hrg_status hrg_action_parse(const hrg_skeleton* sk, const char* json, hrg_action** out) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(json, "json");
        require_arg(out, "out");
        auto a = std::make_shared<const ZlAction>(action_from_json(*sk->p, json));
        *out = new hrg_action{sk->p, std::move(a)};
    });
}

void hrg_action_free(hrg_action* a) { delete a; }

hrg_status hrg_action_to_json(const hrg_action* a, char** out) {
    return guarded([&] {
        require_arg(a, "action");
        require_arg(out, "out");
        *out = dup_string(action_to_json(*a->p));
    });
}

hrg_status hrg_action_validate(const hrg_action* a, int* ok, char** report) {
    return guarded([&] {
        require_arg(a, "action");
        const ActionReport& r = a->p->validation();
        if (ok) *ok = r.ok ? 1 : 0;
        if (report)
            *report = dup_string(
                dump(Json{{"ok", r.ok}, {"violations", violations_json(r.violations)}}));
    });
}

hrg_status hrg_paths(const hrg_skeleton* sk, const char* vertex, const int* degree, int k,
                     char** out) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(vertex, "vertex");
        require_arg(out, "out");
        if (k != sk->p->k()) fail(Err::BadParameter, "degree length must equal k");
        require_arg(degree, "degree");
        Degree n(std::vector<int>(degree, degree + k));
        std::vector<Path> paths = enumerate_paths(*sk->p, std::string(vertex), n);
        Json jp = Json::array();
        for (const Path& p : paths) jp.push_back(path_json(p));
        *out = dup_string(
            dump(Json{{"count", static_cast<long long>(paths.size())}, {"paths", std::move(jp)}}));
    });
}

hrg_status hrg_mce(const hrg_skeleton* sk, const char* mu, const char* nu, char** out) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(mu, "mu");
        require_arg(nu, "nu");
        require_arg(out, "out");
        Path pm = path_from_json(*sk->p, mu, "mu");
        Path pn = path_from_json(*sk->p, nu, "nu");
        MceSet set = mce(pm, pn);
        Json entries = Json::array();
        for (const MceEntry& e : set.entries)
            entries.push_back({{"lambda", path_json(e.lambda)},
                               {"xi", path_json(e.xi)},
                               {"eta", path_json(e.eta)}});
        *out = dup_string(dump(Json{{"count", static_cast<long long>(set.size())},
                                    {"entries", std::move(entries)}}));
    });
}

hrg_status hrg_crossed_product(const hrg_skeleton* sk, const hrg_action* a, hrg_skeleton** out) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(a, "action");
        require_arg(out, "out");
        CrossedProductResult cp = crossed_product(*sk->p, *a->p);
        *out = new hrg_skeleton{std::shared_ptr<const Skeleton>(std::move(cp.skeleton))};
    });
}

hrg_status hrg_recognize(const hrg_skeleton* sk, const int* zl_colors, int n, hrg_skeleton** base,
                         hrg_action** action) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(base, "base");
        require_arg(action, "action");
        if (n < 0) fail(Err::BadParameter, "zl_colors count must be nonnegative");
        if (n > 0) require_arg(zl_colors, "zl_colors");
        RecognizeResult r = recognize(*sk->p, std::vector<int>(zl_colors, zl_colors + n));
        std::shared_ptr<const Skeleton> bp(std::move(r.base));
        *base = new hrg_skeleton{bp};
        *action = new hrg_action{bp, std::shared_ptr<const ZlAction>(std::move(r.action))};
    });
}

hrg_status hrg_skew_product(const hrg_skeleton* sk, const char* cocycle_json, int window,
                            hrg_skeleton** out) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(cocycle_json, "cocycle");
        require_arg(out, "out");
        Cocycle c = cocycle_from_json(cocycle_json);
        check_cocycle(*sk->p, c);
        SkewProductResult r = skew_product(*sk->p, c, window);
        *out = new hrg_skeleton{std::shared_ptr<const Skeleton>(std::move(r.skeleton))};
    });
}

hrg_status hrg_takai_check(const hrg_skeleton* sk, const hrg_action* a, int window, int* holds,
                           char** report) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(a, "action");
        TakaiReport r = takai_check(*sk->p, *a->p, window);
        if (holds) *holds = r.ok ? 1 : 0;
        if (report)
            *report = dup_string(dump(Json{{"ok", r.ok},
                                           {"first_failure", r.first_failure},
                                           {"cells_checked", r.cells_checked},
                                           {"products_checked", r.products_checked}}));
    });
}

hrg_status hrg_simplicity(const hrg_skeleton* sk, const hrg_action* a, int pair_bound, int depth,
                          char** report) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(a, "action");
        require_arg(report, "report");
        SimplicityReport r = simplicity(*sk->p, *a->p, pair_bound, depth);
        *report = dup_string(dump(simplicity_json(r)));
    });
}

hrg_status hrg_ktheory_graph(const hrg_skeleton* sk, char** out) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(out, "out");
        *out = dup_string(dump(kgroups_json(graph_k_groups(*sk->p))));
    });
}

hrg_status hrg_ktheory_crossed(const hrg_skeleton* sk, const hrg_action* a, const char* method,
                               char** out) {
    return guarded([&] {
        require_arg(sk, "sk");
        require_arg(a, "action");
        require_arg(method, "method");
        require_arg(out, "out");
        const std::string m(method);
        KGroups kg;
        if (m == "pv") {
            kg = crossed_k_groups_pv(*sk->p, *a->p);
        } else if (m == "orbits") {
            kg = crossed_k_groups_orbits(*sk->p, *a->p);
        } else if (m == "both") {
            kg = crossed_k_groups_pv(*sk->p, *a->p);
            KGroups other = crossed_k_groups_orbits(*sk->p, *a->p);
            if (!same_group(kg.k0, other.k0) || !same_group(kg.k1, other.k1))
                fail(Err::Internal, "pv and orbit K-groups disagree");
            kg.method = "both-agree";
        } else {
            fail(Err::BadParameter, "method must be pv, orbits or both");
        }
        *out = dup_string(dump(kgroups_json(kg)));
    });
}

hrg_status hrg_gallery_names(char** out) {
    return guarded([&] {
        require_arg(out, "out");
        Json j{{"m_loops", {"m"}},
               {"cycle_with_rotation", {"n"}},
               {"line_window_shift", {"radius", "step"}},
               {"omega_window", {"k", "n"}},
               {"delta_window", {"l", "w"}},
               {"rank2_bratteli", {"c_1..c_n", "levels"}}};
        *out = dup_string(dump(j));
    });
}

hrg_status hrg_gallery(const char* name, const int* params, int nparams, hrg_skeleton** sk,
                       hrg_action** action) {
    return guarded([&] {
        require_arg(name, "name");
        require_arg(sk, "sk");
        require_arg(action, "action");
        if (nparams < 0) fail(Err::BadParameter, "nparams must be nonnegative");
        if (nparams > 0) require_arg(params, "params");
        const std::string n(name);
        std::vector<int> ps(params, params + nparams);
        auto want = [&](int count) {
            if (nparams != count)
                fail(Err::BadParameter,
                     n + " takes " + std::to_string(count) + " integer parameter(s)");
        };
        GalleryInstance g;
        if (n == "m_loops") {
            want(1);
            g = m_loops(ps[0]);
        } else if (n == "cycle_with_rotation") {
            want(1);
            g = cycle_with_rotation(ps[0]);
        } else if (n == "line_window_shift") {
            want(2);
            g = line_window_shift(ps[0], ps[1]);
        } else if (n == "omega_window") {
            want(2);
            g = omega_window(ps[0], ps[1]);
        } else if (n == "delta_window") {
            want(2);
            g = delta_window(ps[0], ps[1]);
        } else if (n == "rank2_bratteli") {
            if (nparams < 2) fail(Err::BadParameter, "rank2_bratteli takes c_1..c_n and levels");
            g = rank2_bratteli(std::vector<int>(ps.begin(), ps.end() - 1), ps.back());
        } else {
            fail(Err::BadParameter, "unknown gallery name '" + n + "'");
        }
        std::shared_ptr<const Skeleton> sp(std::move(g.skeleton));
        *sk = new hrg_skeleton{sp};
        *action = g.action ? new hrg_action{sp, std::shared_ptr<const ZlAction>(std::move(g.action))}
                           : nullptr;
    });
}

} // extern "C"
