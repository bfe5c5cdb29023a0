#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hrg.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitFalse = 1; // failed validation or false verdict
constexpr int kExitUsage = 2; // unreadable input, bad ids, usage errors

struct SkDel {
    void operator()(hrg_skeleton* p) const { hrg_skeleton_free(p); }
};
struct ActDel {
    void operator()(hrg_action* p) const { hrg_action_free(p); }
};
using SkPtr = std::unique_ptr<hrg_skeleton, SkDel>;
using ActPtr = std::unique_ptr<hrg_action, ActDel>;

int exit_code(hrg_status st) {
    switch (st) {
        case HRG_OK:
            return 0;
        case HRG_ERR_INVALID:
        case HRG_ERR_PRECONDITION:
            return kExitFalse;
        default:
            return kExitUsage;
    }
}

// Nonzero exit carried as an exception so cleanup stays scoped.
struct Bail {
    int code;
};

[[noreturn]] void bail_status(hrg_status st) {
    std::cerr << "error: " << hrg_last_error() << "\n";
    throw Bail{exit_code(st)};
}

void check(hrg_status st) {
    if (st != HRG_OK) bail_status(st);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    hrg_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        throw Bail{kExitUsage};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write '" << path << "'\n";
        throw Bail{kExitUsage};
    }
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

SkPtr load_skeleton(const std::string& path) {
    hrg_skeleton* sk = nullptr;
    check(hrg_skeleton_parse(read_file(path).c_str(), &sk));
    return SkPtr(sk);
}

ActPtr load_action(const hrg_skeleton* sk, const std::string& path) {
    hrg_action* a = nullptr;
    check(hrg_action_parse(sk, read_file(path).c_str(), &a));
    return ActPtr(a);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            std::cerr << "error: " << what << " expects comma-separated integers\n";
            throw Bail{kExitUsage};
        }
    }
    if (out.empty()) {
        std::cerr << "error: " << what << " must not be empty\n";
        throw Bail{kExitUsage};
    }
    return out;
}

// Path argument: "v:<vertex>" or a comma-separated edge-id word.
std::string path_arg_to_json(const std::string& arg) {
    if (arg.rfind("v:", 0) == 0) return Json(arg.substr(2)).dump();
    Json word = Json::array();
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) word.push_back(item);
    return word.dump();
}

std::string group_str(const Json& g) {
    const int rank = g.at("rank").get<int>();
    std::string out;
    if (rank == 1)
        out = "Z";
    else if (rank > 1)
        out = "Z^" + std::to_string(rank);
    for (const Json& d : g.at("torsion")) {
        if (!out.empty()) out += " (+) ";
        out += "Z/" + (d.is_string() ? d.get<std::string>() : std::to_string(d.get<long long>()));
    }
    return out.empty() ? "0" : out;
}

std::string path_str(const Json& p) {
    const Json& word = p.at("word");
    if (word.empty()) return p.at("range").get<std::string>();
    std::string out;
    for (const Json& e : word) {
        if (!out.empty()) out += ".";
        out += e.get<std::string>();
    }
    return out;
}

std::string skeleton_summary(const std::string& sk_json) {
    Json j = Json::parse(sk_json);
    std::ostringstream ss;
    ss << "k = " << j.at("k").get<int>() << ", " << j.at("vertices").size() << " vertices, "
       << j.at("edges").size() << " edges, " << j.at("squares").size() << " squares\n";
    return ss.str();
}

struct Common {
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "write output to a file instead of stdout");
}

int run(int argc, char** argv) {
    CLI::App app{"higher-rank graph toolkit"};
    app.require_subcommand(1);

    Common common;

    auto* validate = app.add_subcommand("validate", "check a skeleton file for permissibility");
    std::string sk_path;
    validate->add_option("skeleton", sk_path, "skeleton JSON file")->required();
    add_common(validate, common);

    auto* paths = app.add_subcommand("paths", "list paths of a given degree from a vertex");
    std::string paths_vertex, paths_degree;
    paths->add_option("skeleton", sk_path)->required();
    paths->add_option("-v,--vertex", paths_vertex, "range vertex id")->required();
    paths->add_option("-n,--degree", paths_degree, "degree, comma-separated")->required();
    add_common(paths, common);

    auto* mcecmd = app.add_subcommand("mce", "minimal common extensions of two paths");
    std::string mce_a, mce_b;
    mcecmd->add_option("skeleton", sk_path)->required();
    mcecmd->add_option("-a", mce_a, "first path: edge ids 'e1,e2' or 'v:<vertex>'")->required();
    mcecmd->add_option("-b", mce_b, "second path")->required();
    add_common(mcecmd, common);

    auto* crossprod = app.add_subcommand("crossprod", "crossed-product skeleton of an action");
    std::string act_path;
    crossprod->add_option("skeleton", sk_path)->required();
    crossprod->add_option("action", act_path, "action JSON file")->required();
    add_common(crossprod, common);

    auto* recog = app.add_subcommand("recognize", "factor a skeleton as a crossed product");
    std::string zl_colors, action_out;
    recog->add_option("skeleton", sk_path)->required();
    recog->add_option("--zl-colors", zl_colors, "designated colors, comma-separated")->required();
    recog->add_option("--action-out", action_out, "write the recovered action to a file");
    add_common(recog, common);

    auto* skew = app.add_subcommand("skew", "skew-product skeleton over a cocycle window");
    std::string cocycle_path;
    int window = 2;
    skew->add_option("skeleton", sk_path)->required();
    skew->add_option("cocycle", cocycle_path, "cocycle JSON file")->required();
    skew->add_option("--window", window, "box radius")->capture_default_str();
    add_common(skew, common);

    auto* takai = app.add_subcommand("takai", "windowed duality check for an action");
    takai->add_option("skeleton", sk_path)->required();
    takai->add_option("action", act_path)->required();
    takai->add_option("--window", window)->capture_default_str();
    add_common(takai, common);

    auto* simp = app.add_subcommand("simplicity", "cofinality and aperiodicity diagnostics");
    int pair_bound = 3, depth = 6;
    simp->add_option("skeleton", sk_path)->required();
    simp->add_option("action", act_path)->required();
    simp->add_option("--pair-bound", pair_bound)->capture_default_str();
    simp->add_option("--depth", depth)->capture_default_str();
    add_common(simp, common);

    auto* kth = app.add_subcommand("ktheory", "K-groups of the graph or crossed-product algebra");
    std::string method = "both";
    kth->add_option("skeleton", sk_path)->required();
    kth->add_option("action", act_path, "action JSON file (omit for the base graph)");
    kth->add_option("--method", method, "pv, orbits or both")
        ->check(CLI::IsMember({"pv", "orbits", "both"}))
        ->capture_default_str();
    add_common(kth, common);

    auto* gallery = app.add_subcommand("gallery", "emit a named example instance");
    std::string gallery_name;
    std::vector<int> gallery_params;
    gallery->add_option("name", gallery_name, "instance name; run with no name to list");
    gallery->add_option("params", gallery_params, "integer parameters");
    gallery->add_option("--action-out", action_out, "write the action to a file");
    add_common(gallery, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const bool text = common.format == "text";

    if (validate->parsed()) {
        SkPtr sk = load_skeleton(sk_path);
        int ok = 0;
        char* report = nullptr;
        check(hrg_skeleton_validate(sk.get(), &ok, &report));
        std::string rj = take(report);
        if (text) {
            Json j = Json::parse(rj);
            std::ostringstream ss;
            ss << (ok ? "ok" : "not ok") << "\n";
            for (const Json& v : j.at("violations"))
                ss << "  " << v.at("kind").get<std::string>() << ": "
                   << v.at("detail").get<std::string>() << "\n";
            const Json& f = j.at("flags");
            ss << std::boolalpha << "flags: finitely_aligned="
               << f.at("finitely_aligned").get<bool>() << " row_finite="
               << f.at("row_finite").get<bool>() << " no_sources=" << f.at("no_sources").get<bool>()
               << " no_sinks=" << f.at("no_sinks").get<bool>() << "\n";
            emit(common.out, ss.str());
        } else {
            emit(common.out, rj);
        }
        return ok ? 0 : kExitFalse;
    }

    if (paths->parsed()) {
        SkPtr sk = load_skeleton(sk_path);
        std::vector<int> degree = parse_int_list(paths_degree, "--degree");
        char* out = nullptr;
        check(hrg_paths(sk.get(), paths_vertex.c_str(), degree.data(),
                        static_cast<int>(degree.size()), &out));
        std::string rj = take(out);
        if (text) {
            Json j = Json::parse(rj);
            std::ostringstream ss;
            ss << j.at("count").get<long long>() << " path(s)\n";
            for (const Json& p : j.at("paths")) ss << "  " << path_str(p) << "\n";
            emit(common.out, ss.str());
        } else {
            emit(common.out, rj);
        }
        return 0;
    }

    if (mcecmd->parsed()) {
        SkPtr sk = load_skeleton(sk_path);
        char* out = nullptr;
        check(hrg_mce(sk.get(), path_arg_to_json(mce_a).c_str(), path_arg_to_json(mce_b).c_str(),
                      &out));
        std::string rj = take(out);
        if (text) {
            Json j = Json::parse(rj);
            std::ostringstream ss;
            ss << j.at("count").get<long long>() << " minimal common extension(s)\n";
            for (const Json& e : j.at("entries"))
                ss << "  " << path_str(e.at("lambda")) << "  (xi=" << path_str(e.at("xi"))
                   << ", eta=" << path_str(e.at("eta")) << ")\n";
            emit(common.out, ss.str());
        } else {
            emit(common.out, rj);
        }
        return 0;
    }

    if (crossprod->parsed()) {
        SkPtr sk = load_skeleton(sk_path);
        ActPtr a = load_action(sk.get(), act_path);
        hrg_skeleton* cp = nullptr;
        check(hrg_crossed_product(sk.get(), a.get(), &cp));
        SkPtr product(cp);
        char* out = nullptr;
        check(hrg_skeleton_to_json(product.get(), &out));
        std::string rj = take(out);
        emit(common.out, text ? skeleton_summary(rj) : rj);
        return 0;
    }

    if (recog->parsed()) {
        SkPtr sk = load_skeleton(sk_path);
        std::vector<int> colors = parse_int_list(zl_colors, "--zl-colors");
        hrg_skeleton* base_raw = nullptr;
        hrg_action* act_raw = nullptr;
        check(hrg_recognize(sk.get(), colors.data(), static_cast<int>(colors.size()), &base_raw,
                            &act_raw));
        SkPtr base(base_raw);
        ActPtr act(act_raw);
        char* bs = nullptr;
        check(hrg_skeleton_to_json(base.get(), &bs));
        std::string base_json = take(bs);
        char* as = nullptr;
        check(hrg_action_to_json(act.get(), &as));
        std::string act_json = take(as);
        if (!action_out.empty()) write_file(action_out, act_json);
        if (text) {
            emit(common.out, "base: " + skeleton_summary(base_json));
        } else if (!common.out.empty() || !action_out.empty()) {
            emit(common.out, base_json);
        } else {
            Json j;
            j["base"] = Json::parse(base_json);
            j["action"] = Json::parse(act_json);
            emit(common.out, j.dump(2) + "\n");
        }
        return 0;
    }

    if (skew->parsed()) {
        SkPtr sk = load_skeleton(sk_path);
        hrg_skeleton* out_raw = nullptr;
        check(hrg_skew_product(sk.get(), read_file(cocycle_path).c_str(), window, &out_raw));
        SkPtr product(out_raw);
        char* out = nullptr;
        check(hrg_skeleton_to_json(product.get(), &out));
        std::string rj = take(out);
        emit(common.out, text ? skeleton_summary(rj) : rj);
        return 0;
    }

    if (takai->parsed()) {
        SkPtr sk = load_skeleton(sk_path);
        ActPtr a = load_action(sk.get(), act_path);
        int holds = 0;
        char* report = nullptr;
        check(hrg_takai_check(sk.get(), a.get(), window, &holds, &report));
        std::string rj = take(report);
        if (text) {
            Json j = Json::parse(rj);
            std::ostringstream ss;
            if (holds)
                ss << "duality window check holds (" << j.at("cells_checked").get<long long>()
                   << " cells, " << j.at("products_checked").get<long long>() << " products)\n";
            else
                ss << "duality window check fails: " << j.at("first_failure").get<std::string>()
                   << "\n";
            emit(common.out, ss.str());
        } else {
            emit(common.out, rj);
        }
        return holds ? 0 : kExitFalse;
    }

    if (simp->parsed()) {
        SkPtr sk = load_skeleton(sk_path);
        ActPtr a = load_action(sk.get(), act_path);
        char* report = nullptr;
        check(hrg_simplicity(sk.get(), a.get(), pair_bound, depth, &report));
        std::string rj = take(report);
        Json j = Json::parse(rj);
        const std::string verdict = j.at("verdict").get<std::string>();
        if (text) {
            std::ostringstream ss;
            ss << "verdict: " << verdict << "\n";
            ss << "cofinal: " << (j.at("cofinality").at("cofinal").get<bool>() ? "yes" : "no")
               << "\n";
            ss << "aperiodicity: " << j.at("aperiodicity").at("state").get<std::string>() << " ("
               << j.at("aperiodicity").at("witnesses").size() << " witnesses)\n";
            if (!j.at("notes").get<std::string>().empty())
                ss << "note: " << j.at("notes").get<std::string>() << "\n";
            emit(common.out, ss.str());
        } else {
            emit(common.out, rj);
        }
        return verdict == "NotSimple" ? kExitFalse : 0;
    }

    if (kth->parsed()) {
        SkPtr sk = load_skeleton(sk_path);
        char* out = nullptr;
        if (act_path.empty()) {
            check(hrg_ktheory_graph(sk.get(), &out));
        } else {
            ActPtr a = load_action(sk.get(), act_path);
            check(hrg_ktheory_crossed(sk.get(), a.get(), method.c_str(), &out));
        }
        std::string rj = take(out);
        if (text) {
            Json j = Json::parse(rj);
            std::ostringstream ss;
            ss << "K0 = " << group_str(j.at("K0")) << "\n";
            ss << "K1 = " << group_str(j.at("K1")) << "\n";
            ss << "method: " << j.at("method").get<std::string>() << "\n";
            emit(common.out, ss.str());
        } else {
            emit(common.out, rj);
        }
        return 0;
    }

    if (gallery->parsed()) {
        if (gallery_name.empty()) {
            char* names = nullptr;
            check(hrg_gallery_names(&names));
            emit(common.out, take(names));
            return 0;
        }
        hrg_skeleton* sk_raw = nullptr;
        hrg_action* act_raw = nullptr;
        check(hrg_gallery(gallery_name.c_str(), gallery_params.data(),
                          static_cast<int>(gallery_params.size()), &sk_raw, &act_raw));
        SkPtr sk(sk_raw);
        ActPtr act(act_raw);
        char* ss = nullptr;
        check(hrg_skeleton_to_json(sk.get(), &ss));
        std::string sk_json = take(ss);
        std::string act_json;
        if (act) {
            char* as = nullptr;
            check(hrg_action_to_json(act.get(), &as));
            act_json = take(as);
        }
        if (!action_out.empty()) {
            if (act_json.empty()) {
                std::cerr << "error: '" << gallery_name << "' carries no action\n";
                throw Bail{kExitUsage};
            }
            write_file(action_out, act_json);
        }
        if (text) {
            emit(common.out, skeleton_summary(sk_json) +
                                 (act_json.empty() ? "no action\n" : "action attached\n"));
        } else if (!common.out.empty() || !action_out.empty()) {
            emit(common.out, sk_json);
        } else {
            Json j;
            j["skeleton"] = Json::parse(sk_json);
            j["action"] = act_json.empty() ? Json(nullptr) : Json::parse(act_json);
            emit(common.out, j.dump(2) + "\n");
        }
        return 0;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Bail& b) {
        return b.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
