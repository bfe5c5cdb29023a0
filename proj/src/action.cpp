#include "hrg/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hrg {

ZlAction::ZlAction(const Skeleton& sk, std::vector<Automorphism> generators)
    : sk_(&sk), gens_(std::move(generators)) {
    for (const Automorphism& g : gens_) {
        if (static_cast<int>(g.vertex_map.size()) != sk.vertex_count() ||
            static_cast<int>(g.edge_map.size()) != sk.edge_count())
            fail(Err::BadParameter, "automorphism map sizes do not match the skeleton");
    }
    validate_();
}

ZlAction ZlAction::identity(const Skeleton& sk, int l) {
    if (l < 0) fail(Err::BadParameter, "l must be nonnegative");
    Automorphism id;
    id.vertex_map.resize(sk.vertex_count());
    std::iota(id.vertex_map.begin(), id.vertex_map.end(), 0);
    id.edge_map.resize(sk.edge_count());
    std::iota(id.edge_map.begin(), id.edge_map.end(), 0);
    return ZlAction(sk, std::vector<Automorphism>(l, id));
}

const Automorphism& ZlAction::generator_inverse(int j) const {
    ensure_valid("generator_inverse");
    return invs_[j];
}

void ZlAction::ensure_valid(const char* op) const {
    if (!report_.ok)
        fail(Err::InvalidAction,
             std::string(op) + " requires a valid action; first violation: " +
                 report_.violations.front().kind + " " + report_.violations.front().detail);
}

namespace {

bool is_permutation(const std::vector<int>& m, int n) {
    std::vector<bool> seen(n, false);
    for (int x : m) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

std::vector<int> invert(const std::vector<int>& m) {
    std::vector<int> inv(m.size());
    for (size_t i = 0; i < m.size(); ++i) inv[m[i]] = static_cast<int>(i);
    return inv;
}

} // namespace

void ZlAction::validate_() {
    const Skeleton& sk = *sk_;
    auto add = [&](const char* kind, std::string detail) {
        report_.violations.push_back({kind, std::move(detail)});
    };
    if (!sk.ok()) add("InvalidSkeleton", "underlying skeleton fails validation");

    for (int j = 0; j < l(); ++j) {
        const Automorphism& g = gens_[j];
        std::string tag = "generator " + std::to_string(j + 1);
        bool resolved = true;
        for (int v = 0; v < sk.vertex_count(); ++v)
            if (g.vertex_map[v] < 0) {
                add("DanglingEdge", tag + " has no image for vertex " + sk.vertex_id(v));
                resolved = false;
            }
        for (int e = 0; e < sk.edge_count(); ++e)
            if (g.edge_map[e] < 0) {
                add("DanglingEdge", tag + " has no image for edge " + sk.edge(e).id);
                resolved = false;
            }
        if (!resolved) continue;
        bool bij = is_permutation(g.vertex_map, sk.vertex_count()) &&
                   is_permutation(g.edge_map, sk.edge_count());
        if (!bij) {
            add("NotBijective", tag + " is not a bijection");
            continue;
        }
        for (int e = 0; e < sk.edge_count(); ++e) {
            int img = g.edge_map[e];
            if (sk.color_of(img) != sk.color_of(e))
                add("ColorBroken", tag + " recolors edge " + sk.edge(e).id);
            if (sk.range_of(img) != g.vertex_map[sk.range_of(e)] ||
                sk.source_of(img) != g.vertex_map[sk.source_of(e)])
                add("EquivarianceBroken", tag + " breaks r/s at edge " + sk.edge(e).id);
        }
        for (const Square& sq : sk.squares()) {
            int f = g.edge_map[sk.edge_index(sq.first[0])];
            int gg = g.edge_map[sk.edge_index(sq.first[1])];
            int g2 = g.edge_map[sk.edge_index(sq.second[0])];
            int f2 = g.edge_map[sk.edge_index(sq.second[1])];
            int qi = sk.square_of_first(f, gg);
            bool okq = qi >= 0;
            if (okq) {
                const Square& bq = sk.squares()[qi];
                okq = sk.edge_index(bq.second[0]) == g2 && sk.edge_index(bq.second[1]) == f2;
            }
            if (!okq)
                add("SquareBroken", tag + " maps square (" + sq.first[0] + "," + sq.first[1] +
                                        ") outside the square list");
        }
    }

    if (report_.violations.empty()) {
        for (int i = 0; i < l(); ++i) {
            for (int j = i + 1; j < l(); ++j) {
                const Automorphism &a = gens_[i], &b = gens_[j];
                for (int v = 0; v < sk.vertex_count(); ++v)
                    if (a.vertex_map[b.vertex_map[v]] != b.vertex_map[a.vertex_map[v]]) {
                        add("NonCommuting", "generators " + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + " disagree at vertex " +
                                                sk.vertex_id(v));
                        break;
                    }
                for (int e = 0; e < sk.edge_count(); ++e)
                    if (a.edge_map[b.edge_map[e]] != b.edge_map[a.edge_map[e]]) {
                        add("NonCommuting", "generators " + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + " disagree at edge " +
                                                sk.edge(e).id);
                        break;
                    }
            }
        }
    }

    report_.ok = report_.violations.empty();
    if (report_.ok) {
        invs_.reserve(gens_.size());
        for (const Automorphism& g : gens_)
            invs_.push_back({invert(g.vertex_map), invert(g.edge_map)});
    }
}

int ZlAction::apply_vertex(const std::vector<int>& m, int v) const {
    ensure_valid("apply");
    if (static_cast<int>(m.size()) != l()) fail(Err::BadParameter, "exponent length != l");
    for (int j = 0; j < l(); ++j) {
        const std::vector<int>& step = m[j] >= 0 ? gens_[j].vertex_map : invs_[j].vertex_map;
        for (int t = 0; t < std::abs(m[j]); ++t) v = step[v];
    }
    return v;
}

int ZlAction::apply_edge(const std::vector<int>& m, int e) const {
    ensure_valid("apply");
    if (static_cast<int>(m.size()) != l()) fail(Err::BadParameter, "exponent length != l");
    for (int j = 0; j < l(); ++j) {
        const std::vector<int>& step = m[j] >= 0 ? gens_[j].edge_map : invs_[j].edge_map;
        for (int t = 0; t < std::abs(m[j]); ++t) e = step[e];
    }
    return e;
}

Path ZlAction::apply(const std::vector<int>& m, const Path& p) const {
    if (p.skeleton_ptr() != sk_) fail(Err::SkeletonMismatch, "path lives in another skeleton");
    if (p.is_vertex()) return Path(*sk_, apply_vertex(m, p.range()));
    // Automorphisms preserve colors and composition, so the image word of a
    // normal form is again a normal form.
    std::vector<int> w;
    w.reserve(p.word().size());
    for (int e : p.word()) w.push_back(apply_edge(m, e));
    return Path(*sk_, std::move(w));
}

std::vector<int> ZlAction::vertex_orbit(int v) const {
    ensure_valid("vertex_orbit");
    if (v < 0 || v >= sk_->vertex_count())
        fail(Err::UnknownVertex, "vertex index " + std::to_string(v));
    std::set<int> seen{v};
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int j = 0; j < l(); ++j) {
            for (int nxt : {gens_[j].vertex_map[cur], invs_[j].vertex_map[cur]}) {
                if (seen.insert(nxt).second) stack.push_back(nxt);
            }
        }
    }
    return std::vector<int>(seen.begin(), seen.end());
}

long long ZlAction::action_order() const {
    ensure_valid("action_order");
    auto perm_order = [](const std::vector<int>& p) {
        long long ord = 1;
        std::vector<bool> seen(p.size(), false);
        for (size_t i = 0; i < p.size(); ++i) {
            if (seen[i]) continue;
            long long len = 0;
            for (size_t j = i; !seen[j]; j = p[j]) {
                seen[j] = true;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    };
    long long ord = 1;
    for (const Automorphism& g : gens_) {
        ord = std::lcm(ord, perm_order(g.vertex_map));
        ord = std::lcm(ord, perm_order(g.edge_map));
    }
    return ord;
}

const ActionReport& validate_action(const Skeleton& sk, const ZlAction& a) {
    if (a.skeleton_ptr() != &sk) fail(Err::SkeletonMismatch, "action belongs to another skeleton");
    return a.validation();
}

} // namespace hrg
