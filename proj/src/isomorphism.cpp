#include "hrg/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace hrg {

namespace {

struct Search {
    const Skeleton& a;
    const Skeleton& b;
    std::vector<int> vmap;      // a-vertex -> b-vertex
    std::vector<bool> vused;    // b-vertex taken
    std::vector<int> emap;      // a-edge -> b-edge
    std::vector<bool> eused;

    std::vector<std::vector<int>> profile_a, profile_b; // per-vertex color in/out counts

    Search(const Skeleton& sa, const Skeleton& sb) : a(sa), b(sb) {
        vmap.assign(a.vertex_count(), -1);
        vused.assign(b.vertex_count(), false);
        emap.assign(a.edge_count(), -1);
        eused.assign(b.edge_count(), false);
        profile_a = profiles(a);
        profile_b = profiles(b);
    }

    static std::vector<std::vector<int>> profiles(const Skeleton& sk) {
        std::vector<std::vector<int>> p(sk.vertex_count());
        for (int v = 0; v < sk.vertex_count(); ++v) {
            for (int c = 1; c <= sk.k(); ++c) {
                p[v].push_back(static_cast<int>(sk.out_edges(v, c).size()));
                p[v].push_back(static_cast<int>(sk.in_edges(v, c).size()));
            }
        }
        return p;
    }

    bool squares_match() const {
        for (const Square& sq : a.squares()) {
            int f = emap[a.edge_index(sq.first[0])];
            int g = emap[a.edge_index(sq.first[1])];
            int g2 = emap[a.edge_index(sq.second[0])];
            int f2 = emap[a.edge_index(sq.second[1])];
            int qi = b.square_of_first(f, g);
            if (qi < 0) return false;
            const Square& bq = b.squares()[qi];
            if (b.edge_index(bq.second[0]) != g2 || b.edge_index(bq.second[1]) != f2) return false;
        }
        return true;
    }

    bool assign_edges(int e) {
        if (e == a.edge_count()) return squares_match();
        const int r = vmap[a.range_of(e)];
        const int s = vmap[a.source_of(e)];
        for (int f = 0; f < b.edge_count(); ++f) {
            if (eused[f] || b.color_of(f) != a.color_of(e)) continue;
            if (b.range_of(f) != r || b.source_of(f) != s) continue;
            emap[e] = f;
            eused[f] = true;
            if (assign_edges(e + 1)) return true;
            eused[f] = false;
            emap[e] = -1;
        }
        return false;
    }

    bool assign_vertices(int v) {
        if (v == a.vertex_count()) return assign_edges(0);
        for (int w = 0; w < b.vertex_count(); ++w) {
            if (vused[w] || profile_a[v] != profile_b[w]) continue;
            vmap[v] = w;
            vused[w] = true;
            if (assign_vertices(v + 1)) return true;
            vused[w] = false;
            vmap[v] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<SkeletonIso> skeleton_isomorphic(const Skeleton& a, const Skeleton& b) {
    a.ensure_valid("skeleton_isomorphic");
    b.ensure_valid("skeleton_isomorphic");
    if (a.k() != b.k() || a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count() || a.squares().size() != b.squares().size())
        return std::nullopt;
    for (int c = 1; c <= a.k(); ++c) {
        auto count = [c](const Skeleton& sk) {
            int n = 0;
            for (const Edge& e : sk.edges()) n += e.color == c;
            return n;
        };
        if (count(a) != count(b)) return std::nullopt;
    }

    Search s(a, b);
    if (!s.assign_vertices(0)) return std::nullopt;
    SkeletonIso iso;
    for (int v = 0; v < a.vertex_count(); ++v) iso.vertex_map[a.vertex_id(v)] = b.vertex_id(s.vmap[v]);
    for (int e = 0; e < a.edge_count(); ++e) iso.edge_map[a.edge(e).id] = b.edge(s.emap[e]).id;
    return iso;
}

} // namespace hrg
