#include "hrg/gallery.hpp"

#include <array>

namespace hrg {

namespace {

std::string coords(const std::vector<int>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

std::vector<std::vector<int>> lattice_box(int dims, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(dims, lo);
    for (;;) {
        out.push_back(cur);
        int i = dims - 1;
        while (i >= 0 && cur[i] == hi) cur[i--] = lo;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

// Lattice-interval graph on box points: color-i edges t -> t+e_i with all
// commuting squares present when the corner stays inside.
GalleryInstance lattice_window(std::string name, int dims, int lo, int hi) {
    std::vector<std::vector<int>> pts = lattice_box(dims, lo, hi);
    auto inside = [&](const std::vector<int>& t) {
        for (int x : t)
            if (x < lo || x > hi) return false;
        return true;
    };
    auto edge_name = [&](const std::vector<int>& t, int i) {
        return coords(t) + "+e" + std::to_string(i);
    };

    std::vector<std::string> verts;
    for (const std::vector<int>& t : pts) verts.push_back(coords(t));

    std::vector<Edge> edges;
    for (int i = 1; i <= dims; ++i)
        for (const std::vector<int>& t : pts) {
            std::vector<int> s = t;
            s[i - 1] += 1;
            if (!inside(s)) continue;
            edges.push_back({edge_name(t, i), i, coords(t), coords(s)});
        }

    std::vector<Square> squares;
    for (int i = 1; i <= dims; ++i)
        for (int j = i + 1; j <= dims; ++j)
            for (const std::vector<int>& t : pts) {
                std::vector<int> ti = t, tj = t, tij = t;
                ti[i - 1] += 1;
                tj[j - 1] += 1;
                tij[i - 1] += 1;
                tij[j - 1] += 1;
                if (!inside(tij)) continue;
                squares.push_back({{edge_name(t, i), edge_name(ti, j)},
                                   {edge_name(t, j), edge_name(tj, i)}});
            }

    GalleryInstance g;
    g.name = std::move(name);
    g.skeleton =
        std::make_unique<Skeleton>(dims, std::move(verts), std::move(edges), std::move(squares));
    g.boundary_incomplete = true;
    g.note = "lattice interval window; boundary vertices are sources/sinks";
    return g;
}

} // namespace

GalleryInstance m_loops(int m) {
    if (m < 1) fail(Err::BadParameter, "m_loops needs m >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        edges.push_back({"f" + std::to_string(i), 1, "v", "v"});
    GalleryInstance g;
    g.name = "m_loops(" + std::to_string(m) + ")";
    g.skeleton = std::make_unique<Skeleton>(1, std::vector<std::string>{"v"}, std::move(edges),
                                            std::vector<Square>{});
    Automorphism a;
    a.vertex_map = {0};
    a.edge_map.resize(m);
    for (int i = 0; i < m; ++i) a.edge_map[i] = (i + 1) % m;
    g.action = std::make_unique<ZlAction>(*g.skeleton, std::vector<Automorphism>{a});
    g.note = "one vertex with " + std::to_string(m) + " loops; action cycles the loops";
    return g;
}

GalleryInstance cycle_with_rotation(int n) {
    if (n < 1) fail(Err::BadParameter, "cycle_with_rotation needs n >= 1");
    std::vector<std::string> verts;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        edges.push_back({"f" + std::to_string(i), 1, "v" + std::to_string(i),
                         "v" + std::to_string((i + 1) % n)});
    GalleryInstance g;
    g.name = "cycle_with_rotation(" + std::to_string(n) + ")";
    g.skeleton =
        std::make_unique<Skeleton>(1, std::move(verts), std::move(edges), std::vector<Square>{});
    Automorphism a;
    a.vertex_map.resize(n);
    a.edge_map.resize(n);
    for (int i = 0; i < n; ++i) {
        a.vertex_map[i] = (i + 1) % n;
        a.edge_map[i] = (i + 1) % n;
    }
    g.action = std::make_unique<ZlAction>(*g.skeleton, std::vector<Automorphism>{a});
    g.note = "directed " + std::to_string(n) + "-cycle with one-step rotation";
    return g;
}

GalleryInstance line_window_shift(int radius, int step) {
    if (radius < 1 || step < 1) fail(Err::BadParameter, "radius and step must be positive");
    auto v = [](int n) { return "v" + std::to_string(n); };
    std::vector<std::string> verts;
    for (int n = -radius; n <= radius; ++n) verts.push_back(v(n));
    std::vector<Edge> edges;
    for (int n = -radius; n < radius; ++n)
        edges.push_back({"f" + std::to_string(n), 1, v(n), v(n + 1)});
    for (int n = -radius + step; n <= radius; ++n)
        edges.push_back({"d" + std::to_string(n), 2, v(n), v(n - step)});
    std::vector<Square> squares;
    for (int n = -radius + step; n < radius; ++n)
        squares.push_back({{"f" + std::to_string(n), "d" + std::to_string(n + 1)},
                           {"d" + std::to_string(n), "f" + std::to_string(n - step)}});
    GalleryInstance g;
    g.name = "line_window_shift(" + std::to_string(radius) + "," + std::to_string(step) + ")";
    g.skeleton = std::make_unique<Skeleton>(2, std::move(verts), std::move(edges),
                                            std::move(squares));
    g.boundary_incomplete = true;
    g.note = "two-sided line with shift-by-" + std::to_string(step) +
             " dashed edges; outermost mixed pairs have no squares in any window";
    return g;
}

GalleryInstance omega_window(int k, int n) {
    if (k < 1 || n < 1) fail(Err::BadParameter, "k and n must be positive");
    return lattice_window("omega_window(" + std::to_string(k) + "," + std::to_string(n) + ")", k,
                          0, n);
}

GalleryInstance delta_window(int l, int w) {
    if (l < 1 || w < 1) fail(Err::BadParameter, "l and w must be positive");
    return lattice_window("delta_window(" + std::to_string(l) + "," + std::to_string(w) + ")", l,
                          -w, w);
}

GalleryInstance rank2_bratteli(const std::vector<int>& c, int levels) {
    if (c.empty() || levels < 1) fail(Err::BadParameter, "need entries and levels >= 1");
    for (int x : c)
        if (x < 1) fail(Err::BadParameter, "continued fraction entries must be positive");
    const long long needed = static_cast<long long>(levels) * (levels + 1) / 2;
    if (needed > static_cast<long long>(c.size()))
        fail(Err::BadParameter, "levels exceed the triangular coverage of the entries");

    using Mat = std::array<std::array<long long, 2>, 2>;
    auto mul = [](const Mat& a, const Mat& b) {
        Mat r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        return r;
    };
    std::vector<Mat> bundles;
    int idx = 0; // consumed entries, = T_{m-1}
    for (int m = 1; m <= levels; ++m) {
        Mat a{{{1, 0}, {0, 1}}};
        for (int t = 0; t < m; ++t) {
            Mat phi{{{c[idx], 1}, {1, 0}}};
            a = mul(a, phi);
            ++idx;
        }
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (a[i][j] > 100000) fail(Err::BadParameter, "bundle multiplicity too large");
        bundles.push_back(a);
    }

    auto v = [](int m, int i) { return "v" + std::to_string(m) + "_" + std::to_string(i); };
    std::vector<std::string> verts;
    for (int m = 0; m <= levels; ++m)
        for (int i = 1; i <= 2; ++i) verts.push_back(v(m, i));
    std::vector<Edge> edges;
    for (int m = 1; m <= levels; ++m)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (long long t = 0; t < bundles[m - 1][i - 1][j - 1]; ++t)
                    edges.push_back({"e" + std::to_string(m) + "_" + std::to_string(i) +
                                         std::to_string(j) + "_" + std::to_string(t),
                                     1, v(m - 1, i), v(m, j)});

    GalleryInstance g;
    g.name = "rank2_bratteli(" + std::to_string(levels) + ")";
    g.skeleton = std::make_unique<Skeleton>(1, std::move(verts), std::move(edges),
                                            std::vector<Square>{});
    Automorphism a;
    a.vertex_map.resize(g.skeleton->vertex_count());
    for (int i = 0; i < g.skeleton->vertex_count(); ++i) a.vertex_map[i] = i;
    a.edge_map.resize(g.skeleton->edge_count());
    {
        int e = 0;
        for (int m = 1; m <= levels; ++m)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    int sz = static_cast<int>(bundles[m - 1][i][j]);
                    for (int t = 0; t < sz; ++t) a.edge_map[e + t] = e + (t + 1) % sz;
                    e += sz;
                }
    }
    g.action = std::make_unique<ZlAction>(*g.skeleton, std::vector<Automorphism>{a});
    g.boundary_incomplete = true;
    g.note = "two-row Bratteli window; level 0 has sinks and the last level has sources; "
             "action cycles each parallel bundle";
    return g;
}

std::vector<GalleryInstance> action_instances() {
    std::vector<GalleryInstance> out;
    out.push_back(m_loops(2));
    out.push_back(m_loops(3));
    out.push_back(m_loops(4));
    out.push_back(cycle_with_rotation(2));
    out.push_back(cycle_with_rotation(3));
    out.push_back(rank2_bratteli({1, 1, 1, 1, 1, 1}, 3));
    return out;
}

} // namespace hrg
