#include "hrg/constructions.hpp"

#include <algorithm>
#include <set>

namespace hrg {

namespace {

std::string tag_str(const std::vector<int>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

bool in_box(const std::vector<int>& t, int w) {
    for (int x : t)
        if (x < -w || x > w) return false;
    return true;
}

std::vector<int> shifted(const std::vector<int>& t, const std::vector<int>& d) {
    std::vector<int> r(t.size());
    for (size_t i = 0; i < t.size(); ++i) r[i] = t[i] + d[i];
    return r;
}

// All points of [-w,w]^l in lexicographic order.
std::vector<std::vector<int>> box_tags(int l, int w) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(l, -w);
    for (;;) {
        out.push_back(cur);
        int i = l - 1;
        while (i >= 0 && cur[i] == w) cur[i--] = -w;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

std::string cp_vertex(const std::string& v) { return "(" + v + ",0)"; }
std::string cp_base(const std::string& f) { return "(" + f + ",0)"; }
std::string cp_des(const std::string& v, int j) {
    return "(" + v + ",e" + std::to_string(j) + ")";
}

} // namespace

CrossedProductResult crossed_product(const Skeleton& sk, const ZlAction& a) {
    if (a.skeleton_ptr() != &sk) fail(Err::SkeletonMismatch, "action acts on a different skeleton");
    sk.ensure_valid("crossed_product");
    a.ensure_valid("crossed_product");
    const int k = sk.k(), l = a.l(), V = sk.vertex_count(), E = sk.edge_count();

    std::vector<std::string> verts;
    verts.reserve(V);
    for (const std::string& v : sk.vertices()) verts.push_back(cp_vertex(v));

    std::vector<Edge> edges;
    edges.reserve(E + static_cast<size_t>(l) * V);
    for (const Edge& e : sk.edges())
        edges.push_back({cp_base(e.id), e.color, cp_vertex(e.range), cp_vertex(e.source)});
    for (int j = 0; j < l; ++j) {
        const std::vector<int>& inv = a.generator_inverse(j).vertex_map;
        for (int v = 0; v < V; ++v)
            edges.push_back({cp_des(sk.vertex_id(v), j + 1), k + j + 1,
                             cp_vertex(sk.vertex_id(v)), cp_vertex(sk.vertex_id(inv[v]))});
    }

    std::set<std::string> names(verts.begin(), verts.end());
    for (const Edge& e : edges)
        if (!names.insert(e.id).second) fail(Err::Internal, "name collision at " + e.id);

    std::vector<Square> squares;
    for (const Square& q : sk.squares())
        squares.push_back({{cp_base(q.first[0]), cp_base(q.first[1])},
                           {cp_base(q.second[0]), cp_base(q.second[1])}});
    // (f,0)(s(f),e_j) = (r(f),e_j)(alpha_{e_j}^{-1}(f),0)
    for (int j = 0; j < l; ++j) {
        const Automorphism& inv = a.generator_inverse(j);
        for (int f = 0; f < E; ++f)
            squares.push_back(
                {{cp_base(sk.edge(f).id), cp_des(sk.vertex_id(sk.source_of(f)), j + 1)},
                 {cp_des(sk.vertex_id(sk.range_of(f)), j + 1),
                  cp_base(sk.edge(inv.edge_map[f]).id)}});
    }
    // (v,e_i)(alpha_{e_i}^{-1}(v),e_j) = (v,e_j)(alpha_{e_j}^{-1}(v),e_i), i < j
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            const std::vector<int>& invi = a.generator_inverse(i).vertex_map;
            const std::vector<int>& invj = a.generator_inverse(j).vertex_map;
            for (int v = 0; v < V; ++v)
                squares.push_back(
                    {{cp_des(sk.vertex_id(v), i + 1), cp_des(sk.vertex_id(invi[v]), j + 1)},
                     {cp_des(sk.vertex_id(v), j + 1), cp_des(sk.vertex_id(invj[v]), i + 1)}});
        }

    CrossedProductResult res;
    res.skeleton =
        std::make_unique<Skeleton>(k + l, std::move(verts), std::move(edges), std::move(squares));
    res.base = &sk;
    res.l = l;
    if (!res.skeleton->ok())
        fail(Err::Internal, "crossed product fails validation: " +
                                res.skeleton->validation().violations.front().kind + " " +
                                res.skeleton->validation().violations.front().detail);
    res.base_edge.resize(E);
    res.edge_to_base.assign(E + static_cast<size_t>(l) * V, -1);
    res.edge_designated.assign(E + static_cast<size_t>(l) * V, {-1, -1});
    for (int e = 0; e < E; ++e) {
        res.base_edge[e] = e;
        res.edge_to_base[e] = e;
    }
    res.designated.assign(l, std::vector<int>(V));
    for (int j = 0; j < l; ++j)
        for (int v = 0; v < V; ++v) {
            res.designated[j][v] = E + j * V + v;
            res.edge_designated[E + j * V + v] = {j, v};
        }
    return res;
}

Path CrossedProductResult::embed(const Path& lambda, const Degree& m) const {
    if (lambda.skeleton_ptr() != base) fail(Err::SkeletonMismatch, "path lives in another skeleton");
    if (m.dim() != l) fail(Err::BadParameter, "exponent dimension != l");
    for (int x : m.c)
        if (x < 0) fail(Err::DegreeOutOfRange, "negative Z^l exponent");
    std::vector<int> w;
    w.reserve(lambda.word().size() + m.sum());
    for (int e : lambda.word()) w.push_back(base_edge[e]);
    int v = lambda.source(); // base and product vertex indices coincide
    for (int j = 0; j < l; ++j)
        for (int t = 0; t < m[j]; ++t) {
            int e = designated[j][v];
            w.push_back(e);
            v = skeleton->source_of(e);
        }
    if (w.empty()) return Path(*skeleton, lambda.range());
    return Path(*skeleton, std::move(w));
}

std::pair<Path, Degree> CrossedProductResult::project(const Path& p) const {
    if (p.skeleton_ptr() != skeleton.get())
        fail(Err::SkeletonMismatch, "path does not live in the product");
    const int k = base->k();
    std::vector<int> bw;
    Degree m = Degree::zero(l);
    for (int e : p.word()) {
        int c = skeleton->color_of(e);
        if (c <= k)
            bw.push_back(edge_to_base[e]);
        else
            m.c[c - k - 1] += 1;
    }
    Path lam = bw.empty() ? Path(*base, p.range()) : Path(*base, std::move(bw));
    return {std::move(lam), std::move(m)};
}

MceCheckReport mce_relationship_check(const Skeleton& sk, const ZlAction& a,
                                      const Degree& path_bound, const Degree& zl_bound) {
    if (path_bound.dim() != sk.k()) fail(Err::BadParameter, "path bound dimension != k");
    if (zl_bound.dim() != a.l()) fail(Err::BadParameter, "exponent bound dimension != l");
    CrossedProductResult cp = crossed_product(sk, a);

    std::vector<Path> pool;
    for (int v = 0; v < sk.vertex_count(); ++v)
        for (const Degree& p : degrees_upto(path_bound))
            for (Path& q : enumerate_paths(sk, v, p)) pool.push_back(std::move(q));
    std::vector<Degree> exps = degrees_upto(zl_bound);

    MceCheckReport rep;
    for (const Path& mu : pool)
        for (const Path& nu : pool)
            for (const Degree& m : exps)
                for (const Degree& n : exps) {
                    MceSet lhs = mce(cp.embed(mu, m), cp.embed(nu, n));
                    MceSet bs = mce(mu, nu);
                    Degree mn = join(m, n);
                    std::vector<Path> rhs;
                    rhs.reserve(bs.size());
                    for (const MceEntry& e : bs.entries) rhs.push_back(cp.embed(e.lambda, mn));
                    std::sort(rhs.begin(), rhs.end(), path_less);
                    ++rep.pairs_checked;
                    bool same = lhs.size() == rhs.size();
                    for (size_t i = 0; same && i < rhs.size(); ++i)
                        same = lhs.entries[i].lambda == rhs[i];
                    if (!same) {
                        rep.ok = false;
                        rep.counterexample = "mu=" + mu.to_string() + " m=" + m.to_string() +
                                             " nu=" + nu.to_string() + " n=" + n.to_string();
                        return rep;
                    }
                }
    return rep;
}

RecognizeResult recognize(const Skeleton& sk, const std::vector<int>& zl_colors) {
    sk.ensure_valid("recognize");
    std::vector<int> des = zl_colors;
    std::sort(des.begin(), des.end());
    if (des.empty()) fail(Err::BadParameter, "no designated colors");
    if (std::adjacent_find(des.begin(), des.end()) != des.end())
        fail(Err::BadParameter, "repeated designated color");
    const int K = sk.k(), l = static_cast<int>(des.size()), k = K - l;
    if (des.front() < 1 || des.back() > K) fail(Err::BadParameter, "designated color out of range");
    if (k < 1) fail(Err::BadParameter, "no base colors left");
    std::vector<bool> is_des(K + 1, false);
    for (int c : des) is_des[c] = true;

    for (int v = 0; v < sk.vertex_count(); ++v)
        for (int c : des)
            if (sk.out_edges(v, c).size() != 1 || sk.in_edges(v, c).size() != 1)
                fail(Err::NonSingletonDegree, "vertex " + sk.vertex_id(v) + " color " +
                                                  std::to_string(c) +
                                                  " does not have in/out degree one");

    std::vector<int> new_color(K + 1, 0);
    int nc = 0;
    for (int c = 1; c <= K; ++c)
        if (!is_des[c]) new_color[c] = ++nc;

    std::vector<Edge> bedges;
    std::vector<int> base_of(sk.edge_count(), -1), sk_of;
    for (int e = 0; e < sk.edge_count(); ++e) {
        const Edge& ed = sk.edge(e);
        if (is_des[ed.color]) continue;
        base_of[e] = static_cast<int>(bedges.size());
        sk_of.push_back(e);
        bedges.push_back({ed.id, new_color[ed.color], ed.range, ed.source});
    }
    std::vector<Square> bsq;
    for (const Square& q : sk.squares()) {
        bool keep = true;
        for (const std::string& id : {q.first[0], q.first[1], q.second[0], q.second[1]})
            if (is_des[sk.edge(sk.require_edge(id)).color]) keep = false;
        if (keep) bsq.push_back(q);
    }
    auto base = std::make_unique<Skeleton>(k, sk.vertices(), std::move(bedges), std::move(bsq));
    if (!base->ok())
        fail(Err::Inapplicable, "restriction to the non-designated colors fails validation");

    std::vector<Automorphism> gens;
    for (int c : des) {
        Automorphism g;
        g.vertex_map.resize(sk.vertex_count());
        g.edge_map.resize(sk_of.size());
        for (int v = 0; v < sk.vertex_count(); ++v)
            g.vertex_map[v] = sk.range_of(sk.in_edges(v, c)[0]);
        for (size_t b = 0; b < sk_of.size(); ++b) {
            int f = sk_of[b];
            int eta = sk.in_edges(sk.range_of(f), c)[0];
            std::pair<int, int> sw = sk.swap_pair(eta, f);
            if (base_of[sw.first] < 0) fail(Err::Internal, "swap image has a designated color");
            g.edge_map[b] = base_of[sw.first];
        }
        gens.push_back(std::move(g));
    }
    auto action = std::make_unique<ZlAction>(*base, std::move(gens));
    if (!action->ok())
        fail(Err::Inapplicable, "recovered generators are not an action: " +
                                    action->validation().violations.front().kind + " " +
                                    action->validation().violations.front().detail);

    // Round trip against the input recolored so the designated colors sit on
    // top; squares whose sides change order under the recoloring flip sides.
    std::vector<int> full_color(K + 1, 0);
    for (int c = 1; c <= K; ++c) full_color[c] = new_color[c];
    for (int j = 0; j < l; ++j) full_color[des[j]] = k + j + 1;
    std::vector<Edge> redges;
    for (const Edge& ed : sk.edges())
        redges.push_back({ed.id, full_color[ed.color], ed.range, ed.source});
    std::vector<Square> rsq;
    for (const Square& q : sk.squares()) {
        int c0 = full_color[sk.edge(sk.require_edge(q.first[0])).color];
        int c1 = full_color[sk.edge(sk.require_edge(q.first[1])).color];
        if (c0 < c1)
            rsq.push_back(q);
        else
            rsq.push_back({q.second, q.first});
    }
    Skeleton recolored(K, sk.vertices(), std::move(redges), std::move(rsq));

    CrossedProductResult rebuilt = crossed_product(*base, *action);
    std::optional<SkeletonIso> iso = skeleton_isomorphic(*rebuilt.skeleton, recolored);
    if (!iso)
        fail(Err::Inapplicable, "skeleton is not a crossed product over the designated colors");

    RecognizeResult res;
    res.base = std::move(base);
    res.action = std::move(action);
    res.round_trip = std::move(*iso);
    return res;
}

void check_cocycle(const Skeleton& sk, const Cocycle& c) {
    if (c.l < 0) fail(Err::BadCocycle, "negative dimension");
    for (const auto& [id, val] : c.values) {
        if (sk.edge_index(id) < 0) fail(Err::BadCocycle, "value for unknown edge " + id);
        if (static_cast<int>(val.size()) != c.l)
            fail(Err::BadCocycle, "value dimension mismatch at edge " + id);
    }
    for (const Edge& e : sk.edges())
        if (!c.values.count(e.id)) fail(Err::BadCocycle, "missing value for edge " + e.id);
    for (const Square& q : sk.squares()) {
        std::vector<int> lhs = shifted(c.values.at(q.first[0]), c.values.at(q.first[1]));
        std::vector<int> rhs = shifted(c.values.at(q.second[0]), c.values.at(q.second[1]));
        if (lhs != rhs)
            fail(Err::BadCocycle,
                 "square (" + q.first[0] + "," + q.first[1] + ") does not balance");
    }
}

Cocycle canonical_cocycle(const CrossedProductResult& cp) {
    Cocycle c;
    c.l = cp.l;
    for (int e = 0; e < cp.skeleton->edge_count(); ++e) {
        std::vector<int> val(cp.l, 0);
        if (cp.edge_to_base[e] < 0) val[cp.edge_designated[e].first] = -1;
        c.values[cp.skeleton->edge(e).id] = std::move(val);
    }
    return c;
}

SkewProductResult skew_product(const Skeleton& sk, const Cocycle& c, int window) {
    if (window < 0) fail(Err::BadParameter, "window must be nonnegative");
    check_cocycle(sk, c);
    const int l = c.l;
    std::vector<std::vector<int>> tags = box_tags(l, window);
    std::vector<const std::vector<int>*> cval(sk.edge_count());
    for (int e = 0; e < sk.edge_count(); ++e) cval[e] = &c.values.at(sk.edge(e).id);

    SkewProductResult res;
    res.base = &sk;
    res.l = l;
    res.window = window;

    std::vector<std::string> verts;
    for (int v = 0; v < sk.vertex_count(); ++v)
        for (const std::vector<int>& t : tags) {
            verts.push_back(sk.vertex_id(v) + "@" + tag_str(t));
            res.vertex_cell.push_back({v, t});
        }

    std::vector<Edge> edges;
    for (int e = 0; e < sk.edge_count(); ++e)
        for (const std::vector<int>& t : tags) {
            std::vector<int> rt = shifted(*cval[e], t);
            if (!in_box(rt, window)) continue;
            const Edge& ed = sk.edge(e);
            edges.push_back({ed.id + "@" + tag_str(t), ed.color, ed.range + "@" + tag_str(rt),
                             ed.source + "@" + tag_str(t)});
            res.edge_cell.push_back({e, t});
        }

    std::vector<Square> squares;
    for (const Square& q : sk.squares()) {
        int f = sk.require_edge(q.first[0]), g = sk.require_edge(q.first[1]);
        int f2 = sk.require_edge(q.second[1]);
        for (const std::vector<int>& t : tags) {
            std::vector<int> tg = shifted(*cval[g], t);        // tag of f, range tag of g
            std::vector<int> tf2 = shifted(*cval[f2], t);      // tag of g2, range tag of f2
            std::vector<int> top = shifted(*cval[f], tg);      // common range tag
            if (!in_box(tg, window) || !in_box(tf2, window) || !in_box(top, window)) continue;
            squares.push_back({{q.first[0] + "@" + tag_str(tg), q.first[1] + "@" + tag_str(t)},
                               {q.second[0] + "@" + tag_str(tf2), q.second[1] + "@" + tag_str(t)}});
        }
    }

    res.skeleton =
        std::make_unique<Skeleton>(sk.k(), std::move(verts), std::move(edges), std::move(squares));
    return res;
}

int SkewProductResult::vertex_at(int base_vertex, const std::vector<int>& tag) const {
    return skeleton->vertex_index(base->vertex_id(base_vertex) + "@" + tag_str(tag));
}

int SkewProductResult::edge_at(int base_edge, const std::vector<int>& tag) const {
    return skeleton->edge_index(base->edge(base_edge).id + "@" + tag_str(tag));
}

CartesianDeltaResult cartesian_with_delta(const Skeleton& sk, int l, int window) {
    sk.ensure_valid("cartesian_with_delta");
    if (l < 0 || window < 0) fail(Err::BadParameter, "l and window must be nonnegative");
    const int k = sk.k();
    std::vector<std::vector<int>> tags = box_tags(l, window);

    auto vert_name = [&](int v, const std::vector<int>& t) {
        return sk.vertex_id(v) + "@" + tag_str(t);
    };
    auto vertical_name = [&](int v, int j, const std::vector<int>& t) {
        return sk.vertex_id(v) + "@" + tag_str(t) + "+e" + std::to_string(j);
    };

    std::vector<std::string> verts;
    for (int v = 0; v < sk.vertex_count(); ++v)
        for (const std::vector<int>& t : tags) verts.push_back(vert_name(v, t));

    std::vector<Edge> edges;
    for (int e = 0; e < sk.edge_count(); ++e)
        for (const std::vector<int>& t : tags) {
            const Edge& ed = sk.edge(e);
            edges.push_back({ed.id + "@" + tag_str(t), ed.color, ed.range + "@" + tag_str(t),
                             ed.source + "@" + tag_str(t)});
        }
    for (int j = 1; j <= l; ++j)
        for (int v = 0; v < sk.vertex_count(); ++v)
            for (const std::vector<int>& t : tags) {
                std::vector<int> s = t;
                s[j - 1] += 1;
                if (!in_box(s, window)) continue;
                edges.push_back({vertical_name(v, j, t), k + j, vert_name(v, t), vert_name(v, s)});
            }

    std::vector<Square> squares;
    for (const Square& q : sk.squares())
        for (const std::vector<int>& t : tags)
            squares.push_back({{q.first[0] + "@" + tag_str(t), q.first[1] + "@" + tag_str(t)},
                               {q.second[0] + "@" + tag_str(t), q.second[1] + "@" + tag_str(t)}});
    for (int e = 0; e < sk.edge_count(); ++e)
        for (int j = 1; j <= l; ++j)
            for (const std::vector<int>& t : tags) {
                std::vector<int> s = t;
                s[j - 1] += 1;
                if (!in_box(s, window)) continue;
                const Edge& ed = sk.edge(e);
                squares.push_back({{ed.id + "@" + tag_str(t),
                                    vertical_name(sk.source_of(e), j, t)},
                                   {vertical_name(sk.range_of(e), j, t),
                                    ed.id + "@" + tag_str(s)}});
            }
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            for (int v = 0; v < sk.vertex_count(); ++v)
                for (const std::vector<int>& t : tags) {
                    std::vector<int> ti = t, tj = t, tij = t;
                    ti[i - 1] += 1;
                    tj[j - 1] += 1;
                    tij[i - 1] += 1;
                    tij[j - 1] += 1;
                    if (!in_box(ti, window) || !in_box(tj, window) || !in_box(tij, window))
                        continue;
                    squares.push_back({{vertical_name(v, i, t), vertical_name(v, j, ti)},
                                       {vertical_name(v, j, t), vertical_name(v, i, tj)}});
                }

    CartesianDeltaResult res;
    res.base = &sk;
    res.l = l;
    res.window = window;
    res.skeleton =
        std::make_unique<Skeleton>(k + l, std::move(verts), std::move(edges), std::move(squares));
    if (!res.skeleton->ok())
        fail(Err::Internal, "cartesian product fails validation: " +
                                res.skeleton->validation().violations.front().kind);
    return res;
}

int CartesianDeltaResult::vertex_at(int base_vertex, const std::vector<int>& tag) const {
    return skeleton->vertex_index(base->vertex_id(base_vertex) + "@" + tag_str(tag));
}

int CartesianDeltaResult::base_edge_at(int base_edge, const std::vector<int>& tag) const {
    return skeleton->edge_index(base->edge(base_edge).id + "@" + tag_str(tag));
}

int CartesianDeltaResult::vertical_at(int base_vertex, int j, const std::vector<int>& tag) const {
    return skeleton->edge_index(base->vertex_id(base_vertex) + "@" + tag_str(tag) + "+e" +
                                std::to_string(j));
}

TakaiReport takai_check(const Skeleton& sk, const ZlAction& a, int window) {
    if (a.skeleton_ptr() != &sk) fail(Err::SkeletonMismatch, "action acts on a different skeleton");
    sk.ensure_valid("takai_check");
    a.ensure_valid("takai_check");
    if (window < 1) fail(Err::BadParameter, "window must be positive");
    const int l = a.l();

    CrossedProductResult cp = crossed_product(sk, a);
    Cocycle c = canonical_cocycle(cp);
    SkewProductResult X = skew_product(*cp.skeleton, c, window);
    CartesianDeltaResult Y = cartesian_with_delta(sk, l, window);

    TakaiReport rep;
    auto fail_with = [&](std::string msg) {
        rep.ok = false;
        if (rep.first_failure.empty()) rep.first_failure = std::move(msg);
    };
    if (!X.skeleton->ok()) {
        fail_with("skew product fails validation");
        return rep;
    }

    // rho((lambda,m),n) = (alpha_{n-m}(lambda), (n-m, n)) on cells of X.
    auto rho = [&](const Path& xp) -> Path {
        std::vector<int> n;
        std::vector<int> gw;
        int grange = -1;
        if (xp.is_vertex()) {
            n = X.vertex_cell[xp.range()].second;
            grange = X.vertex_cell[xp.range()].first;
        } else {
            n = X.edge_cell[xp.word().back()].second;
            for (int e : xp.word()) gw.push_back(X.edge_cell[e].first);
        }
        Path gp = gw.empty() ? Path(*cp.skeleton, grange) : Path(*cp.skeleton, std::move(gw));
        auto [lam, m] = cp.project(gp);
        std::vector<int> shift(l);
        for (int i = 0; i < l; ++i) shift[i] = n[i] - m[i];
        Path lam2 = a.apply(shift, lam);
        std::vector<int> t = shift;
        std::vector<int> w;
        for (int e : lam2.word()) {
            int ye = Y.base_edge_at(e, t);
            if (ye < 0) fail(Err::Internal, "rho image leaves the window");
            w.push_back(ye);
        }
        int v = lam2.source();
        for (int j = 1; j <= l; ++j)
            for (int s = 0; s < m[j - 1]; ++s) {
                int ye = Y.vertical_at(v, j, t);
                if (ye < 0) fail(Err::Internal, "rho image leaves the window");
                w.push_back(ye);
                t[j - 1] += 1;
            }
        if (w.empty()) return Path(*Y.skeleton, Y.vertex_at(lam2.range(), t));
        return Path(*Y.skeleton, std::move(w));
    };
    auto rho_vertex = [&](int xv) -> int {
        const auto& [gv, n] = X.vertex_cell[xv];
        return Y.vertex_at(a.apply_vertex(n, gv), n);
    };

    // Vertex bijection.
    std::vector<bool> vseen(Y.skeleton->vertex_count(), false);
    for (int xv = 0; xv < X.skeleton->vertex_count(); ++xv) {
        int yv = rho_vertex(xv);
        if (yv < 0 || vseen[yv]) {
            fail_with("vertex map not a bijection at " + X.skeleton->vertex_id(xv));
            return rep;
        }
        vseen[yv] = true;
    }
    if (X.skeleton->vertex_count() != Y.skeleton->vertex_count()) {
        fail_with("vertex counts differ");
        return rep;
    }

    // Edge bijection with r/s equivariance.
    std::vector<bool> eseen(Y.skeleton->edge_count(), false);
    for (int xe = 0; xe < X.skeleton->edge_count(); ++xe) {
        Path y = rho(Path(*X.skeleton, std::vector<int>{xe}));
        if (y.length() != 1) {
            fail_with("edge image is not an edge at " + X.skeleton->edge(xe).id);
            return rep;
        }
        int ye = y.word()[0];
        if (eseen[ye]) {
            fail_with("edge map not injective at " + X.skeleton->edge(xe).id);
            return rep;
        }
        eseen[ye] = true;
        if (Y.skeleton->range_of(ye) != rho_vertex(X.skeleton->range_of(xe)) ||
            Y.skeleton->source_of(ye) != rho_vertex(X.skeleton->source_of(xe))) {
            fail_with("r/s equivariance fails at " + X.skeleton->edge(xe).id);
            return rep;
        }
    }
    if (X.skeleton->edge_count() != Y.skeleton->edge_count()) {
        fail_with("edge counts differ");
        return rep;
    }

    // rho(xy) = rho(x)rho(y) on all composable edge pairs.
    for (int x1 = 0; x1 < X.skeleton->edge_count(); ++x1)
        for (int x2 = 0; x2 < X.skeleton->edge_count(); ++x2) {
            if (X.skeleton->source_of(x1) != X.skeleton->range_of(x2)) continue;
            Path both = rho(Path(*X.skeleton, std::vector<int>{x1, x2}));
            Path split = compose(rho(Path(*X.skeleton, std::vector<int>{x1})),
                                 rho(Path(*X.skeleton, std::vector<int>{x2})));
            ++rep.products_checked;
            if (both != split) {
                fail_with("product identity fails at " + X.skeleton->edge(x1).id + "*" +
                          X.skeleton->edge(x2).id);
                return rep;
            }
        }

    // Per-degree cell bijection up to the (2,...,2) box.
    for (const Degree& pm : degrees_upto(Degree::constant(sk.k() + l, 2))) {
        std::set<std::string> ximg, ycells;
        long long xcount = 0;
        for (int xv = 0; xv < X.skeleton->vertex_count(); ++xv)
            for (const Path& p : enumerate_paths(*X.skeleton, xv, pm)) {
                ximg.insert(rho(p).to_string());
                ++xcount;
                ++rep.cells_checked;
            }
        for (int yv = 0; yv < Y.skeleton->vertex_count(); ++yv)
            for (const Path& p : enumerate_paths(*Y.skeleton, yv, pm)) ycells.insert(p.to_string());
        if (static_cast<long long>(ximg.size()) != xcount || ximg != ycells) {
            fail_with("cell bijection fails at degree " + pm.to_string());
            return rep;
        }
    }
    return rep;
}

} // namespace hrg
