#include "hrg/dynamics.hpp"

#include <algorithm>
#include <deque>

#include "hrg/constructions.hpp"

namespace hrg {

namespace {

void require_pair(const Skeleton& sk, const ZlAction& a, const char* op) {
    sk.ensure_valid(op);
    if (a.skeleton_ptr() != &sk)
        fail(Err::SkeletonMismatch, std::string(op) + ": action is over a different skeleton");
    a.ensure_valid(op);
}

void require_no_sources(const Skeleton& sk, const char* op) {
    if (!sk.validation().flags.no_sources)
        fail(Err::NoSources, std::string(op) + ": skeleton has sources");
}

// Closure of {v} under orbit moves and range->source steps. Saturating both
// ways exhausts the m,n quantifiers of the cofinality definition exactly.
std::vector<char> orbit_reachable(const Skeleton& sk, const ZlAction& a, int v) {
    std::vector<char> in(sk.vertex_count(), 0);
    std::deque<int> queue;
    auto push = [&](int u) {
        if (!in[u]) {
            in[u] = 1;
            queue.push_back(u);
        }
    };
    push(v);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : a.vertex_orbit(u)) push(w);
        for (int e = 0; e < sk.edge_count(); ++e)
            if (sk.range_of(e) == u) push(sk.source_of(e));
    }
    return in;
}

// Degrees p with |p| <= bound (l^1), in lexicographic order.
std::vector<Degree> bounded_degrees(int k, int bound) {
    std::vector<Degree> out;
    for (const Degree& d : degrees_upto(Degree::constant(k, bound)))
        if (d.sum() <= bound) out.push_back(d);
    return out;
}

} // namespace

CofinalityReport alpha_cofinal(const Skeleton& sk, const ZlAction& a) {
    require_pair(sk, a, "alpha_cofinal");
    require_no_sources(sk, "alpha_cofinal");
    const int V = sk.vertex_count();
    const Degree ones = Degree::constant(sk.k(), 1);
    const std::vector<Degree> corners = degrees_upto(ones);

    // For each vertex, the vertex sets swept by its degree-(1,...,1) paths.
    std::vector<std::vector<std::vector<int>>> moves(V);
    for (int u = 0; u < V; ++u)
        for (const Path& lam : enumerate_paths(sk, u, ones)) {
            std::vector<int> visited;
            visited.reserve(corners.size());
            for (const Degree& p : corners) visited.push_back(vertex_at(lam, p));
            moves[u].push_back(std::move(visited));
        }

    for (int v = 0; v < V; ++v) {
        std::vector<char> reach = orbit_reachable(sk, a, v);
        // Greatest subset of the complement an infinite path can stay inside:
        // strip vertices with no degree-(1,...,1) move through the subset.
        std::vector<char> stay(V, 0);
        for (int u = 0; u < V; ++u) stay[u] = !reach[u];
        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = 0; u < V; ++u) {
                if (!stay[u]) continue;
                bool keeps = false;
                for (const auto& visited : moves[u]) {
                    bool inside = true;
                    for (int w : visited)
                        if (!stay[w]) {
                            inside = false;
                            break;
                        }
                    if (inside) {
                        keeps = true;
                        break;
                    }
                }
                if (!keeps) {
                    stay[u] = 0;
                    changed = true;
                }
            }
        }
        std::vector<std::string> stuck;
        for (int u = 0; u < V; ++u)
            if (stay[u]) stuck.push_back(sk.vertex_id(u));
        if (!stuck.empty()) return {false, sk.vertex_id(v), std::move(stuck)};
    }
    return {};
}

AperiodicityReport alpha_aperiodic_bounded(const Skeleton& sk, const ZlAction& a,
                                           int pair_bound, int depth) {
    require_pair(sk, a, "alpha_aperiodic_bounded");
    require_no_sources(sk, "alpha_aperiodic_bounded");
    if (pair_bound < 1 || depth < 1)
        fail(Err::BadParameter, "pair_bound and depth must be positive");

    AperiodicityReport rep;
    rep.pair_bound = pair_bound;
    rep.depth = depth;
    const int k = sk.k();

    if (a.l() >= 1) {
        // alpha_{N e_1} = id, so every infinite path is ((0,0),(0,N e_1))-periodic.
        std::vector<int> shift(a.l(), 0);
        shift[0] = static_cast<int>(a.action_order());
        rep.state = Periodicity::PeriodicPairFound;
        rep.pair = PeriodicPair{sk.vertex_id(0),       Degree::zero(k), std::vector<int>(a.l(), 0),
                                Degree::zero(k), shift, 0};
        return rep;
    }

    const std::vector<Degree> ps = bounded_degrees(k, pair_bound);
    bool undecided = false;
    for (int v = 0; v < sk.vertex_count(); ++v) {
        std::vector<std::vector<Path>> by_depth(depth + 1); // lazy prefix cache
        auto prefixes = [&](int d) -> const std::vector<Path>& {
            if (by_depth[d].empty())
                by_depth[d] = enumerate_paths(sk, v, Degree::constant(k, d));
            return by_depth[d];
        };
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j) {
                const Degree& p = ps[i];
                const Degree& q = ps[j];
                const Degree top = join(p, q);
                if (top.max() > depth) {
                    undecided = true;
                    continue;
                }
                // Shallowest separating prefix, so reports are stable in depth.
                // No witness at this depth implies none at shallower depths.
                bool separated = false;
                for (int d = std::max(top.max(), 1); d <= depth && !separated; ++d) {
                    const Degree t = Degree::constant(k, d) - top;
                    for (const Path& mu : prefixes(d))
                        if (segment(mu, p, p + t) != segment(mu, q, q + t)) {
                            rep.witnesses.push_back({sk.vertex_id(v), p, q, mu.to_string()});
                            separated = true;
                            break;
                        }
                }
                if (!separated) {
                    // A periodic call needs a nonempty overlap window at full
                    // depth; vacuous agreement stays undecided.
                    if (top.max() >= depth) {
                        undecided = true;
                        continue;
                    }
                    rep.state = Periodicity::PeriodicPairFound;
                    rep.pair = PeriodicPair{sk.vertex_id(v), p, {}, q, {}, depth};
                    rep.witnesses.clear();
                    return rep;
                }
            }
    }
    if (undecided) {
        rep.state = Periodicity::UndecidedAtDepth;
        rep.witnesses.clear();
    } else {
        rep.state = Periodicity::AperiodicWitnessed;
    }
    return rep;
}

SimplicityReport simplicity(const Skeleton& sk, const ZlAction& a, int pair_bound, int depth) {
    SimplicityReport rep;
    rep.cofinality = alpha_cofinal(sk, a);
    rep.aperiodicity = alpha_aperiodic_bounded(sk, a, pair_bound, depth);
    if (!rep.cofinality.cofinal || rep.aperiodicity.state == Periodicity::PeriodicPairFound)
        rep.verdict = Verdict::NotSimple;
    else if (rep.aperiodicity.state == Periodicity::AperiodicWitnessed)
        rep.verdict = Verdict::Simple;
    else
        rep.verdict = Verdict::Undecided;

    if (!rep.cofinality.cofinal)
        rep.notes = "infinite paths can stay outside the orbit-reachable set of " +
                    rep.cofinality.failing_vertex;
    else if (rep.aperiodicity.state == Periodicity::PeriodicPairFound && a.l() >= 1)
        rep.notes = "the action has finite order, so a periodic pair always exists";
    else if (rep.aperiodicity.state == Periodicity::UndecidedAtDepth)
        rep.notes = "aperiodicity undecided: depth " + std::to_string(depth) +
                    " is below the pair bound " + std::to_string(pair_bound);
    return rep;
}

bool crossed_graph_equivalence_check(const Skeleton& sk, const ZlAction& a, int depth) {
    require_pair(sk, a, "crossed_graph_equivalence_check");
    require_no_sources(sk, "crossed_graph_equivalence_check");
    const int bound = 3;
    const CofinalityReport base_cof = alpha_cofinal(sk, a);
    const AperiodicityReport base_ap = alpha_aperiodic_bounded(sk, a, bound, depth);

    CrossedProductResult cp = crossed_product(sk, a);
    ZlAction trivial = ZlAction::trivial(*cp.skeleton);
    const int gamma_bound = std::max<long long>(bound, a.action_order());
    const CofinalityReport g_cof = alpha_cofinal(*cp.skeleton, trivial);
    const AperiodicityReport g_ap =
        alpha_aperiodic_bounded(*cp.skeleton, trivial, gamma_bound, depth);

    return base_cof.cofinal == g_cof.cofinal && base_ap.state == g_ap.state;
}

CstarView cstar_view(const Skeleton& sk, const ZlAction& a, int pair_bound, int depth) {
    require_pair(sk, a, "cstar_view");
    require_no_sources(sk, "cstar_view");
    if (!sk.validation().flags.no_sinks) fail(Err::NoSinks, "cstar_view: skeleton has sinks");
    if (pair_bound < 1 || depth < 1)
        fail(Err::BadParameter, "pair_bound and depth must be positive");

    CstarView view;
    view.irreducible = alpha_cofinal(sk, a).cofinal;
    const int k = sk.k();

    if (a.l() >= 1) {
        std::vector<int> shift(a.l(), 0);
        shift[0] = static_cast<int>(a.action_order());
        view.topologically_free = Periodicity::PeriodicPairFound;
        view.periodic_pair = PeriodicPair{
            sk.vertex_id(0), Degree::zero(k), std::vector<int>(a.l(), 0),
            Degree::zero(k), shift,          0};
        return view;
    }

    const Degree ones = Degree::constant(k, 1);
    const std::vector<Degree> ps = bounded_degrees(k, pair_bound);
    bool undecided = false;
    for (int v = 0; v < sk.vertex_count(); ++v)
        for (const Degree& c : degrees_upto(ones))
            for (const Path& lam : enumerate_paths(sk, v, c)) {
                // Prefixes of the cylinder's points, extended past lambda.
                std::vector<std::vector<Path>> by_depth(depth + 1);
                auto prefixes = [&](int d) -> const std::vector<Path>& {
                    if (by_depth[d].empty())
                        for (const Path& nu :
                             enumerate_paths(sk, lam.source(), Degree::constant(k, d)))
                            by_depth[d].push_back(compose(lam, nu));
                    return by_depth[d];
                };
                for (size_t i = 0; i < ps.size(); ++i)
                    for (size_t j = i + 1; j < ps.size(); ++j) {
                        const Degree& p = ps[i];
                        const Degree& q = ps[j];
                        const Degree top = join(p, q);
                        if (top.max() > depth) {
                            undecided = true;
                            continue;
                        }
                        bool separated = false;
                        for (int d = std::max(top.max(), 1); d <= depth && !separated; ++d) {
                            const Degree t = (c + Degree::constant(k, d)) - top;
                            for (const Path& mu : prefixes(d))
                                if (segment(mu, p, p + t) != segment(mu, q, q + t)) {
                                    view.witnesses.push_back(
                                        {lam.to_string(), p, q, mu.to_string()});
                                    separated = true;
                                    break;
                                }
                        }
                        if (!separated) {
                            if (top.max() >= depth) {
                                undecided = true;
                                continue;
                            }
                            view.topologically_free = Periodicity::PeriodicPairFound;
                            view.periodic_pair = PeriodicPair{lam.to_string(), p, {}, q, {}, depth};
                            view.witnesses.clear();
                            return view;
                        }
                    }
            }
    if (undecided) {
        view.topologically_free = Periodicity::UndecidedAtDepth;
        view.witnesses.clear();
    } else {
        view.topologically_free = Periodicity::AperiodicWitnessed;
    }
    return view;
}

} // namespace hrg
