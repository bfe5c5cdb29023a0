#include <doctest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hrg/dynamics.hpp"
#include "hrg/gallery.hpp"

using namespace hrg;

namespace {

Skeleton two_component() {
    return Skeleton(1, {"u", "w"}, {{"gu", 1, "u", "u"}, {"gw", 1, "w", "w"}}, {});
}

// Independent closure: reach[x][y] iff x Lambda y is nonempty.
std::vector<std::vector<char>> path_closure(const Skeleton& sk) {
    const int V = sk.vertex_count();
    std::vector<std::vector<char>> p(V, std::vector<char>(V, 0));
    for (int v = 0; v < V; ++v) p[v][v] = 1;
    for (int e = 0; e < sk.edge_count(); ++e) p[sk.range_of(e)][sk.source_of(e)] = 1;
    for (int m = 0; m < V; ++m)
        for (int x = 0; x < V; ++x)
            for (int y = 0; y < V; ++y)
                if (p[x][m] && p[m][y]) p[x][y] = 1;
    return p;
}

} // namespace

TEST_CASE("cofinality holds on the gallery actions") {
    for (const GalleryInstance& g : action_instances()) {
        if (g.boundary_incomplete) continue;
        CAPTURE(g.name);
        CHECK(alpha_cofinal(*g.skeleton, *g.action).cofinal);
    }
}

TEST_CASE("cofinality fails across components") {
    Skeleton sk = two_component();
    ZlAction a = ZlAction::trivial(sk);
    CofinalityReport rep = alpha_cofinal(sk, a);
    REQUIRE_FALSE(rep.cofinal);
    CHECK(rep.failing_vertex == "u");
    CHECK(rep.stuck_vertices == std::vector<std::string>{"w"});
}

TEST_CASE("orbit moves restore cofinality") {
    Skeleton sk = two_component();
    ZlAction swap(sk, {Automorphism{{1, 0}, {1, 0}}});
    REQUIRE(swap.ok());
    CHECK(alpha_cofinal(sk, swap).cofinal);
}

TEST_CASE("dynamics rejects skeletons with sources") {
    GalleryInstance dw = delta_window(1, 1);
    ZlAction a = ZlAction::trivial(*dw.skeleton);
    CHECK_THROWS_WITH_AS(alpha_cofinal(*dw.skeleton, a),
                         "NoSources: alpha_cofinal: skeleton has sources", Error);
    CHECK_THROWS_AS(alpha_aperiodic_bounded(*dw.skeleton, a), Error);
}

TEST_CASE("cofinality agrees with conclusive depth-bounded brute force") {
    for (const GalleryInstance& g : action_instances()) {
        if (g.boundary_incomplete) continue;
        CAPTURE(g.name);
        const Skeleton& sk = *g.skeleton;
        const ZlAction& a = *g.action;
        auto reach = path_closure(sk);
        const long long order = a.action_order();
        const Degree full = Degree::constant(sk.k(), 6);
        const std::vector<Degree> positions = degrees_upto(full);
        bool every_prefix_hits = true;
        for (int v = 0; v < sk.vertex_count() && every_prefix_hits; ++v) {
            std::vector<char> good(sk.vertex_count(), 0);
            for (int w = 0; w < sk.vertex_count(); ++w)
                for (long long j = 0; j < order && !good[w]; ++j)
                    if (reach[v][a.apply_vertex({static_cast<int>(j)}, w)]) good[w] = 1;
            for (int u = 0; u < sk.vertex_count() && every_prefix_hits; ++u)
                for (const Path& mu : enumerate_paths(sk, u, full)) {
                    bool hits = false;
                    for (const Degree& p : positions)
                        if (good[vertex_at(mu, p)]) {
                            hits = true;
                            break;
                        }
                    if (!hits) {
                        every_prefix_hits = false;
                        break;
                    }
                }
        }
        // Conclusive positive brute force must match the exact decision.
        if (every_prefix_hits) CHECK(alpha_cofinal(sk, a).cofinal);
    }
}

TEST_CASE("aperiodicity witnessed on the two-loop graph") {
    GalleryInstance g = m_loops(2);
    ZlAction triv = ZlAction::trivial(*g.skeleton);
    AperiodicityReport rep = alpha_aperiodic_bounded(*g.skeleton, triv, 2, 4);
    REQUIRE(rep.state == Periodicity::AperiodicWitnessed);
    CHECK(rep.witnesses.size() == 3); // pairs from {0,1,2}
    for (const SeparationWitness& w : rep.witnesses) CHECK(w.vertex == "v");
}

TEST_CASE("vertical determinism makes the swap fixture periodic") {
    // The color-2 direction has a single edge whose monodromy swaps a and b,
    // so shifting by (0,2) fixes every infinite path.
    auto sk = fixtures::two_color_swap();
    ZlAction triv = ZlAction::trivial(*sk);
    AperiodicityReport rep = alpha_aperiodic_bounded(*sk, triv, 2, 3);
    REQUIRE(rep.state == Periodicity::PeriodicPairFound);
    CHECK(rep.pair->p == Degree({0, 0}));
    CHECK(rep.pair->q == Degree({0, 2}));

    // With the commuting squares the monodromy is trivial: period (0,1).
    auto cm = fixtures::two_color_commuting();
    ZlAction ctriv = ZlAction::trivial(*cm);
    AperiodicityReport crep = alpha_aperiodic_bounded(*cm, ctriv, 2, 3);
    REQUIRE(crep.state == Periodicity::PeriodicPairFound);
    CHECK(crep.pair->p == Degree({0, 0}));
    CHECK(crep.pair->q == Degree({0, 1}));
}

TEST_CASE("deterministic cycle is periodic") {
    GalleryInstance g = cycle_with_rotation(2);
    ZlAction triv = ZlAction::trivial(*g.skeleton);
    AperiodicityReport rep = alpha_aperiodic_bounded(*g.skeleton, triv, 2, 4);
    REQUIRE(rep.state == Periodicity::PeriodicPairFound);
    CHECK(rep.pair->at == "v0");
    CHECK(rep.pair->p == Degree({0}));
    CHECK(rep.pair->q == Degree({2}));
    CHECK(rep.pair->depth == 4);
}

TEST_CASE("finite-order actions always yield a periodic pair") {
    GalleryInstance g = m_loops(2);
    AperiodicityReport rep = alpha_aperiodic_bounded(*g.skeleton, *g.action);
    REQUIRE(rep.state == Periodicity::PeriodicPairFound);
    CHECK(rep.pair->p == Degree::zero(1));
    CHECK(rep.pair->m == std::vector<int>{0});
    CHECK(rep.pair->q == Degree::zero(1));
    CHECK(rep.pair->n == std::vector<int>{2});

    for (const GalleryInstance& gi : action_instances()) {
        if (gi.boundary_incomplete) continue;
        CAPTURE(gi.name);
        CHECK(alpha_aperiodic_bounded(*gi.skeleton, *gi.action).state ==
              Periodicity::PeriodicPairFound);
    }
}

TEST_CASE("pair bound above depth is undecided") {
    GalleryInstance g = m_loops(2);
    ZlAction triv = ZlAction::trivial(*g.skeleton);
    AperiodicityReport rep = alpha_aperiodic_bounded(*g.skeleton, triv, 3, 2);
    CHECK(rep.state == Periodicity::UndecidedAtDepth);
    CHECK(rep.depth == 2);
    CHECK(rep.witnesses.empty());
}

TEST_CASE("witnesses are stable as depth grows") {
    GalleryInstance g = m_loops(2);
    ZlAction triv = ZlAction::trivial(*g.skeleton);
    AperiodicityReport r4 = alpha_aperiodic_bounded(*g.skeleton, triv, 2, 4);
    AperiodicityReport r6 = alpha_aperiodic_bounded(*g.skeleton, triv, 2, 6);
    REQUIRE(r4.state == Periodicity::AperiodicWitnessed);
    REQUIRE(r6.state == Periodicity::AperiodicWitnessed);
    REQUIRE(r4.witnesses.size() == r6.witnesses.size());
    for (size_t i = 0; i < r4.witnesses.size(); ++i) {
        CHECK(r4.witnesses[i].p == r6.witnesses[i].p);
        CHECK(r4.witnesses[i].q == r6.witnesses[i].q);
        CHECK(r4.witnesses[i].path == r6.witnesses[i].path);
    }
}

TEST_CASE("simplicity verdicts") {
    GalleryInstance g = m_loops(2);
    SimplicityReport crossed = simplicity(*g.skeleton, *g.action);
    CHECK(crossed.verdict == Verdict::NotSimple);
    CHECK(crossed.cofinality.cofinal);
    CHECK(crossed.aperiodicity.state == Periodicity::PeriodicPairFound);

    ZlAction triv = ZlAction::trivial(*g.skeleton);
    SimplicityReport plain = simplicity(*g.skeleton, triv, 2, 4);
    CHECK(plain.verdict == Verdict::Simple);

    Skeleton two = two_component();
    ZlAction ta = ZlAction::trivial(two);
    SimplicityReport split = simplicity(two, ta);
    CHECK(split.verdict == Verdict::NotSimple);
    CHECK_FALSE(split.cofinality.cofinal);

    SimplicityReport und = simplicity(*g.skeleton, triv, 3, 2);
    CHECK(und.verdict == Verdict::Undecided);
    CHECK(und.notes.find("undecided") != std::string::npos);
}

TEST_CASE("crossed product graph check agrees with the base diagnostics") {
    GalleryInstance g = m_loops(2);
    CHECK(crossed_graph_equivalence_check(*g.skeleton, *g.action));
    ZlAction triv = ZlAction::trivial(*g.skeleton);
    CHECK(crossed_graph_equivalence_check(*g.skeleton, triv));
    ZlAction ident = ZlAction::identity(*g.skeleton, 1);
    CHECK(crossed_graph_equivalence_check(*g.skeleton, ident));

    Skeleton two = two_component();
    ZlAction ta = ZlAction::trivial(two);
    CHECK(crossed_graph_equivalence_check(two, ta));

    GalleryInstance cyc = cycle_with_rotation(3);
    CHECK(crossed_graph_equivalence_check(*cyc.skeleton, *cyc.action));
}

TEST_CASE("cstar view restates the diagnostics") {
    GalleryInstance g = m_loops(2);
    ZlAction triv = ZlAction::trivial(*g.skeleton);
    CstarView tv = cstar_view(*g.skeleton, triv, 2, 4);
    CHECK(tv.topologically_free == Periodicity::AperiodicWitnessed);
    CHECK(tv.irreducible);
    CHECK_FALSE(tv.witnesses.empty());

    CstarView sv = cstar_view(*g.skeleton, *g.action, 2, 4);
    CHECK(sv.topologically_free == Periodicity::PeriodicPairFound);
    CHECK(sv.irreducible);

    Skeleton two = two_component();
    ZlAction ta = ZlAction::trivial(two);
    CstarView cv = cstar_view(two, ta);
    CHECK_FALSE(cv.irreducible);
    CHECK(cv.topologically_free == Periodicity::PeriodicPairFound);
}

TEST_CASE("cstar tri-state equals the aperiodicity tri-state") {
    struct Case {
        const Skeleton* sk;
        const ZlAction* a;
    };
    GalleryInstance g2 = m_loops(2), g3 = m_loops(3);
    GalleryInstance c2 = cycle_with_rotation(2), c3 = cycle_with_rotation(3);
    Skeleton two = two_component();
    auto tcsk = fixtures::two_color_swap();
    ZlAction t2 = ZlAction::trivial(*g2.skeleton), t3 = ZlAction::trivial(*g3.skeleton);
    ZlAction tc2 = ZlAction::trivial(*c2.skeleton), tc3 = ZlAction::trivial(*c3.skeleton);
    ZlAction ttwo = ZlAction::trivial(two), ttc = ZlAction::trivial(*tcsk);
    const std::vector<Case> cases = {
        {g2.skeleton.get(), g2.action.get()}, {g2.skeleton.get(), &t2},
        {g3.skeleton.get(), g3.action.get()}, {g3.skeleton.get(), &t3},
        {c2.skeleton.get(), c2.action.get()}, {c2.skeleton.get(), &tc2},
        {c3.skeleton.get(), c3.action.get()}, {c3.skeleton.get(), &tc3},
        {&two, &ttwo},                        {tcsk.get(), &ttc},
    };
    const std::vector<std::pair<int, int>> bounds = {{2, 3}, {3, 4}, {3, 2}};
    for (const Case& c : cases)
        for (auto [b, d] : bounds) {
            CAPTURE(b);
            CAPTURE(d);
            CHECK(cstar_view(*c.sk, *c.a, b, d).topologically_free ==
                  alpha_aperiodic_bounded(*c.sk, *c.a, b, d).state);
        }
}

TEST_CASE("cstar view needs sinks absent") {
    Skeleton sk(1, {"u", "w"}, {{"loop", 1, "u", "u"}, {"e", 1, "w", "u"}}, {});
    REQUIRE(sk.ok());
    ZlAction a = ZlAction::trivial(sk);
    CHECK(alpha_cofinal(sk, a).cofinal);
    CHECK_THROWS_WITH_AS(cstar_view(sk, a), "NoSinks: cstar_view: skeleton has sinks", Error);
}
