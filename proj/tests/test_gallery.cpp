#include <map>

#include "doctest.h"
#include "hrg/gallery.hpp"

using namespace hrg;

TEST_CASE("loop and cycle builders") {
    GalleryInstance g = m_loops(5);
    CHECK(g.skeleton->vertex_count() == 1);
    CHECK(g.skeleton->edge_count() == 5);
    CHECK(g.skeleton->ok());
    CHECK(g.action->action_order() == 5);

    GalleryInstance c = cycle_with_rotation(4);
    CHECK(c.skeleton->vertex_count() == 4);
    CHECK(c.skeleton->edge_count() == 4);
    CHECK(c.skeleton->ok());
    CHECK(!c.boundary_incomplete);
    CHECK(c.skeleton->source_of(c.skeleton->require_edge("f3")) ==
          c.skeleton->require_vertex("v0"));

    CHECK_THROWS_AS((void)m_loops(0), Error);
    CHECK_THROWS_AS((void)cycle_with_rotation(0), Error);
}

TEST_CASE("line window matches the drawn skeleton") {
    GalleryInstance g = line_window_shift(3, 2);
    const Skeleton& sk = *g.skeleton;
    CHECK(sk.vertex_count() == 7);  // v-3 .. v3
    CHECK(g.boundary_incomplete);

    int solid = 0, dashed = 0;
    for (int e = 0; e < sk.edge_count(); ++e)
        (sk.color_of(e) == 1 ? solid : dashed) += 1;
    CHECK(solid == 6);
    CHECK(dashed == 5); // d-1 .. d3
    CHECK(sk.squares().size() == 4);

    int f0 = sk.require_edge("f0");
    CHECK(sk.range_of(f0) == sk.require_vertex("v0"));
    CHECK(sk.source_of(f0) == sk.require_vertex("v1"));
    int d1 = sk.require_edge("d1");
    CHECK(sk.range_of(d1) == sk.require_vertex("v1"));
    CHECK(sk.source_of(d1) == sk.require_vertex("v-1"));

    // The truncation is inherently missing boundary squares and nothing else.
    CHECK(!sk.ok());
    for (const Violation& v : sk.validation().violations) CHECK(v.kind == "MissingSquare");
}

TEST_CASE("lattice windows") {
    GalleryInstance d = delta_window(1, 1);
    CHECK(d.skeleton->vertex_count() == 3);
    CHECK(d.skeleton->edge_count() == 2);
    CHECK(d.skeleton->ok());
    CHECK(!d.skeleton->validation().flags.no_sources);
    CHECK(!d.skeleton->validation().flags.no_sinks);

    GalleryInstance o = omega_window(2, 2);
    CHECK(o.skeleton->vertex_count() == 9);
    CHECK(o.skeleton->edge_count() == 12);
    CHECK(o.skeleton->squares().size() == 4);
    CHECK(o.skeleton->ok());
    CHECK(o.boundary_incomplete);

    GalleryInstance o3 = omega_window(3, 1);
    CHECK(o3.skeleton->vertex_count() == 8);
    CHECK(o3.skeleton->ok()); // hexagon condition holds on the lattice
}

TEST_CASE("bratteli bundles match the continued fraction products") {
    GalleryInstance g = rank2_bratteli({1, 1, 1, 1, 1, 1}, 3);
    const Skeleton& sk = *g.skeleton;
    CHECK(sk.vertex_count() == 8);

    auto bundle = [&](int m, int i, int j) {
        int count = 0;
        std::string r = "v" + std::to_string(m - 1) + "_" + std::to_string(i);
        std::string s = "v" + std::to_string(m) + "_" + std::to_string(j);
        for (int e = 0; e < sk.edge_count(); ++e)
            if (sk.vertex_id(sk.range_of(e)) == r && sk.vertex_id(sk.source_of(e)) == s) ++count;
        return count;
    };
    int want1[2][2] = {{1, 1}, {1, 0}};
    int want2[2][2] = {{2, 1}, {1, 1}};
    int want3[2][2] = {{3, 2}, {2, 1}};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            CHECK(bundle(1, i, j) == want1[i - 1][j - 1]);
            CHECK(bundle(2, i, j) == want2[i - 1][j - 1]);
            CHECK(bundle(3, i, j) == want3[i - 1][j - 1]);
        }

    // Action cycles each bundle: vertex orbits are singletons, edge orbits
    // have the bundle sizes.
    REQUIRE(g.action);
    CHECK(g.action->ok());
    for (int v = 0; v < sk.vertex_count(); ++v)
        CHECK(g.action->vertex_orbit(v).size() == 1);

    CHECK_THROWS_AS((void)rank2_bratteli({1, 1}, 2), Error); // needs T_2 = 3 entries
    CHECK_THROWS_AS((void)rank2_bratteli({}, 1), Error);

    GalleryInstance g2 = rank2_bratteli({2, 3, 4}, 2);
    // A_1 = [[2,1],[1,0]], A_2 = [[3,1],[1,0]]*[[4,1],[1,0]] = [[13,3],[4,1]].
    const Skeleton& s2 = *g2.skeleton;
    int total = 0;
    for (int e = 0; e < s2.edge_count(); ++e) ++total;
    CHECK(total == (2 + 1 + 1 + 0) + (13 + 3 + 4 + 1));
}

TEST_CASE("action instances are complete and valid") {
    std::vector<GalleryInstance> all = action_instances();
    CHECK(all.size() == 6);
    std::map<std::string, bool> seen;
    for (const GalleryInstance& g : all) {
        seen[g.name] = true;
        REQUIRE(g.skeleton);
        REQUIRE(g.action);
        CHECK(g.skeleton->ok());
        CHECK(g.action->ok());
        CHECK(g.skeleton->k() == 1);
        CHECK(!g.note.empty());
    }
    CHECK(seen.count("m_loops(2)"));
    CHECK(seen.count("cycle_with_rotation(3)"));
    CHECK(seen.count("rank2_bratteli(3)"));
}
