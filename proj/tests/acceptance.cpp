// Acceptance gate: one line per criterion, exit 0 only if every line passes.
#include <cstdio>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hrg/alignment.hpp"
#include "hrg/constructions.hpp"
#include "hrg/dynamics.hpp"
#include "hrg/gallery.hpp"
#include "hrg/isomorphism.hpp"
#include "hrg/ktheory.hpp"
#include "hrg/path.hpp"
#include "hrg/skeleton.hpp"

using namespace hrg;

namespace {

int g_failures = 0;

void report(int idx, bool ok, const std::string& label, const std::string& detail) {
    std::printf("[%d] %s  %s%s%s\n", idx, ok ? "PASS" : "FAIL", label.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++g_failures;
}

bool has_kind(const ValidationReport& r, const std::string& kind) {
    for (const Violation& v : r.violations)
        if (v.kind == kind) return true;
    return false;
}

bool group_is(const FGAbelianGroup& g, int rank, const std::vector<long long>& torsion) {
    if (g.free_rank != rank || g.torsion.size() != torsion.size()) return false;
    for (size_t i = 0; i < torsion.size(); ++i)
        if (g.torsion[i] != torsion[i]) return false;
    return true;
}

std::unique_ptr<Skeleton> two_loop_graph() {
    return std::make_unique<Skeleton>(
        1, std::vector<std::string>{"v"},
        std::vector<Edge>{{"a", 1, "v", "v"}, {"b", 1, "v", "v"}}, std::vector<Square>{});
}

std::unique_ptr<Skeleton> two_component_graph() {
    return std::make_unique<Skeleton>(1, std::vector<std::string>{"u", "w"},
                                      std::vector<Edge>{{"a1", 1, "u", "u"},
                                                        {"a2", 1, "u", "u"},
                                                        {"b1", 1, "w", "w"},
                                                        {"b2", 1, "w", "w"}},
                                      std::vector<Square>{});
}

// --- criterion 1 -----------------------------------------------------------

void criterion_mce_relationship() {
    bool ok = true;
    std::ostringstream why;
    long long pairs = 0;

    auto run = [&](const Skeleton& sk, const ZlAction& a, const std::string& name) {
        MceCheckReport r = mce_relationship_check(sk, a, Degree::constant(sk.k(), 2),
                                                  Degree::constant(a.l(), 2));
        pairs += r.pairs_checked;
        if (!r.ok && ok) {
            ok = false;
            why << name << ": " << r.counterexample;
        }
    };

    GalleryInstance o2 = m_loops(2);
    run(*o2.skeleton, *o2.action, "O2loops+swap");
    ZlAction o2_id = ZlAction::identity(*o2.skeleton, 1);
    run(*o2.skeleton, o2_id, "O2loops+id");
    GalleryInstance cyc = cycle_with_rotation(3);
    run(*cyc.skeleton, *cyc.action, "cycle_with_rotation(3)");

    std::mt19937 rng(20260815);
    std::vector<std::unique_ptr<Skeleton>> keep;
    for (int i = 0; i < 20; ++i) {
        if (i % 2 == 0) {
            keep.push_back(two_loop_graph());
            const bool swap = rng() % 2 == 0;
            ZlAction a(*keep.back(), {Automorphism{{0}, swap ? std::vector<int>{1, 0}
                                                             : std::vector<int>{0, 1}}});
            run(*keep.back(), a, "random#" + std::to_string(i));
        } else {
            // Mirrored 2-vertex graph: the vertex swap extends to an automorphism.
            const std::vector<std::string> vs{"u", "w"};
            std::vector<Edge> edges;
            std::vector<int> edge_map;
            const int pairs_n = 1 + static_cast<int>(rng() % 2);
            for (int t = 0; t < pairs_n; ++t) {
                const int r = static_cast<int>(rng() % 2), s = static_cast<int>(rng() % 2);
                edges.push_back({"x" + std::to_string(t), 1, vs[r], vs[s]});
                edges.push_back({"y" + std::to_string(t), 1, vs[1 - r], vs[1 - s]});
                edge_map.push_back(2 * t + 1);
                edge_map.push_back(2 * t);
            }
            keep.push_back(std::make_unique<Skeleton>(1, vs, std::move(edges),
                                                      std::vector<Square>{}));
            ZlAction a(*keep.back(), {Automorphism{{1, 0}, std::move(edge_map)}});
            run(*keep.back(), a, "random#" + std::to_string(i));
        }
    }

    report(1, ok,
           "MCE relationship at bound (2;2) on 3 pinned and 20 randomized actions",
           ok ? std::to_string(pairs) + " pairs checked" : why.str());
}

// --- criteria 2 and 3 ------------------------------------------------------

void box_degrees(int dims, int bound, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(dims, 0);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < dims && cur[i] == bound) cur[i++] = 0;
        if (i == dims) return;
        ++cur[i];
    }
}

void criterion_construction_soundness() {
    bool ok = true;
    std::ostringstream why;
    for (const GalleryInstance& g : action_instances()) {
        CrossedProductResult cp = crossed_product(*g.skeleton, *g.action);
        if (!cp.skeleton->ok()) {
            ok = false;
            why << g.name << ": product fails validation";
            break;
        }
        std::vector<std::vector<int>> ps, ms;
        box_degrees(g.skeleton->k(), 2, ps);
        box_degrees(g.action->l(), 2, ms);
        for (int v = 0; v < g.skeleton->vertex_count() && ok; ++v)
            for (const auto& p : ps)
                for (const auto& m : ms) {
                    std::vector<int> pm = p;
                    pm.insert(pm.end(), m.begin(), m.end());
                    const size_t base = enumerate_paths(*g.skeleton, v, Degree(p)).size();
                    const size_t prod = enumerate_paths(*cp.skeleton, v, Degree(pm)).size();
                    if (base != prod) {
                        ok = false;
                        why << g.name << ": |(v,0)Gamma^(p,m)| = " << prod << " but |vLambda^p| = "
                            << base << " at v=" << g.skeleton->vertex_id(v);
                        break;
                    }
                }
        if (!ok) break;
    }
    report(2, ok, "crossed products validate and path counts match |vLambda^p| for |p|,|m| <= 2",
           ok ? "all gallery action instances" : why.str());
}

void criterion_recognition_round_trip() {
    bool ok = true;
    std::ostringstream why;
    for (const GalleryInstance& g : action_instances()) {
        CrossedProductResult cp = crossed_product(*g.skeleton, *g.action);
        std::vector<int> zl_colors;
        for (int j = 0; j < g.action->l(); ++j) zl_colors.push_back(g.skeleton->k() + 1 + j);
        try {
            RecognizeResult rr = recognize(*cp.skeleton, zl_colors);
            CrossedProductResult cp2 = crossed_product(*rr.base, *rr.action);
            if (!skeleton_isomorphic(*cp2.skeleton, *cp.skeleton)) {
                ok = false;
                why << g.name << ": round trip not isomorphic";
                break;
            }
        } catch (const Error& e) {
            ok = false;
            why << g.name << ": " << e.what();
            break;
        }
    }
    report(3, ok, "recognize inverts crossed_product up to skeleton isomorphism",
           ok ? "all gallery action instances" : why.str());
}

// --- criterion 4 -----------------------------------------------------------

void criterion_takai_window() {
    GalleryInstance o2 = m_loops(2);
    GalleryInstance cyc = cycle_with_rotation(3);
    TakaiReport a = takai_check(*o2.skeleton, *o2.action, 2);
    TakaiReport b = takai_check(*cyc.skeleton, *cyc.action, 2);
    const bool ok = a.ok && b.ok;
    std::ostringstream detail;
    if (ok)
        detail << a.cells_checked + b.cells_checked << " cells, "
               << a.products_checked + b.products_checked << " products";
    else
        detail << (a.ok ? "" : "O2loops+swap: " + a.first_failure)
               << (b.ok ? "" : " cycle_with_rotation(3): " + b.first_failure);
    report(4, ok, "takai_check holds at window 2 on O2loops+swap and cycle_with_rotation(3)",
           detail.str());
}

// --- criterion 5 -----------------------------------------------------------

void criterion_simplicity_diagnostics() {
    bool ok = true;
    std::ostringstream why;

    GalleryInstance o2 = m_loops(2);
    SimplicityReport s1 = simplicity(*o2.skeleton, *o2.action, 2, 4);
    const PeriodicPair* pp =
        s1.aperiodicity.pair.has_value() ? &*s1.aperiodicity.pair : nullptr;
    if (!(s1.cofinality.cofinal &&
          s1.aperiodicity.state == Periodicity::PeriodicPairFound && pp &&
          pp->p.c == std::vector<int>{0} && pp->m == std::vector<int>{0} &&
          pp->q.c == std::vector<int>{0} && pp->n == std::vector<int>{2} &&
          s1.verdict == Verdict::NotSimple)) {
        ok = false;
        why << "O2loops+swap did not yield NotSimple via pair ((0,0),(0,2))";
    }

    ZlAction trivial = ZlAction::trivial(*o2.skeleton);
    SimplicityReport s2 = simplicity(*o2.skeleton, trivial, 2, 4);
    if (ok && !(s2.cofinality.cofinal &&
                s2.aperiodicity.state == Periodicity::AperiodicWitnessed &&
                s2.verdict == Verdict::Simple)) {
        ok = false;
        why << "trivial action on O2loops did not come out simple at B=2, D=4";
    }

    std::unique_ptr<Skeleton> split = two_component_graph();
    ZlAction split_id = ZlAction::identity(*split, 1);
    SimplicityReport s3 = simplicity(*split, split_id, 2, 4);
    if (ok && !(!s3.cofinality.cofinal && s3.verdict == Verdict::NotSimple)) {
        ok = false;
        why << "two-component graph was not rejected through cofinality";
    }

    if (ok && !(crossed_graph_equivalence_check(*o2.skeleton, *o2.action) &&
                crossed_graph_equivalence_check(*o2.skeleton, trivial) &&
                crossed_graph_equivalence_check(*split, split_id))) {
        ok = false;
        why << "crossed-graph equivalence check disagreed on a pinned instance";
    }

    report(5, ok, "simplicity diagnostics match the pinned verdicts and the crossed graph",
           why.str());
}

// --- criterion 6 -----------------------------------------------------------

void criterion_k_theory_values() {
    bool ok = true;
    std::ostringstream why;

    for (int m = 2; m <= 6 && ok; ++m) {
        GalleryInstance g = m_loops(m);
        KGroups kg = graph_k_groups(*g.skeleton);
        const std::vector<long long> tor =
            m == 2 ? std::vector<long long>{} : std::vector<long long>{m - 1};
        if (!(group_is(kg.k0, 0, tor) && group_is(kg.k1, 0, {}))) {
            ok = false;
            why << "graph K-groups of m_loops(" << m << ") off: K0 = "
                << group_to_string(kg.k0) << ", K1 = " << group_to_string(kg.k1);
        }
    }

    struct Pinned {
        GalleryInstance g;
        const ZlAction* a;
        int rank;
        std::vector<long long> tor;
    };
    std::vector<Pinned> pinned;
    pinned.push_back({m_loops(2), nullptr, 0, {}});
    pinned.push_back({m_loops(3), nullptr, 0, {2}});
    std::vector<std::unique_ptr<ZlAction>> ids;
    for (int m = 3; m <= 5; ++m) {
        pinned.push_back({m_loops(m), nullptr, 0, {m - 1}});
        ids.push_back(std::make_unique<ZlAction>(
            ZlAction::identity(*pinned.back().g.skeleton, 1)));
        pinned.back().a = ids.back().get();
    }
    for (Pinned& c : pinned) {
        if (!ok) break;
        const ZlAction& a = c.a ? *c.a : *c.g.action;
        KGroups pv = crossed_k_groups_pv(*c.g.skeleton, a);
        KGroups ob = crossed_k_groups_orbits(*c.g.skeleton, a);
        if (!(same_group(pv.k0, ob.k0) && same_group(pv.k1, ob.k1) &&
              group_is(pv.k0, c.rank, c.tor) && group_is(pv.k1, c.rank, c.tor))) {
            ok = false;
            why << c.g.name << ": pv gives (" << group_to_string(pv.k0) << ", "
                << group_to_string(pv.k1) << "), orbits (" << group_to_string(ob.k0) << ", "
                << group_to_string(ob.k1) << ")";
        }
    }

    if (ok) {
        for (const GalleryInstance& g : action_instances()) {
            try {
                adjacency_and_action(*g.skeleton, *g.action); // asserts P M^t = M^t P
            } catch (const Error& e) {
                ok = false;
                why << g.name << ": " << e.what();
                break;
            }
        }
    }

    report(6, ok, "K-groups hit the pinned values and both crossed-product routes agree",
           why.str());
}

// --- criterion 7 -----------------------------------------------------------

void criterion_smith_laws() {
    std::mt19937 rng(1898);
    std::uniform_int_distribution<int> dim(1, 4), entry(-5, 5);
    bool ok = true;
    std::ostringstream why;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
        SmithForm f = smith_normal_form(m);
        if (mul(mul(f.u, m), f.v) != f.s) {
            ok = false;
            why << "U M V != S at trial " << trial;
            break;
        }
        BigInt du = determinant(f.u), dv = determinant(f.v);
        if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) {
            ok = false;
            why << "U or V not unimodular at trial " << trial;
            break;
        }
        BigInt prev = 0;
        for (int i = 0; i < f.s.rows && ok; ++i)
            for (int j = 0; j < f.s.cols; ++j) {
                const BigInt& x = f.s.at(i, j);
                if (i != j && x != 0) {
                    ok = false;
                    why << "S not diagonal at trial " << trial;
                    break;
                }
                if (i == j) {
                    if (x < 0 || (prev != 0 && x % prev != 0) || (prev == 0 && i > 0 && x != 0)) {
                        ok = false;
                        why << "divisibility chain broken at trial " << trial;
                        break;
                    }
                    prev = x;
                }
            }
        if (ok && m.rows == m.cols) {
            BigInt det = determinant(m);
            if (det != 0) {
                FGAbelianGroup g = cokernel(m);
                if (g.free_rank != 0 || g.order() != abs(det)) {
                    ok = false;
                    why << "|coker| != |det| at trial " << trial;
                }
            }
        }
    }
    report(7, ok, "Smith normal form laws hold on 500 random matrices", why.str());
}

// --- criterion 8 -----------------------------------------------------------

void criterion_bratteli_multiplicities() {
    GalleryInstance g = rank2_bratteli({1, 1, 1, 1, 1, 1}, 3);
    const long long want[3][2][2] = {{{1, 1}, {1, 0}}, {{2, 1}, {1, 1}}, {{3, 2}, {2, 1}}};
    bool ok = true;
    std::ostringstream why;
    for (int m = 1; m <= 3 && ok; ++m)
        for (int i = 1; i <= 2 && ok; ++i)
            for (int j = 1; j <= 2; ++j) {
                const std::string r = "v" + std::to_string(m - 1) + "_" + std::to_string(i);
                const std::string s = "v" + std::to_string(m) + "_" + std::to_string(j);
                long long n = 0;
                for (const Edge& e : g.skeleton->edges())
                    if (e.range == r && e.source == s) ++n;
                if (n != want[m - 1][i - 1][j - 1]) {
                    ok = false;
                    why << "level " << m << " slot (" << i << "," << j << ") has " << n
                        << " edges, want " << want[m - 1][i - 1][j - 1];
                    break;
                }
            }
    report(8, ok, "rank2_bratteli([1,...,1], 3) bundle multiplicities match levels 1-3",
           why.str());
}

// --- criterion 9 -----------------------------------------------------------

void criterion_square_mutations() {
    bool ok = true;
    std::ostringstream why;
    long long mutations = 0;

    std::vector<GalleryInstance> graphs;
    graphs.push_back(omega_window(2, 2));
    graphs.push_back(delta_window(2, 1));
    graphs.push_back(line_window_shift(3, 2));

    for (const GalleryInstance& g : graphs) {
        const Skeleton& sk = *g.skeleton;
        for (size_t s = 0; s < sk.squares().size() && ok; ++s) {
            std::vector<Square> removed = sk.squares();
            removed.erase(removed.begin() + static_cast<long>(s));
            Skeleton del(sk.k(), sk.vertices(), sk.edges(), std::move(removed));
            ++mutations;
            if (del.ok() || !has_kind(del.validation(), "MissingSquare")) {
                ok = false;
                why << g.name << ": deleting square " << s << " not flagged as MissingSquare";
                break;
            }

            std::vector<Square> doubled = sk.squares();
            doubled.push_back(doubled[s]);
            Skeleton dup(sk.k(), sk.vertices(), sk.edges(), std::move(doubled));
            ++mutations;
            if (dup.ok() || !has_kind(dup.validation(), "DuplicateSquare")) {
                ok = false;
                why << g.name << ": duplicating square " << s << " not flagged as DuplicateSquare";
                break;
            }
        }
        if (!ok) break;
    }
    report(9, ok, "every single-square mutation of the gallery 2-graphs is rejected",
           ok ? std::to_string(mutations) + " mutations" : why.str());
}

} // namespace

int main() {
    criterion_mce_relationship();
    criterion_construction_soundness();
    criterion_recognition_round_trip();
    criterion_takai_window();
    criterion_simplicity_diagnostics();
    criterion_k_theory_values();
    criterion_smith_laws();
    criterion_bratteli_multiplicities();
    criterion_square_mutations();
    if (g_failures == 0)
        std::printf("acceptance: all 9 criteria pass\n");
    else
        std::printf("acceptance: %d criterion(s) failing\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
