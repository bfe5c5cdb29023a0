#include "hrg/skeleton.hpp"

#include <algorithm>

namespace hrg {

Skeleton::Skeleton(int k, std::vector<std::string> vertices, std::vector<Edge> edges,
                   std::vector<Square> squares)
    : k_(k), vertices_(std::move(vertices)), edges_(std::move(edges)),
      squares_(std::move(squares)) {
    if (k_ < 1) fail(Err::BadParameter, "skeleton needs k >= 1");
    for (int v = 0; v < vertex_count(); ++v) {
        if (!vertex_index_.emplace(vertices_[v], v).second)
            fail(Err::BadParameter, "duplicate vertex id " + vertices_[v]);
    }
    for (int e = 0; e < edge_count(); ++e) {
        if (!edge_index_.emplace(edges_[e].id, e).second)
            fail(Err::BadParameter, "duplicate edge id " + edges_[e].id);
        if (vertex_index_.count(edges_[e].id))
            fail(Err::BadParameter, "edge id collides with vertex id " + edges_[e].id);
    }
    range_idx_.resize(edge_count());
    source_idx_.resize(edge_count());
    for (int e = 0; e < edge_count(); ++e) {
        range_idx_[e] = vertex_index(edges_[e].range);
        source_idx_[e] = vertex_index(edges_[e].source);
    }
    build_tables_();
    validate_();
}

int Skeleton::vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    return it == vertex_index_.end() ? -1 : it->second;
}

int Skeleton::edge_index(const std::string& id) const {
    auto it = edge_index_.find(id);
    return it == edge_index_.end() ? -1 : it->second;
}

int Skeleton::require_vertex(const std::string& id) const {
    int v = vertex_index(id);
    if (v < 0) fail(Err::UnknownVertex, id);
    return v;
}

int Skeleton::require_edge(const std::string& id) const {
    int e = edge_index(id);
    if (e < 0) fail(Err::UnknownEdge, id);
    return e;
}

void Skeleton::ensure_valid(const char* op) const {
    if (!report_.ok)
        fail(Err::InvalidSkeleton,
             std::string(op) + " requires a permissible skeleton; first violation: " +
                 report_.violations.front().kind + " " + report_.violations.front().detail);
}

const std::vector<int>& Skeleton::out_edges(int v, int color) const {
    return out_[static_cast<size_t>(v) * k_ + (color - 1)];
}

const std::vector<int>& Skeleton::in_edges(int v, int color) const {
    return in_[static_cast<size_t>(v) * k_ + (color - 1)];
}

std::pair<int, int> Skeleton::swap_pair(int a, int b) const {
    const bool ascending = color_of(a) < color_of(b);
    const auto& table = ascending ? fwd_ : bwd_;
    auto it = table.find({a, b});
    if (it == table.end())
        fail(Err::Internal, "no square for pair (" + edges_[a].id + "," + edges_[b].id + ")");
    return it->second;
}

int Skeleton::square_of_first(int f, int g) const {
    auto it = first_square_.find({f, g});
    return it == first_square_.end() ? -1 : it->second;
}

int Skeleton::square_of_second(int g2, int f2) const {
    auto it = second_square_.find({g2, f2});
    return it == second_square_.end() ? -1 : it->second;
}

void Skeleton::build_tables_() {
    out_.assign(static_cast<size_t>(vertex_count()) * k_, {});
    in_.assign(static_cast<size_t>(vertex_count()) * k_, {});
    std::vector<int> order(edge_count());
    for (int e = 0; e < edge_count(); ++e) order[e] = e;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return edges_[a].id < edges_[b].id; });
    for (int e : order) {
        if (edges_[e].color < 1 || edges_[e].color > k_) continue;
        if (range_idx_[e] >= 0)
            out_[static_cast<size_t>(range_idx_[e]) * k_ + (edges_[e].color - 1)].push_back(e);
        if (source_idx_[e] >= 0)
            in_[static_cast<size_t>(source_idx_[e]) * k_ + (edges_[e].color - 1)].push_back(e);
    }
}

void Skeleton::validate_() {
    auto& out = report_.violations;
    auto add = [&](const char* kind, std::string detail) {
        out.push_back({kind, std::move(detail)});
    };

    for (const Edge& e : edges_) {
        if (e.color < 1 || e.color > k_)
            add("BadColorOrder", "edge " + e.id + " has color " + std::to_string(e.color) +
                                     " outside 1.." + std::to_string(k_));
        if (vertex_index(e.range) < 0)
            add("DanglingEdge", "edge " + e.id + " has undeclared range " + e.range);
        if (vertex_index(e.source) < 0)
            add("DanglingEdge", "edge " + e.id + " has undeclared source " + e.source);
    }

    bool squares_well_formed = true;
    for (size_t q = 0; q < squares_.size(); ++q) {
        const Square& sq = squares_[q];
        int f = edge_index(sq.first[0]), g = edge_index(sq.first[1]);
        int g2 = edge_index(sq.second[0]), f2 = edge_index(sq.second[1]);
        bool known = true;
        for (const std::string* id : {&sq.first[0], &sq.first[1], &sq.second[0], &sq.second[1]}) {
            if (edge_index(*id) < 0) {
                add("DanglingEdge", "square " + std::to_string(q) + " references unknown edge " + *id);
                known = false;
            }
        }
        if (!known) {
            squares_well_formed = false;
            continue;
        }
        std::string tag = "square " + std::to_string(q) + " (" + sq.first[0] + "," + sq.first[1] +
                          ")=(" + sq.second[0] + "," + sq.second[1] + ")";
        bool shape_ok = true;
        auto bad = [&](std::string detail) {
            add("BadColorOrder", tag + ": " + std::move(detail));
            shape_ok = false;
        };
        if (!(color_of(f) < color_of(g))) bad("first pair colors not ascending");
        if (color_of(g2) != color_of(g)) bad("second pair leading color differs from g");
        if (color_of(f2) != color_of(f)) bad("second pair trailing color differs from f");
        if (source_of(f) != range_of(g)) bad("first pair not composable");
        if (source_of(g2) != range_of(f2)) bad("second pair not composable");
        if (range_of(f) != range_of(g2)) bad("ranges of the two factorizations differ");
        if (source_of(g) != source_of(f2)) bad("sources of the two factorizations differ");
        if (!shape_ok) {
            squares_well_formed = false;
            continue;
        }
        // Count with multiplicity; duplicates detected below via counting pass.
        if (!fwd_.count({f, g})) {
            fwd_[{f, g}] = {g2, f2};
            first_square_[{f, g}] = static_cast<int>(q);
        }
        if (!bwd_.count({g2, f2})) {
            bwd_[{g2, f2}] = {f, g};
            second_square_[{g2, f2}] = static_cast<int>(q);
        }
    }

    // Condition (1): every composable bi-colored pair lies in exactly one rule.
    std::map<std::pair<int, int>, int> first_count, second_count;
    for (const Square& sq : squares_) {
        int f = edge_index(sq.first[0]), g = edge_index(sq.first[1]);
        int g2 = edge_index(sq.second[0]), f2 = edge_index(sq.second[1]);
        if (f < 0 || g < 0 || g2 < 0 || f2 < 0) continue;
        ++first_count[{f, g}];
        ++second_count[{g2, f2}];
    }
    for (int a = 0; a < edge_count(); ++a) {
        if (source_of(a) < 0) continue;
        if (edges_[a].color < 1 || edges_[a].color > k_) continue;
        for (int c = 1; c <= k_; ++c) {
            if (c == color_of(a)) continue;
            for (int b : out_edges(source_of(a), c)) {
                std::string pair_tag =
                    "composable pair (" + edges_[a].id + "," + edges_[b].id + ")";
                int n = color_of(a) < color_of(b) ? first_count[{a, b}] : second_count[{a, b}];
                if (n == 0)
                    add("MissingSquare", pair_tag + " appears in no factorization rule");
                else if (n > 1)
                    add("DuplicateSquare", pair_tag + " appears in " + std::to_string(n) +
                                               " factorization rules");
            }
        }
    }

    // Condition (2): tri-colored associativity hexagon; trivial for k <= 2.
    if (k_ >= 3 && out.empty() && squares_well_formed) {
        for (int f = 0; f < edge_count(); ++f) {
            for (int cg = 1; cg <= k_; ++cg) {
                if (cg == color_of(f)) continue;
                for (int g : out_edges(source_of(f), cg)) {
                    for (int ch = 1; ch <= k_; ++ch) {
                        if (ch == color_of(f) || ch == cg) continue;
                        for (int h : out_edges(source_of(g), ch)) {
                            // Route A: swap (2,3),(1,2),(2,3); route B: (1,2),(2,3),(1,2).
                            auto [h1, g1] = swap_pair(g, h);
                            auto [h2, f1] = swap_pair(f, h1);
                            auto [g2, f2] = swap_pair(f1, g1);
                            auto [ga, fa] = swap_pair(f, g);
                            auto [hb, fb] = swap_pair(fa, h);
                            auto [hc, gc] = swap_pair(ga, hb);
                            if (h2 != hc || g2 != gc || f2 != fb)
                                add("HexagonFailure",
                                    "triple (" + edges_[f].id + "," + edges_[g].id + "," +
                                        edges_[h].id + ") reverses inconsistently");
                        }
                    }
                }
            }
        }
    }

    report_.flags.row_finite = true;       // finite edge lists
    report_.flags.finitely_aligned = true; // finite skeletons are finitely aligned
    for (int v = 0; v < vertex_count(); ++v) {
        for (int c = 1; c <= k_; ++c) {
            if (out_edges(v, c).empty()) report_.flags.no_sources = false;
            if (in_edges(v, c).empty()) report_.flags.no_sinks = false;
        }
    }
    report_.ok = report_.violations.empty();
}

const ValidationReport& validate_skeleton(const Skeleton& sk) { return sk.validation(); }

} // namespace hrg
