#ifndef HRG_SKELETON_HPP
#define HRG_SKELETON_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hrg/degree.hpp"
#include "hrg/error.hpp"

namespace hrg {

struct Edge {
    std::string id;
    int color = 1; // 1..k
    std::string range;
    std::string source;
};

// Factorization rule f*g = g2*f2 with color(f) < color(g), color(g2) = color(g),
// color(f2) = color(f). Stored directionally: `first` is the color-ascending pair.
struct Square {
    std::array<std::string, 2> first;  // (f, g)
    std::array<std::string, 2> second; // (g2, f2)
};

struct StructuralFlags {
    bool finitely_aligned = true; // automatic for finite skeletons
    bool row_finite = true;
    bool no_sources = true;
    bool no_sinks = true;
};

struct Violation {
    std::string kind; // DuplicateSquare | MissingSquare | HexagonFailure | DanglingEdge | BadColorOrder
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    StructuralFlags flags;
};

// k-colored directed graph with factorization squares. Immutable after
// construction; permissibility is checked eagerly and cached in validation().
class Skeleton {
public:
    Skeleton(int k, std::vector<std::string> vertices, std::vector<Edge> edges,
             std::vector<Square> squares);

    int k() const { return k_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Square>& squares() const { return squares_; }

    const std::string& vertex_id(int v) const { return vertices_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    int color_of(int e) const { return edges_[e].color; }
    // Resolved endpoint indices; -1 when the edge references an undeclared vertex.
    int range_of(int e) const { return range_idx_[e]; }
    int source_of(int e) const { return source_idx_[e]; }

    int vertex_index(const std::string& id) const;  // -1 if unknown
    int edge_index(const std::string& id) const;    // -1 if unknown
    int require_vertex(const std::string& id) const;
    int require_edge(const std::string& id) const;

    const ValidationReport& validation() const { return report_; }
    bool ok() const { return report_.ok; }
    void ensure_valid(const char* op) const;

    // Edges e with r(e) = v (the set vLambda^{e_color}) sorted by edge id.
    const std::vector<int>& out_edges(int v, int color) const;
    // Edges e with s(e) = v (the set Lambda^{e_color}v) sorted by edge id.
    const std::vector<int>& in_edges(int v, int color) const;

    // The other factorization of the bi-colored path a*b: returns (b', a') with
    // a*b = b'*a' and colors swapped. Requires color(a) != color(b).
    std::pair<int, int> swap_pair(int a, int b) const;

    // Lookup of the square containing a composable bi-colored pair; -1 if absent.
    int square_of_first(int f, int g) const;
    int square_of_second(int g2, int f2) const;

private:
    int k_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<Square> squares_;

    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> edge_index_;
    std::vector<int> range_idx_, source_idx_;

    // (a,b) -> (b',a') keyed on edge-index pairs; fwd_ keys are color-ascending.
    std::map<std::pair<int, int>, std::pair<int, int>> fwd_, bwd_;
    std::map<std::pair<int, int>, int> first_square_, second_square_;

    std::vector<std::vector<int>> out_; // [v*k + (c-1)]
    std::vector<std::vector<int>> in_;

    ValidationReport report_;

    void build_tables_();
    void validate_();
};

// Returns the cached permissibility/structure report.
const ValidationReport& validate_skeleton(const Skeleton& sk);

} // namespace hrg

#endif
