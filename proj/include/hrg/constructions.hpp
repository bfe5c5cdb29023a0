#ifndef HRG_CONSTRUCTIONS_HPP
#define HRG_CONSTRUCTIONS_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hrg/action.hpp"
#include "hrg/alignment.hpp"
#include "hrg/isomorphism.hpp"

namespace hrg {

// Crossed-product (k+l)-graph skeleton. Colors 1..k are the base directions,
// colors k+1..k+l the Z^l directions. Vertex and edge indices of the base
// embed at the same positions, so index bookkeeping stays trivial.
struct CrossedProductResult {
    std::unique_ptr<Skeleton> skeleton;
    const Skeleton* base = nullptr;
    int l = 0;

    std::vector<int> base_edge;               // base edge index -> product edge index
    std::vector<std::vector<int>> designated; // [j][v] -> product edge index of (v, e_{j+1})
    std::vector<int> edge_to_base;            // product edge index -> base edge index, -1 for designated
    std::vector<std::pair<int, int>> edge_designated; // product edge -> (j, v), (-1,-1) for base

    // xi(lambda, m): the product path with base part lambda and Z^l part m.
    Path embed(const Path& lambda, const Degree& m) const;
    // Inverse of embed on normal forms.
    std::pair<Path, Degree> project(const Path& p) const;
};

CrossedProductResult crossed_product(const Skeleton& sk, const ZlAction& a);

struct MceCheckReport {
    bool ok = true;
    std::string counterexample;
    long long pairs_checked = 0;
};

// Verifies MCE((mu,m),(nu,n)) = MCE(mu,nu) x {m v n} for all base paths up to
// path_bound and all exponents up to zl_bound, both sides brute-forced.
MceCheckReport mce_relationship_check(const Skeleton& sk, const ZlAction& a,
                                      const Degree& path_bound, const Degree& zl_bound);

struct RecognizeResult {
    std::unique_ptr<Skeleton> base;
    std::unique_ptr<ZlAction> action;
    SkeletonIso round_trip; // crossed_product(base, action) -> input skeleton
};

// Recovers (base, action) from a skeleton whose zl_colors directions each have
// exactly one edge into and out of every vertex. Throws NonSingletonDegree if
// that hypothesis fails, Inapplicable if the round trip does not close.
RecognizeResult recognize(const Skeleton& sk, const std::vector<int>& zl_colors);

// Z^l-valued functorial cocycle, stored on edges and extended additively.
struct Cocycle {
    int l = 0;
    std::map<std::string, std::vector<int>> values;
};

// Throws BadCocycle unless every edge has an l-vector and all squares balance.
void check_cocycle(const Skeleton& sk, const Cocycle& c);

// c(f,0) = 0, c(v,e_i) = -e_i on a crossed product.
Cocycle canonical_cocycle(const CrossedProductResult& cp);

// Skew product sk x_c Z^l restricted to the box [-W,W]^l. Vertices (v,g) are
// named "v@g"; the edge (e,g) with s = (s(e),g), r = (r(e),c(e)+g) exists iff
// both tags lie in the window. Boundary vertices may be sources or sinks.
struct SkewProductResult {
    std::unique_ptr<Skeleton> skeleton;
    const Skeleton* base = nullptr;
    int l = 0;
    int window = 0;

    std::vector<std::pair<int, std::vector<int>>> vertex_cell; // (base vertex, tag)
    std::vector<std::pair<int, std::vector<int>>> edge_cell;   // (base edge, source tag)

    int vertex_at(int base_vertex, const std::vector<int>& tag) const; // -1 if absent
    int edge_at(int base_edge, const std::vector<int>& tag) const;
};

SkewProductResult skew_product(const Skeleton& sk, const Cocycle& c, int window);

// Cartesian product sk x Delta_l on the same box window. Base edges keep their
// colors; color k+j edges step the tag by e_j without moving the base vertex.
struct CartesianDeltaResult {
    std::unique_ptr<Skeleton> skeleton;
    const Skeleton* base = nullptr;
    int l = 0;
    int window = 0;

    int vertex_at(int base_vertex, const std::vector<int>& tag) const;
    int base_edge_at(int base_edge, const std::vector<int>& tag) const;
    int vertical_at(int base_vertex, int j, const std::vector<int>& tag) const; // j 1-based
};

CartesianDeltaResult cartesian_with_delta(const Skeleton& sk, int l, int window);

struct TakaiReport {
    bool ok = true;
    std::string first_failure;
    long long cells_checked = 0;
    long long products_checked = 0;
};

// Finite-window Takai duality: rho((lambda,m),n) = (alpha_{n-m}(lambda),(n-m,n))
// must map the skew product of the crossed product bijectively onto sk x Delta_l,
// preserving r, s, degrees, and all in-window products.
TakaiReport takai_check(const Skeleton& sk, const ZlAction& a, int window);

} // namespace hrg

#endif
