#ifndef HRG_GALLERY_HPP
#define HRG_GALLERY_HPP

#include <memory>
#include <string>
#include <vector>

#include "hrg/action.hpp"

namespace hrg {

// Named small instance used by tests, docs and the CLI. Window truncations of
// infinite graphs are marked boundary_incomplete: they may have sources, sinks
// or composable boundary pairs without squares, and the dynamics checks
// refuse them.
struct GalleryInstance {
    std::string name;
    std::unique_ptr<Skeleton> skeleton;
    std::unique_ptr<ZlAction> action; // null for bare skeletons
    bool boundary_incomplete = false;
    std::string note;
};

// One vertex with m color-1 loops; action cycles the loops.
GalleryInstance m_loops(int m);

// Directed n-cycle; action rotates vertices and edges one step.
GalleryInstance cycle_with_rotation(int n);

// Two-colored window of the two-sided line with the shift-by-step action
// pre-applied: solid edges f_n from v_{n+1} to v_n, dashed edges d_n from
// v_{n-step} to v_n, on vertices v_{-radius}..v_{radius}. Inherently
// boundary-incomplete: the outermost composable mixed pairs have no squares.
GalleryInstance line_window_shift(int radius, int step);

// Lattice-interval k-graph on [0,n]^k (one-sided lattice window).
GalleryInstance omega_window(int k, int n);

// Lattice-interval l-graph on [-w,w]^l (two-sided lattice window).
GalleryInstance delta_window(int l, int w);

// Two-row Bratteli-style 1-graph: levels 0..levels, bundle m between levels
// m-1 and m carries a^m_{ij} parallel edges, where A_m multiplies the
// continued-fraction matrices [[c_i,1],[1,0]] for i in (T_{m-1}, T_m].
// The action cycles each bundle and fixes vertices.
GalleryInstance rank2_bratteli(const std::vector<int>& c, int levels);

// The instances carrying actions, used by cross-module sweeps.
std::vector<GalleryInstance> action_instances();

} // namespace hrg

#endif
