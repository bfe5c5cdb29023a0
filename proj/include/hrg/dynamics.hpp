#ifndef HRG_DYNAMICS_HPP
#define HRG_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hrg/action.hpp"

namespace hrg {

// Exact cofinality decision. When cofinal is false, stuck_vertices is a
// nonempty set of vertices disjoint from the orbit-reachable set of
// failing_vertex in which an infinite path can stay forever.
struct CofinalityReport {
    bool cofinal = true;
    std::string failing_vertex;
    std::vector<std::string> stuck_vertices;
};

CofinalityReport alpha_cofinal(const Skeleton& sk, const ZlAction& a);

enum class Periodicity { AperiodicWitnessed, PeriodicPairFound, UndecidedAtDepth };

// One row of the witness table: a depth-bound prefix from `vertex` whose
// shifts by p and q disagree inside the overlap window.
struct SeparationWitness {
    std::string vertex;
    Degree p, q;
    std::string path;
};

// Pair ((p,m),(q,n)) at `at` (a vertex id, or a cylinder path for the
// C*-view) for which every inspected prefix is shift-periodic.
struct PeriodicPair {
    std::string at;
    Degree p;
    std::vector<int> m;
    Degree q;
    std::vector<int> n;
    int depth = 0;
};

struct AperiodicityReport {
    Periodicity state = Periodicity::UndecidedAtDepth;
    int pair_bound = 0;
    int depth = 0;
    std::vector<SeparationWitness> witnesses; // one per (vertex, pair) when witnessed
    std::optional<PeriodicPair> pair;         // set when periodic
};

// Finite-order actions (l >= 1) are decided immediately: alpha_{N e_1} = id
// makes ((0,0),(0,N e_1)) periodic everywhere. l = 0 is the bounded search
// over pairs |p|,|q| <= pair_bound and prefixes of degree depth*(1,...,1).
AperiodicityReport alpha_aperiodic_bounded(const Skeleton& sk, const ZlAction& a,
                                           int pair_bound = 3, int depth = 6);

enum class Verdict { Simple, NotSimple, Undecided };

struct SimplicityReport {
    CofinalityReport cofinality;
    AperiodicityReport aperiodicity;
    Verdict verdict = Verdict::Undecided;
    std::string notes;
};

SimplicityReport simplicity(const Skeleton& sk, const ZlAction& a, int pair_bound = 3,
                            int depth = 6);

// Runs the trivial-action checks directly on the crossed product and compares
// verdict classes against the base-side checks.
bool crossed_graph_equivalence_check(const Skeleton& sk, const ZlAction& a, int depth = 6);

// Dynamical-system reading of the same diagnostics: topological freeness is
// the cylinder-quantified aperiodicity search (every cylinder of degree
// <= (1,...,1), separating extension behind it), irreducibility is cofinality.
struct CstarView {
    Periodicity topologically_free = Periodicity::UndecidedAtDepth;
    std::optional<PeriodicPair> periodic_pair; // `at` holds the cylinder
    std::vector<SeparationWitness> witnesses;  // `vertex` holds the cylinder
    bool irreducible = false;
};

CstarView cstar_view(const Skeleton& sk, const ZlAction& a, int pair_bound = 3,
                     int depth = 6);

} // namespace hrg

#endif
