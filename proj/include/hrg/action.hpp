#ifndef HRG_ACTION_HPP
#define HRG_ACTION_HPP

#include <string>
#include <vector>

#include "hrg/path.hpp"

namespace hrg {

// Graph automorphism stored by index; -1 marks an unresolved image (reported
// by validation rather than rejected at parse time).
struct Automorphism {
    std::vector<int> vertex_map;
    std::vector<int> edge_map;
};

struct ActionReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Action of Z^l on a k-graph by l pairwise-commuting automorphisms. l = 0 is
// the trivial action (used by the plain-graph code paths).
class ZlAction {
public:
    ZlAction(const Skeleton& sk, std::vector<Automorphism> generators);
    static ZlAction identity(const Skeleton& sk, int l);
    static ZlAction trivial(const Skeleton& sk) { return identity(sk, 0); }

    const Skeleton& skeleton() const { return *sk_; }
    const Skeleton* skeleton_ptr() const { return sk_; }
    int l() const { return static_cast<int>(gens_.size()); }

    const Automorphism& generator(int j) const { return gens_[j]; }
    const Automorphism& generator_inverse(int j) const;

    const ActionReport& validation() const { return report_; }
    bool ok() const { return report_.ok; }
    void ensure_valid(const char* op) const;

    // alpha_m for m in Z^l, via commuting generator powers.
    int apply_vertex(const std::vector<int>& m, int v) const;
    int apply_edge(const std::vector<int>& m, int e) const;
    Path apply(const std::vector<int>& m, const Path& p) const;

    std::vector<int> vertex_orbit(int v) const; // sorted, closed under gens and inverses
    long long action_order() const; // least N >= 1 with all generator N-th powers = id

private:
    const Skeleton* sk_;
    std::vector<Automorphism> gens_;
    std::vector<Automorphism> invs_;
    ActionReport report_;

    void validate_();
};

const ActionReport& validate_action(const Skeleton& sk, const ZlAction& a);

} // namespace hrg

#endif
