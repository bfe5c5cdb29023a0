#ifndef HRG_ALIGNMENT_HPP
#define HRG_ALIGNMENT_HPP

#include <vector>

#include "hrg/path.hpp"

namespace hrg {

// One minimal common extension lambda = mu*xi = nu*eta with d(lambda) = d(mu) v d(nu).
struct MceEntry {
    Path lambda;
    Path xi;  // extension of mu
    Path eta; // extension of nu
};

struct MceSet {
    std::vector<MceEntry> entries; // duplicate-free, ordered by path_less on lambda
    bool empty() const { return entries.empty(); }
    size_t size() const { return entries.size(); }
};

// MCE(mu, nu). Distinct ranges give the empty set by convention.
MceSet mce(const Path& mu, const Path& nu);

// Decides whether F is exhaustive at v: every mu in vLambda has a common
// extension with some member of F. Search bound: join of F degrees + (1,...,1).
bool is_exhaustive(const Skeleton& sk, int v, const std::vector<Path>& F);
bool is_exhaustive(const Skeleton& sk, const std::string& v, const std::vector<Path>& F);

StructuralFlags structural_flags(const Skeleton& sk);

} // namespace hrg

#endif
