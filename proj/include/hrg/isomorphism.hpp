#ifndef HRG_ISOMORPHISM_HPP
#define HRG_ISOMORPHISM_HPP

#include <map>
#include <optional>
#include <string>

#include "hrg/skeleton.hpp"

namespace hrg {

struct SkeletonIso {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
};

// Color- and square-preserving graph isomorphism via backtracking search.
// Deterministic (first isomorphism in index order); intended for small instances.
std::optional<SkeletonIso> skeleton_isomorphic(const Skeleton& a, const Skeleton& b);

} // namespace hrg

#endif
