#include "hrg/alignment.hpp"

#include <algorithm>

namespace hrg {

MceSet mce(const Path& mu, const Path& nu) {
    if (mu.skeleton_ptr() != nu.skeleton_ptr())
        fail(Err::SkeletonMismatch, "mce arguments live in different skeletons");
    const Skeleton& sk = mu.skeleton();
    MceSet out;
    if (mu.range() != nu.range()) return out;

    const Degree top = join(mu.degree(), nu.degree());
    for (const Path& xi : enumerate_paths(sk, mu.source(), top - mu.degree())) {
        Path lambda = compose(mu, xi);
        if (segment(lambda, Degree::zero(sk.k()), nu.degree()) != nu) continue;
        Path eta = segment(lambda, nu.degree(), lambda.degree());
        out.entries.push_back({std::move(lambda), xi, std::move(eta)});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const MceEntry& a, const MceEntry& b) { return path_less(a.lambda, b.lambda); });
    return out;
}

bool is_exhaustive(const Skeleton& sk, int v, const std::vector<Path>& F) {
    sk.ensure_valid("is_exhaustive");
    if (v < 0 || v >= sk.vertex_count())
        fail(Err::UnknownVertex, "vertex index " + std::to_string(v));
    Degree bound = Degree::zero(sk.k());
    for (const Path& nu : F) {
        if (nu.skeleton_ptr() != &sk)
            fail(Err::SkeletonMismatch, "exhaustive-set member lives in another skeleton");
        if (nu.range() != v)
            fail(Err::RangeMismatch, "exhaustive-set member " + nu.to_string() +
                                         " does not have range " + sk.vertex_id(v));
        bound = join(bound, nu.degree());
    }
    bound = bound + Degree::constant(sk.k(), 1);

    for (const Degree& d : degrees_upto(bound)) {
        for (const Path& muPath : enumerate_paths(sk, v, d)) {
            bool covered = false;
            for (const Path& nu : F) {
                if (!mce(muPath, nu).empty()) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    }
    return true;
}

bool is_exhaustive(const Skeleton& sk, const std::string& v, const std::vector<Path>& F) {
    return is_exhaustive(sk, sk.require_vertex(v), F);
}

StructuralFlags structural_flags(const Skeleton& sk) { return sk.validation().flags; }

} // namespace hrg
