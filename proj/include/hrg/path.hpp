#ifndef HRG_PATH_HPP
#define HRG_PATH_HPP

#include <string>
#include <vector>

#include "hrg/skeleton.hpp"

namespace hrg {

// Path in the k-graph determined by a skeleton, stored as the color-ascending
// normal form of its edge word. Degree-0 paths are vertices (id_v).
class Path {
public:
    Path(const Skeleton& sk, int range_vertex); // id_v
    Path(const Skeleton& sk, std::vector<int> word); // normalizes, word nonempty
    static Path from_ids(const Skeleton& sk, const std::string& vertex,
                         const std::vector<std::string>& edge_ids);

    const Skeleton& skeleton() const { return *sk_; }
    const Skeleton* skeleton_ptr() const { return sk_; }
    int range() const { return range_; }
    int source() const { return source_; }
    const std::vector<int>& word() const { return word_; }
    const Degree& degree() const { return degree_; }
    int length() const { return static_cast<int>(word_.size()); }
    bool is_vertex() const { return word_.empty(); }

    std::vector<std::string> word_ids() const;
    std::string to_string() const; // vertex id, or edge ids joined by '.'

    friend bool operator==(const Path& a, const Path& b);
    friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }

private:
    const Skeleton* sk_;
    int range_;
    int source_;
    std::vector<int> word_;
    Degree degree_;
};

// Deterministic order: by degree (lexicographic), then word edge ids, then range id.
bool path_less(const Path& a, const Path& b);

Path compose(const Path& a, const Path& b);
std::pair<Path, Path> factorize(const Path& lambda, const Degree& m);
Path segment(const Path& lambda, const Degree& m, const Degree& n);

// The vertex lambda(p) visited at position p, as a vertex index.
int vertex_at(const Path& lambda, const Degree& p);

// All of vLambda^n in lexicographic-by-edge-id order.
std::vector<Path> enumerate_paths(const Skeleton& sk, int v, const Degree& n);
std::vector<Path> enumerate_paths(const Skeleton& sk, const std::string& v, const Degree& n);

} // namespace hrg

#endif
