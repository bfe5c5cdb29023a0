#include "hrg/path.hpp"

#include <algorithm>

namespace hrg {

namespace {

// Insertion sort by color; each adjacent transposition applies the unique
// square containing the bi-colored pair, so the represented path is unchanged.
void normalize_word(const Skeleton& sk, std::vector<int>& w) {
    for (size_t i = 1; i < w.size(); ++i) {
        size_t j = i;
        while (j > 0 && sk.color_of(w[j - 1]) > sk.color_of(w[j])) {
            auto [x, y] = sk.swap_pair(w[j - 1], w[j]);
            w[j - 1] = x;
            w[j] = y;
            --j;
        }
    }
}

void check_composable(const Skeleton& sk, const std::vector<int>& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (sk.source_of(w[i]) != sk.range_of(w[i + 1]))
            fail(Err::NonComposable, "edges " + sk.edge(w[i]).id + " and " + sk.edge(w[i + 1]).id +
                                         " do not compose");
    }
}

Degree word_degree(const Skeleton& sk, const std::vector<int>& w) {
    Degree d = Degree::zero(sk.k());
    for (int e : w) ++d.c[sk.color_of(e) - 1];
    return d;
}

} // namespace

Path::Path(const Skeleton& sk, int range_vertex)
    : sk_(&sk), range_(range_vertex), source_(range_vertex), degree_(Degree::zero(sk.k())) {
    sk.ensure_valid("path construction");
    if (range_vertex < 0 || range_vertex >= sk.vertex_count())
        fail(Err::UnknownVertex, "vertex index " + std::to_string(range_vertex));
}

Path::Path(const Skeleton& sk, std::vector<int> word) : sk_(&sk), word_(std::move(word)) {
    sk.ensure_valid("path construction");
    if (word_.empty()) fail(Err::BadParameter, "empty word needs an explicit vertex");
    check_composable(sk, word_);
    normalize_word(sk, word_);
    range_ = sk.range_of(word_.front());
    source_ = sk.source_of(word_.back());
    degree_ = word_degree(sk, word_);
}

Path Path::from_ids(const Skeleton& sk, const std::string& vertex,
                    const std::vector<std::string>& edge_ids) {
    if (edge_ids.empty()) return Path(sk, sk.require_vertex(vertex));
    std::vector<int> w;
    w.reserve(edge_ids.size());
    for (const std::string& id : edge_ids) w.push_back(sk.require_edge(id));
    return Path(sk, std::move(w));
}

std::vector<std::string> Path::word_ids() const {
    std::vector<std::string> ids;
    ids.reserve(word_.size());
    for (int e : word_) ids.push_back(sk_->edge(e).id);
    return ids;
}

std::string Path::to_string() const {
    if (is_vertex()) return sk_->vertex_id(range_);
    std::string s;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i) s += ".";
        s += sk_->edge(word_[i]).id;
    }
    return s;
}

bool operator==(const Path& a, const Path& b) {
    return a.sk_ == b.sk_ && a.range_ == b.range_ && a.word_ == b.word_;
}

bool path_less(const Path& a, const Path& b) {
    if (a.degree() != b.degree()) return a.degree().c < b.degree().c;
    const auto ia = a.word_ids(), ib = b.word_ids();
    if (ia != ib) return ia < ib;
    if (a.is_vertex() && b.is_vertex())
        return a.skeleton().vertex_id(a.range()) < b.skeleton().vertex_id(b.range());
    return false;
}

Path compose(const Path& a, const Path& b) {
    if (a.skeleton_ptr() != b.skeleton_ptr())
        fail(Err::SkeletonMismatch, "compose arguments live in different skeletons");
    if (a.source() != b.range())
        fail(Err::NonComposable, "s(" + a.to_string() + ") != r(" + b.to_string() + ")");
    if (a.is_vertex()) return b;
    if (b.is_vertex()) return a;
    std::vector<int> w = a.word();
    w.insert(w.end(), b.word().begin(), b.word().end());
    return Path(a.skeleton(), std::move(w));
}

namespace {

// Bubble the leftmost color-c edge to the front of w. All preceding edges have
// other colors, so every adjacent step is a bi-colored square application.
void pull_front(const Skeleton& sk, std::vector<int>& w, int color) {
    size_t p = 0;
    while (p < w.size() && sk.color_of(w[p]) != color) ++p;
    if (p == w.size()) fail(Err::Internal, "pull_front: color not present");
    while (p > 0) {
        auto [x, y] = sk.swap_pair(w[p - 1], w[p]);
        w[p - 1] = x;
        w[p] = y;
        --p;
    }
}

} // namespace

std::pair<Path, Path> factorize(const Path& lambda, const Degree& m) {
    const Skeleton& sk = lambda.skeleton();
    if (m.dim() != sk.k()) fail(Err::BadParameter, "degree dimension mismatch");
    for (int x : m.c)
        if (x < 0) fail(Err::DegreeOutOfRange, "negative degree component");
    if (!leq(m, lambda.degree()))
        fail(Err::DegreeOutOfRange,
             "factorize at " + m.to_string() + " exceeds d = " + lambda.degree().to_string());

    std::vector<int> rest = lambda.word();
    std::vector<int> head;
    for (int c = 1; c <= sk.k(); ++c) {
        for (int t = 0; t < m[c - 1]; ++t) {
            pull_front(sk, rest, c);
            head.push_back(rest.front());
            rest.erase(rest.begin());
        }
    }
    Path mu = head.empty() ? Path(sk, lambda.range()) : Path(sk, std::move(head));
    Path nu = rest.empty() ? Path(sk, mu.source()) : Path(sk, std::move(rest));
    return {std::move(mu), std::move(nu)};
}

Path segment(const Path& lambda, const Degree& m, const Degree& n) {
    if (!leq(m, n)) fail(Err::DegreeOutOfRange, "segment needs m <= n");
    auto [head, tail] = factorize(lambda, n);
    return factorize(head, m).second;
}

int vertex_at(const Path& lambda, const Degree& p) {
    return segment(lambda, p, p).range();
}

std::vector<Path> enumerate_paths(const Skeleton& sk, int v, const Degree& n) {
    sk.ensure_valid("enumerate_paths");
    if (v < 0 || v >= sk.vertex_count())
        fail(Err::UnknownVertex, "vertex index " + std::to_string(v));
    if (n.dim() != sk.k()) fail(Err::BadParameter, "degree dimension mismatch");
    for (int x : n.c)
        if (x < 0) fail(Err::DegreeOutOfRange, "negative degree component");

    // Normal forms are exactly the color-ascending edge words, so DFS over the
    // color blocks in sorted adjacency order yields vLambda^n lexicographically.
    std::vector<Path> out;
    std::vector<int> word;
    word.reserve(n.sum());
    auto dfs = [&](auto&& self, int cur, int color, int remaining) -> void {
        if (remaining == 0) {
            ++color;
            while (color <= sk.k() && n[color - 1] == 0) ++color;
            if (color > sk.k()) {
                out.push_back(word.empty() ? Path(sk, v) : Path(sk, word));
                return;
            }
            remaining = n[color - 1];
        }
        for (int e : sk.out_edges(cur, color)) {
            word.push_back(e);
            self(self, sk.source_of(e), color, remaining - 1);
            word.pop_back();
        }
    };
    dfs(dfs, v, 0, 0);
    return out;
}

std::vector<Path> enumerate_paths(const Skeleton& sk, const std::string& v, const Degree& n) {
    return enumerate_paths(sk, sk.require_vertex(v), n);
}

} // namespace hrg
