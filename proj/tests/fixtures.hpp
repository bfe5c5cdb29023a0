#ifndef HRG_TESTS_FIXTURES_HPP
#define HRG_TESTS_FIXTURES_HPP

#include <memory>

#include "hrg/skeleton.hpp"

namespace hrg::fixtures {

// One vertex, blue loops a and b (color 1), red loop t (color 2), with the
// swapping squares a.t = t.b and b.t = t.a.
inline std::unique_ptr<Skeleton> two_color_swap() {
    return std::make_unique<Skeleton>(
        2, std::vector<std::string>{"v"},
        std::vector<Edge>{{"a", 1, "v", "v"}, {"b", 1, "v", "v"}, {"t", 2, "v", "v"}},
        std::vector<Square>{{{"a", "t"}, {"t", "b"}}, {{"b", "t"}, {"t", "a"}}});
}

// Same graph with commuting squares a.t = t.a and b.t = t.b.
inline std::unique_ptr<Skeleton> two_color_commuting() {
    return std::make_unique<Skeleton>(
        2, std::vector<std::string>{"v"},
        std::vector<Edge>{{"a", 1, "v", "v"}, {"b", 1, "v", "v"}, {"t", 2, "v", "v"}},
        std::vector<Square>{{{"a", "t"}, {"t", "a"}}, {{"b", "t"}, {"t", "b"}}});
}

// Three colors with non-commuting swap patterns: the permutation induced by b
// is (a1 a2), the one induced by c is (a1 a3), so the two hexagon routes of
// the triple (a_i, b, c) disagree.
inline std::unique_ptr<Skeleton> hexagon_breaker() {
    return std::make_unique<Skeleton>(
        3, std::vector<std::string>{"v"},
        std::vector<Edge>{{"a1", 1, "v", "v"},
                          {"a2", 1, "v", "v"},
                          {"a3", 1, "v", "v"},
                          {"b", 2, "v", "v"},
                          {"c", 3, "v", "v"}},
        std::vector<Square>{{{"a1", "b"}, {"b", "a2"}},
                            {{"a2", "b"}, {"b", "a1"}},
                            {{"a3", "b"}, {"b", "a3"}},
                            {{"a1", "c"}, {"c", "a3"}},
                            {{"a2", "c"}, {"c", "a2"}},
                            {{"a3", "c"}, {"c", "a1"}},
                            {{"b", "c"}, {"c", "b"}}});
}

// As hexagon_breaker but with commuting c-squares, so all hexagons close.
inline std::unique_ptr<Skeleton> three_color_ok() {
    return std::make_unique<Skeleton>(
        3, std::vector<std::string>{"v"},
        std::vector<Edge>{{"a1", 1, "v", "v"},
                          {"a2", 1, "v", "v"},
                          {"a3", 1, "v", "v"},
                          {"b", 2, "v", "v"},
                          {"c", 3, "v", "v"}},
        std::vector<Square>{{{"a1", "b"}, {"b", "a2"}},
                            {{"a2", "b"}, {"b", "a1"}},
                            {{"a3", "b"}, {"b", "a3"}},
                            {{"a1", "c"}, {"c", "a1"}},
                            {{"a2", "c"}, {"c", "a2"}},
                            {{"a3", "c"}, {"c", "a3"}},
                            {{"b", "c"}, {"c", "b"}}});
}

} // namespace hrg::fixtures

#endif
