#ifndef HRG_DEGREE_HPP
#define HRG_DEGREE_HPP

#include <string>
#include <vector>

#include "hrg/error.hpp"

namespace hrg {

// Element of N^k: the degree functor value d(lambda).
struct Degree {
    std::vector<int> c;

    Degree() = default;
    explicit Degree(std::vector<int> coords) : c(std::move(coords)) {}

    static Degree zero(int k) { return Degree(std::vector<int>(k, 0)); }
    static Degree unit(int k, int i); // e_i, 1-based i
    static Degree constant(int k, int value) { return Degree(std::vector<int>(k, value)); }

    int dim() const { return static_cast<int>(c.size()); }
    int operator[](int i) const { return c[i]; }
    int sum() const;
    int max() const;
    bool is_zero() const;

    std::string to_string() const; // "(1,0,2)"

    friend bool operator==(const Degree& a, const Degree& b) { return a.c == b.c; }
    friend bool operator!=(const Degree& a, const Degree& b) { return a.c != b.c; }
};

Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a, const Degree& b); // componentwise, requires a >= b
Degree join(const Degree& a, const Degree& b);
Degree meet(const Degree& a, const Degree& b);
bool leq(const Degree& a, const Degree& b); // componentwise partial order

// All degrees m with 0 <= m <= bound, in lexicographic order.
std::vector<Degree> degrees_upto(const Degree& bound);

} // namespace hrg

#endif
