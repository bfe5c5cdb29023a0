#include "hrg/degree.hpp"

#include <algorithm>
#include <numeric>

namespace hrg {

Degree Degree::unit(int k, int i) {
    if (i < 1 || i > k) fail(Err::BadParameter, "unit coordinate out of range");
    Degree d = zero(k);
    d.c[i - 1] = 1;
    return d;
}

int Degree::sum() const { return std::accumulate(c.begin(), c.end(), 0); }

int Degree::max() const { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()); }

bool Degree::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

std::string Degree::to_string() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

static void check_dims(const Degree& a, const Degree& b, const char* op) {
    if (a.dim() != b.dim()) fail(Err::BadParameter, std::string("degree dimension mismatch in ") + op);
}

Degree operator+(const Degree& a, const Degree& b) {
    check_dims(a, b, "+");
    Degree r = a;
    for (int i = 0; i < r.dim(); ++i) r.c[i] += b.c[i];
    return r;
}

Degree operator-(const Degree& a, const Degree& b) {
    check_dims(a, b, "-");
    if (!leq(b, a)) fail(Err::DegreeOutOfRange, "degree subtraction would go negative");
    Degree r = a;
    for (int i = 0; i < r.dim(); ++i) r.c[i] -= b.c[i];
    return r;
}

Degree join(const Degree& a, const Degree& b) {
    check_dims(a, b, "join");
    Degree r = a;
    for (int i = 0; i < r.dim(); ++i) r.c[i] = std::max(r.c[i], b.c[i]);
    return r;
}

Degree meet(const Degree& a, const Degree& b) {
    check_dims(a, b, "meet");
    Degree r = a;
    for (int i = 0; i < r.dim(); ++i) r.c[i] = std::min(r.c[i], b.c[i]);
    return r;
}

bool leq(const Degree& a, const Degree& b) {
    check_dims(a, b, "leq");
    for (int i = 0; i < a.dim(); ++i)
        if (a.c[i] > b.c[i]) return false;
    return true;
}

std::vector<Degree> degrees_upto(const Degree& bound) {
    std::vector<Degree> out;
    Degree cur = Degree::zero(bound.dim());
    while (true) {
        out.push_back(cur);
        int i = bound.dim() - 1;
        while (i >= 0 && cur.c[i] == bound.c[i]) {
            cur.c[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur.c[i];
    }
    return out;
}

} // namespace hrg
