#include "hrg/ktheory.hpp"

#include <algorithm>
#include <utility>

namespace hrg {

using boost::multiprecision::abs;

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) fail(Err::BadParameter, "matrix product shape mismatch");
    IntMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int t = 0; t < x.cols; ++t) {
            const BigInt& f = x.at(i, t);
            if (f == 0) continue;
            for (int j = 0; j < y.cols; ++j) out.at(i, j) += f * y.at(t, j);
        }
    return out;
}

IntMatrix sub(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        fail(Err::BadParameter, "matrix difference shape mismatch");
    IntMatrix out(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
    return out;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

IntMatrix hstack(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows != y.rows) fail(Err::BadParameter, "hstack needs equal row counts");
    IntMatrix out(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) out.at(i, x.cols + j) = y.at(i, j);
    }
    return out;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows != m.cols) fail(Err::BadParameter, "determinant needs a square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    IntMatrix w = m;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : BigInt(-w.at(n - 1, n - 1));
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const int r = m.rows, c = m.cols;
    SmithForm f{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& s = f.s;
    IntMatrix& u = f.u;
    IntMatrix& v = f.v;

    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int x = 0; x < c; ++x) std::swap(s.at(i, x), s.at(j, x));
        for (int x = 0; x < r; ++x) std::swap(u.at(i, x), u.at(j, x));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int x = 0; x < r; ++x) std::swap(s.at(x, i), s.at(x, j));
        for (int x = 0; x < c; ++x) std::swap(v.at(x, i), v.at(x, j));
    };
    auto row_add = [&](int i, int j, const BigInt& q) { // row i += q * row j
        for (int x = 0; x < c; ++x) s.at(i, x) += q * s.at(j, x);
        for (int x = 0; x < r; ++x) u.at(i, x) += q * u.at(j, x);
    };
    auto col_add = [&](int i, int j, const BigInt& q) { // col i += q * col j
        for (int x = 0; x < r; ++x) s.at(x, i) += q * s.at(x, j);
        for (int x = 0; x < c; ++x) v.at(x, i) += q * v.at(x, j);
    };
    auto row_negate = [&](int i) {
        for (int x = 0; x < c; ++x) s.at(i, x) = -s.at(i, x);
        for (int x = 0; x < r; ++x) u.at(i, x) = -u.at(i, x);
    };

    const int n = std::min(r, c);
    auto diagonalize = [&]() {
        for (int t = 0; t < n; ++t) {
            for (;;) {
                // Least absolute nonzero entry; ties resolved row-major.
                int pi = -1, pj = -1;
                BigInt best = 0;
                for (int i = t; i < r; ++i)
                    for (int j = t; j < c; ++j) {
                        if (s.at(i, j) == 0) continue;
                        BigInt a = abs(s.at(i, j));
                        if (pi < 0 || a < best) {
                            best = std::move(a);
                            pi = i;
                            pj = j;
                        }
                    }
                if (pi < 0) return; // all remaining entries are zero
                row_swap(t, pi);
                col_swap(t, pj);
                if (s.at(t, t) < 0) row_negate(t);
                bool remainder = false;
                for (int i = t + 1; i < r; ++i) {
                    if (s.at(i, t) == 0) continue;
                    row_add(i, t, -BigInt(s.at(i, t) / s.at(t, t)));
                    if (s.at(i, t) != 0) remainder = true;
                }
                for (int j = t + 1; j < c; ++j) {
                    if (s.at(t, j) == 0) continue;
                    col_add(j, t, -BigInt(s.at(t, j) / s.at(t, t)));
                    if (s.at(t, j) != 0) remainder = true;
                }
                if (!remainder) break; // row and column t are clear
            }
        }
    };

    diagonalize();
    // Divisibility chain: fold a violating successor into the pivot column
    // and rediagonalize; the running gcds shrink, so this terminates.
    for (int guard = 0; guard < 10000; ++guard) {
        int bad = -1;
        for (int t = 0; t + 1 < n; ++t) {
            if (s.at(t, t) == 0 || s.at(t + 1, t + 1) == 0) break;
            if (s.at(t + 1, t + 1) % s.at(t, t) != 0) {
                bad = t;
                break;
            }
        }
        if (bad < 0) return f;
        col_add(bad, bad + 1, 1);
        diagonalize();
    }
    fail(Err::Internal, "smith normal form failed to converge");
}

FGAbelianGroup free_group(int rank) {
    FGAbelianGroup g;
    g.free_rank = rank;
    g.to_canonical = IntMatrix::identity(rank);
    g.diag.assign(rank, 0);
    return g;
}

FGAbelianGroup cokernel(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    FGAbelianGroup g;
    g.to_canonical = f.u;
    g.diag.assign(m.rows, 0);
    const int n = std::min(m.rows, m.cols);
    for (int i = 0; i < n; ++i) g.diag[i] = f.s.at(i, i);
    for (const BigInt& d : g.diag) {
        if (d == 0)
            ++g.free_rank;
        else if (d >= 2)
            g.torsion.push_back(d);
    }
    return g;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    const int n = std::min(m.rows, m.cols);
    std::vector<int> zero_cols;
    for (int j = 0; j < m.cols; ++j)
        if (j >= n || f.s.at(j, j) == 0) zero_cols.push_back(j);
    IntMatrix b(m.cols, static_cast<int>(zero_cols.size()));
    for (int i = 0; i < m.cols; ++i)
        for (size_t j = 0; j < zero_cols.size(); ++j)
            b.at(i, static_cast<int>(j)) = f.v.at(i, zero_cols[j]);
    return b;
}

std::optional<BigInt> FGAbelianGroup::order() const {
    if (free_rank > 0) return std::nullopt;
    BigInt n = 1;
    for (const BigInt& d : torsion) n *= d;
    return n;
}

bool same_group(const FGAbelianGroup& x, const FGAbelianGroup& y) {
    return x.free_rank == y.free_rank && x.torsion == y.torsion;
}

std::string group_to_string(const FGAbelianGroup& g) {
    if (g.trivial()) return "0";
    std::string out;
    if (g.free_rank == 1)
        out = "Z";
    else if (g.free_rank > 1)
        out = "Z^" + std::to_string(g.free_rank);
    for (const BigInt& d : g.torsion) {
        if (!out.empty()) out += " (+) ";
        out += "Z/" + d.str();
    }
    return out;
}

std::optional<IntMatrix> solve_exact(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows) fail(Err::BadParameter, "solve shape mismatch");
    SmithForm f = smith_normal_form(a);
    IntMatrix rhs = mul(f.u, b); // S * (V^-1 X) = U B
    IntMatrix y(a.cols, b.cols);
    const int n = std::min(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            const BigInt& d = (i < n) ? f.s.at(i, i) : BigInt(0);
            if (i < n && d != 0) {
                if (rhs.at(i, j) % d != 0) return std::nullopt;
                y.at(i, j) = rhs.at(i, j) / d;
            } else if (rhs.at(i, j) != 0) {
                return std::nullopt;
            }
        }
    return mul(f.v, y);
}

IntMatrix column_space_basis(const IntMatrix& m) {
    IntMatrix w = m;
    int lead = 0;
    for (int row = 0; row < w.rows && lead < w.cols; ++row) {
        for (;;) {
            int p = -1;
            BigInt best = 0;
            for (int j = lead; j < w.cols; ++j) {
                if (w.at(row, j) == 0) continue;
                BigInt a = abs(w.at(row, j));
                if (p < 0 || a < best) {
                    best = std::move(a);
                    p = j;
                }
            }
            if (p < 0) break; // nothing in this row; move on
            bool remainder = false;
            for (int j = lead; j < w.cols; ++j) {
                if (j == p || w.at(row, j) == 0) continue;
                BigInt q = w.at(row, j) / w.at(row, p);
                for (int i = 0; i < w.rows; ++i) w.at(i, j) -= q * w.at(i, p);
                if (w.at(row, j) != 0) remainder = true;
            }
            if (remainder) continue;
            for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, lead), w.at(i, p));
            if (w.at(row, lead) < 0)
                for (int i = 0; i < w.rows; ++i) w.at(i, lead) = -w.at(i, lead);
            ++lead;
            break;
        }
    }
    IntMatrix out(w.rows, lead);
    for (int i = 0; i < w.rows; ++i)
        for (int j = 0; j < lead; ++j) out.at(i, j) = w.at(i, j);
    return out;
}

GroupHom::GroupHom(Presentation domain, Presentation codomain, IntMatrix map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
    if (domain_.rel.rows != domain_.n || codomain_.rel.rows != codomain_.n)
        fail(Err::BadParameter, "presentation relation shape mismatch");
    if (map_.rows != codomain_.n || map_.cols != domain_.n)
        fail(Err::BadParameter, "hom matrix shape mismatch");
    if (domain_.rel.cols > 0 &&
        !solve_exact(codomain_.rel, mul(map_, domain_.rel)))
        fail(Err::BadParameter, "hom does not map relations into relations");
}

FGAbelianGroup GroupHom::cokernel_group() const {
    return cokernel(hstack(codomain_.rel, map_));
}

FGAbelianGroup GroupHom::kernel_group() const {
    // x with map.x inside the codomain relations: project solutions of
    // [map | rel] (x;y) = 0 to x, take a lattice basis, then divide out the
    // domain relations written in that basis.
    IntMatrix solutions = kernel_basis(hstack(map_, codomain_.rel));
    IntMatrix xpart(domain_.n, solutions.cols);
    for (int i = 0; i < domain_.n; ++i)
        for (int j = 0; j < solutions.cols; ++j) xpart.at(i, j) = solutions.at(i, j);
    IntMatrix basis = column_space_basis(xpart);
    std::optional<IntMatrix> rel = solve_exact(basis, domain_.rel);
    if (!rel) fail(Err::Internal, "domain relations escape the kernel lattice");
    return cokernel(*rel);
}

namespace {

void require_rank_one(const Skeleton& sk, const ZlAction& a, const char* op) {
    sk.ensure_valid(op);
    if (sk.k() != 1) fail(Err::RankUnsupported, std::string(op) + ": base must be a 1-graph");
    if (a.skeleton_ptr() != &sk)
        fail(Err::SkeletonMismatch, std::string(op) + ": action is over a different skeleton");
    a.ensure_valid(op);
    if (a.l() != 1) fail(Err::RankUnsupported, std::string(op) + ": action must be by Z (l = 1)");
}

IntMatrix adjacency(const Skeleton& sk) {
    IntMatrix m(sk.vertex_count(), sk.vertex_count());
    for (int e = 0; e < sk.edge_count(); ++e) m.at(sk.range_of(e), sk.source_of(e)) += 1;
    return m;
}

} // namespace

AdjacencyActionPair adjacency_and_action(const Skeleton& sk, const ZlAction& a) {
    require_rank_one(sk, a, "adjacency_and_action");
    const int n = sk.vertex_count();
    AdjacencyActionPair out{adjacency(sk), IntMatrix(n, n)};
    const Automorphism& inv = a.generator_inverse(0);
    for (int v = 0; v < n; ++v) out.p.at(inv.vertex_map[v], v) = 1;
    IntMatrix mt = transpose(out.m);
    if (mul(out.p, mt) != mul(mt, out.p))
        fail(Err::Internal, "alpha_* fails to commute with M^t");
    return out;
}

KGroups graph_k_groups(const Skeleton& sk) {
    sk.ensure_valid("graph_k_groups");
    if (sk.k() != 1) fail(Err::RankUnsupported, "graph_k_groups: K-group formulas cover 1-graphs");
    if (!sk.validation().flags.no_sources) fail(Err::NoSources, "graph_k_groups: skeleton has sources");
    IntMatrix r = sub(IntMatrix::identity(sk.vertex_count()), transpose(adjacency(sk)));
    KGroups g;
    g.k0 = cokernel(r);
    g.k1 = free_group(kernel_basis(r).cols);
    g.method = "graph";
    return g;
}

KGroups crossed_k_groups_pv(const Skeleton& sk, const ZlAction& a) {
    AdjacencyActionPair ap = adjacency_and_action(sk, a);
    if (!sk.validation().flags.no_sources)
        fail(Err::NoSources, "crossed_k_groups_pv: skeleton has sources");
    const int n = sk.vertex_count();
    IntMatrix r = sub(IntMatrix::identity(n), transpose(ap.m));

    KGroups out;
    out.method = "pv";
    if (kernel_basis(r).cols == 0) {
        // K1 of the base vanishes: 1 - induced alpha_* acting on coker(1-M^t).
        Presentation pres{n, r};
        GroupHom one_minus(pres, pres, sub(IntMatrix::identity(n), ap.p));
        out.k0 = one_minus.cokernel_group();
        out.k1 = one_minus.kernel_group();
    } else if (cokernel(r).trivial()) {
        // K0 of the base vanishes: restrict alpha_* to ker(1-M^t).
        IntMatrix kb = kernel_basis(r);
        std::optional<IntMatrix> q = solve_exact(kb, mul(ap.p, kb));
        if (!q) fail(Err::Internal, "action does not preserve the kernel lattice");
        IntMatrix rq = sub(IntMatrix::identity(kb.cols), *q);
        out.k0 = free_group(kernel_basis(rq).cols);
        out.k1 = cokernel(rq);
    } else {
        fail(Err::Inapplicable, "both base K-groups are nontrivial");
    }
    return out;
}

OrbitMatrices orbit_matrices(const Skeleton& sk, const ZlAction& a) {
    require_rank_one(sk, a, "orbit_matrices");
    const int nv = sk.vertex_count();
    std::vector<int> orbit_of(nv, -1);
    OrbitMatrices out;
    for (int v = 0; v < nv; ++v) {
        if (orbit_of[v] >= 0) continue;
        std::vector<int> members = a.vertex_orbit(v);
        for (int w : members) orbit_of[w] = static_cast<int>(out.orbits.size());
        out.orbits.push_back(std::move(members));
    }
    const int no = static_cast<int>(out.orbits.size());
    out.a = IntMatrix(no, no);
    out.b = IntMatrix(no, no);
    for (int c1 = 0; c1 < no; ++c1)
        for (int c2 = 0; c2 < no; ++c2) {
            BigInt a_count = -1, b_count = -1;
            for (int v1 : out.orbits[c1]) {
                BigInt n = 0;
                for (int e = 0; e < sk.edge_count(); ++e)
                    if (sk.range_of(e) == v1 && orbit_of[sk.source_of(e)] == c2) ++n;
                if (a_count < 0)
                    a_count = n;
                else if (a_count != n)
                    fail(Err::Internal, "orbit edge count depends on the range representative");
            }
            for (int v2 : out.orbits[c2]) {
                BigInt n = 0;
                for (int e = 0; e < sk.edge_count(); ++e)
                    if (sk.source_of(e) == v2 && orbit_of[sk.range_of(e)] == c1) ++n;
                if (b_count < 0)
                    b_count = n;
                else if (b_count != n)
                    fail(Err::Internal, "orbit edge count depends on the source representative");
            }
            out.a.at(c1, c2) = a_count;
            out.b.at(c1, c2) = b_count;
        }
    return out;
}

KGroups crossed_k_groups_orbits(const Skeleton& sk, const ZlAction& a) {
    OrbitMatrices om = orbit_matrices(sk, a);
    if (!sk.validation().flags.no_sources)
        fail(Err::NoSources, "crossed_k_groups_orbits: skeleton has sources");
    IntMatrix r = sub(IntMatrix::identity(sk.vertex_count()), transpose(adjacency(sk)));
    const int no = static_cast<int>(om.orbits.size());
    IntMatrix ra = sub(IntMatrix::identity(no), transpose(om.a));
    IntMatrix rb = sub(IntMatrix::identity(no), transpose(om.b));

    KGroups out;
    out.method = "orbits";
    if (kernel_basis(r).cols == 0) {
        out.k0 = cokernel(ra);
        out.k1 = cokernel(rb);
    } else if (cokernel(r).trivial()) {
        out.k0 = free_group(kernel_basis(rb).cols);
        out.k1 = free_group(kernel_basis(ra).cols);
    } else {
        fail(Err::Inapplicable, "both base K-groups are nontrivial");
    }
    return out;
}

} // namespace hrg
