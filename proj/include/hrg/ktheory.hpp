#ifndef HRG_KTHEORY_HPP
#define HRG_KTHEORY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hrg/action.hpp"

namespace hrg {

using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> a; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static IntMatrix identity(int n);

    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix sub(const IntMatrix& x, const IntMatrix& y);
IntMatrix transpose(const IntMatrix& m);
IntMatrix hstack(const IntMatrix& x, const IntMatrix& y);
BigInt determinant(const IntMatrix& m); // fraction-free elimination

// S = U * M * V with U, V unimodular, S diagonal, nonnegative, d_i | d_{i+1}.
// Pivot: least absolute nonzero entry, ties row-major.
struct SmithForm {
    IntMatrix u, s, v;
};
SmithForm smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group in canonical form, with enough of the
// presenting transform kept to map ambient vectors to canonical coordinates.
struct FGAbelianGroup {
    int free_rank = 0;
    std::vector<BigInt> torsion; // entries >= 2, divisibility-ordered
    IntMatrix to_canonical;      // U of the presenting SNF (ambient x ambient)
    std::vector<BigInt> diag;    // per canonical coordinate: d_i, or 0 for free

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    // Finite order, or nullopt when free_rank > 0.
    std::optional<BigInt> order() const;
};

bool same_group(const FGAbelianGroup& x, const FGAbelianGroup& y); // canonical equality
std::string group_to_string(const FGAbelianGroup& g);              // "0", "Z^2 (+) Z/4", ...

FGAbelianGroup cokernel(const IntMatrix& m); // Z^rows / column span
IntMatrix kernel_basis(const IntMatrix& m);  // columns a lattice basis of ker
FGAbelianGroup free_group(int rank);

// Exact integer solve of A * X = B; nullopt when no integer solution exists.
std::optional<IntMatrix> solve_exact(const IntMatrix& a, const IntMatrix& b);

// Lattice basis of the column span (column echelon; may have fewer columns).
IntMatrix column_space_basis(const IntMatrix& m);

// Z^n modulo the column span of rel (rel is n x m).
struct Presentation {
    int n = 0;
    IntMatrix rel;
};

// Homomorphism between presented groups given by an ambient matrix.
// Construction verifies the certificate: map * rel(domain) lands in the
// column span of rel(codomain).
class GroupHom {
public:
    GroupHom(Presentation domain, Presentation codomain, IntMatrix map);

    const Presentation& domain() const { return domain_; }
    const Presentation& codomain() const { return codomain_; }
    const IntMatrix& matrix() const { return map_; }

    FGAbelianGroup cokernel_group() const; // codomain / image
    FGAbelianGroup kernel_group() const;   // preimage lattice / domain relations

private:
    Presentation domain_, codomain_;
    IntMatrix map_;
};

// M_E(v,w) = #{e : r(e)=v, s(e)=w} and the permutation matrix of
// alpha_*: delta_v -> delta_{alpha^{-1}(v)}; they commute with M_E^t.
struct AdjacencyActionPair {
    IntMatrix m;
    IntMatrix p;
};
AdjacencyActionPair adjacency_and_action(const Skeleton& sk, const ZlAction& a);

struct KGroups {
    FGAbelianGroup k0, k1;
    std::string method;
};

KGroups graph_k_groups(const Skeleton& sk); // k = 1, no sources

// K-groups of the crossed product via the induced map on the base K-groups;
// needs exactly one of K0, K1 of the base to be trivial.
KGroups crossed_k_groups_pv(const Skeleton& sk, const ZlAction& a);

// Orbit-indexed edge counts: A over sources per range representative,
// B over ranges per source representative; verified representative-free.
struct OrbitMatrices {
    std::vector<std::vector<int>> orbits; // canonical order, members sorted
    IntMatrix a, b;
};
OrbitMatrices orbit_matrices(const Skeleton& sk, const ZlAction& a);

KGroups crossed_k_groups_orbits(const Skeleton& sk, const ZlAction& a);

} // namespace hrg

#endif
