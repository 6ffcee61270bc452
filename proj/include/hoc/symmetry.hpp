#ifndef HOC_SYMMETRY_HPP
#define HOC_SYMMETRY_HPP

#include <string>

#include "hoc/linalg.hpp"
#include "hoc/multiindex.hpp"

namespace hoc {

// Symmetry type of a covariant tensor fiber.
//
//   Full(rank)         no symmetry
//   Lambda(p)          antisymmetric in all p indices
//   Sym(q)             symmetric in all q indices
//   LambdaSym(p,q)     antisym block of p, then sym block of q
//   LambdaLambda(p,q)  two antisym blocks
//   Theta(p,q)         LambdaSym(p,q) with antisymmetrization over the first
//                      p+1 indices vanishing
//   Xi(p,q)            LambdaLambda(p,q) with the same extra condition
//
// Theta(1,q) is the same subspace as Sym(q+1) and Theta(p,0)/Xi(p,0) the same
// as Lambda(p); the factories canonicalize these so each subspace has one
// coordinate system.
struct SymmetryType {
    enum class Kind { Full, Lambda, Sym, LambdaSym, LambdaLambda, Theta, Xi };
    Kind kind = Kind::Full;
    int p = 0, q = 0;

    static SymmetryType full(int rank);
    static SymmetryType lambda(int p);
    static SymmetryType sym(int q);
    static SymmetryType lambda_sym(int p, int q);
    static SymmetryType lambda_lambda(int p, int q);
    static SymmetryType theta(int p, int q);
    static SymmetryType xi(int p, int q);

    int rank() const;
    std::string str() const;
    bool operator==(const SymmetryType& o) const {
        return kind == o.kind && p == o.p && q == o.q;
    }
    bool operator<(const SymmetryType& o) const;
};

// Exact basis and coordinates for the symmetry subspace of (R^n)^{otimes rank}.
//
// basis:  full_dim x dim, columns span the subspace.
// coords: dim x full_dim with coords*basis == Id; for a vector outside the
//         subspace, coords gives the orthogonal projection's coordinates
//         (standard componentwise pairing), so basis*coords is the canonical
//         idempotent projector.
struct SymmetryTable {
    int n = 0;
    SymmetryType sym;
    int rank = 0;
    int full_dim = 0;
    QMatrix basis;
    QMatrix coords;
    int dim() const { return basis.cols; }
};

// Cached; safe under concurrent first access.
const SymmetryTable& symmetry_table(int n, SymmetryType sym);

// Exact fiber dimension of the symmetry subspace.
int symmetry_dimension(SymmetryType sym, int n);

}  // namespace hoc

#endif
