#ifndef HOC_TENSOR_FIELD_HPP
#define HOC_TENSOR_FIELD_HPP

#include <vector>

#include "hoc/poly.hpp"
#include "hoc/poly_matrix.hpp"
#include "hoc/symmetry.hpp"

namespace hoc {

// Covariant tensor field with polynomial components and values in a rank-r
// auxiliary fiber. Components are stored densely over all n^rank index
// tuples; the declared symmetry is an invariant maintained by construction
// (apply the projector => unchanged).
struct TensorField {
    int n = 0;
    SymmetryType sym;
    int fiber_rank = 1;
    std::vector<Poly> comps;  // size n^rank * fiber_rank, tuple-major

    static TensorField zero(int n, SymmetryType sym, int fiber_rank);

    int rank() const { return sym.rank(); }
    int full_dim() const { return static_cast<int>(power_ll(n, rank())); }

    Poly& at(const std::vector<int>& tuple, int e = 0);
    const Poly& at(const std::vector<int>& tuple, int e = 0) const;

    TensorField operator+(const TensorField& o) const;
    TensorField operator-(const TensorField& o) const;
    TensorField operator*(const Rational& c) const;
    bool operator==(const TensorField& o) const;
};

// Canonical idempotent onto the symmetry subspace (exact orthogonal
// projection); identity on already-symmetric input. The input's declared
// symmetry is ignored; only the rank must match.
TensorField project(SymmetryType sym, const TensorField& t);
bool is_fixed_by(SymmetryType sym, const TensorField& t);

// Average antisymmetrization over tensor positions [pos, pos+count) of a
// dense component array.
std::vector<Poly> antisymmetrize_positions(const std::vector<Poly>& comps, int n, int rank,
                                           int fiber_rank, int pos, int count);

// phi in Lambda^1 (x) Sym^k (x) E  |->  phi_{[ab]c...d} in Theta(2,k-1) (x) E.
TensorField delta_map(const TensorField& phi);

// mu in Lambda^p (x) Lambda^2 (x) E |-> -mu_{[a...bc]d} in Lambda^{p+1} (x) Lambda^1 (x) E.
TensorField nearrow_map(const TensorField& mu);
// Same map on fibers (r = 1), in symmetry-adapted coordinates; for rank and
// kernel counts.
QMatrix nearrow_fiber_matrix(int n, int p);

// Totally antisymmetric epsilon in three dimensions, 0-based indices.
int epsilon3(int a, int b, int c);

// n = 3 only: contract epsilon_a^{cd} d_c against the given slot, Euclidean
// index raising. The result is a Full-symmetry tensor of the same rank.
TensorField curl(const TensorField& t, int slot);

// Symmetry-adapted fiber coordinates.
std::vector<Poly> tensor_to_coords(const TensorField& t);               // checked membership
std::vector<Poly> tensor_to_coords_projecting(const TensorField& t);    // silently projects
TensorField tensor_from_coords(int n, SymmetryType sym, int fiber_rank,
                               const std::vector<Poly>& coords);

}  // namespace hoc

#endif
