#ifndef HOC_DIFF_OP_HPP
#define HOC_DIFF_OP_HPP

#include <map>
#include <vector>

#include "hoc/bundle.hpp"
#include "hoc/poly_matrix.hpp"

namespace hoc {

// Linear differential operator between bundles, stored as a coefficient map
//   (D s)_i = sum_alpha sum_j coeffs[alpha](i,j) d^alpha s_j .
// Zero coefficient matrices are never stored, so two operators are equal iff
// their coefficient maps are equal.
class LinearDiffOp {
  public:
    Bundle source, target;
    std::map<MultiIndex, PolyMatrix, GradedLexLess> coeffs;

    LinearDiffOp() = default;
    LinearDiffOp(Bundle src, Bundle tgt) : source(std::move(src)), target(std::move(tgt)) {}

    static LinearDiffOp zero(const Bundle& src, const Bundle& tgt);
    static LinearDiffOp homomorphism(const Bundle& src, const Bundle& tgt, PolyMatrix m);
    static LinearDiffOp identity(const Bundle& b);

    int order() const;  // max |alpha| with nonzero coefficient; -1 for the zero operator
    bool is_zero() const { return coeffs.empty(); }

    // Accumulate m into the coefficient at alpha, dropping it if it becomes 0.
    void add_coeff(const MultiIndex& alpha, const PolyMatrix& m);
    const PolyMatrix* coeff(const MultiIndex& alpha) const;

    std::vector<Poly> apply(const std::vector<Poly>& section) const;

    // Top-order coefficients only.
    std::map<MultiIndex, PolyMatrix, GradedLexLess> symbol() const;

    bool operator==(const LinearDiffOp& o) const;
};

// Symbolic composition by Leibniz expansion on coefficient maps.
LinearDiffOp compose(const LinearDiffOp& outer, const LinearDiffOp& inner);
LinearDiffOp operator+(const LinearDiffOp& a, const LinearDiffOp& b);
LinearDiffOp operator-(const LinearDiffOp& a, const LinearDiffOp& b);
LinearDiffOp operator*(const Rational& c, const LinearDiffOp& a);

// From a first-order "connection-shaped" operator nabla: V -> Lambda^1 (x) V
// build the induced operator Lambda^p (x) V -> Lambda^{p+1} (x) V,
//   (nabla w)_{a_0...a_p} = nabla_{[a_0} w_{a_1...a_p]}
// (bracket normalization: average over the p+1 cyclic insertions with signs).
// p = 0 returns nabla itself.
LinearDiffOp coupled_extension(const LinearDiffOp& nabla, int p);

// Matrix of op restricted to homogeneous source degree d, mapping into
// homogeneous degree d - order. Requires constant coefficients, all of the
// same total order (a graded constant-coefficient operator) and d >= order.
// Row (mt, i) at mt*target.dim + i over monomials_of_degree(n, d - order);
// column (ms, j) likewise over monomials_of_degree(n, d).
PolyMatrix degree_slice_matrix(const LinearDiffOp& op, int d);

// Exact kernel of an abstract linear map given by the images of a finite
// basis; rows are collected from every (coordinate, monomial) pair present.
struct PolyMapKernel {
    int rank = 0;
    std::vector<QVec> kernel;  // coordinates w.r.t. the supplied basis
};
PolyMapKernel kernel_of_images(const std::vector<std::vector<Poly>>& images);

}  // namespace hoc

#endif
