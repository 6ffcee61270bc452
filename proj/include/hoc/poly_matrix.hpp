#ifndef HOC_POLY_MATRIX_HPP
#define HOC_POLY_MATRIX_HPP

#include <vector>

#include "hoc/linalg.hpp"
#include "hoc/poly.hpp"

namespace hoc {

// Rectangular matrix of polynomials, all in the same n variables.
struct PolyMatrix {
    int rows = 0, cols = 0, n = 0;
    std::vector<Poly> e;

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int nvars)
        : rows(r), cols(c), n(nvars), e(static_cast<size_t>(r) * c, Poly(nvars)) {}

    Poly& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Poly& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    static PolyMatrix identity(int n_dim, int nvars);
    static PolyMatrix from_q(const QMatrix& m, int nvars);

    bool is_zero() const;
    bool is_constant() const;
    PolyMatrix derive(int axis) const;  // entrywise, 0-based axis
    bool operator==(const PolyMatrix& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }
};

PolyMatrix operator*(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix operator+(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix operator-(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix operator*(const Rational& c, const PolyMatrix& A);
PolyMatrix operator*(const Poly& p, const PolyMatrix& A);
std::vector<Poly> apply(const PolyMatrix& A, const std::vector<Poly>& v);
// Mixed products with rational matrices (used for basis/coordinate changes).
PolyMatrix operator*(const QMatrix& A, const PolyMatrix& B);
PolyMatrix operator*(const PolyMatrix& A, const QMatrix& B);
std::vector<Poly> apply_q(const QMatrix& A, const std::vector<Poly>& v);

// Throws std::invalid_argument if any entry is non-constant.
QMatrix to_constant(const PolyMatrix& m);

}  // namespace hoc

#endif
