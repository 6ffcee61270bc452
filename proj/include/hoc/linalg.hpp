#ifndef HOC_LINALG_HPP
#define HOC_LINALG_HPP

#include <optional>
#include <vector>

#include "hoc/rational.hpp"

namespace hoc {

using QVec = std::vector<Rational>;

// Dense rational matrix, row-major.
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static QMatrix identity(int n);
    QMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

QMatrix operator*(const QMatrix& A, const QMatrix& B);
QMatrix operator+(const QMatrix& A, const QMatrix& B);
QMatrix operator-(const QMatrix& A, const QMatrix& B);
QMatrix operator*(const Rational& c, const QMatrix& A);
QVec matvec(const QMatrix& A, const QVec& v);

// Row echelon data from fraction-free (Bareiss) elimination over cleared
// integer rows. Pivot choice is deterministic: first nonzero row per column.
struct Echelon {
    QMatrix m;                    // upper echelon, integer entries
    std::vector<int> pivot_cols;  // one per pivot row, increasing
    int rank = 0;
};

Echelon row_echelon(QMatrix M);
int rank(const QMatrix& M);
// Exact basis of {x : Mx = 0}; rank + basis.size() == cols.
std::vector<QVec> kernel_basis(const QMatrix& M);
// One exact solution of Mx = b (free variables set to 0), or nullopt.
std::optional<QVec> solve(const QMatrix& M, const QVec& b);
std::optional<QMatrix> inverse(const QMatrix& M);

// Stack matrices vertically (same cols).
QMatrix vstack(const QMatrix& A, const QMatrix& B);
// Columns -> matrix.
QMatrix from_columns(const std::vector<QVec>& cols, int rows);

}  // namespace hoc

#endif
