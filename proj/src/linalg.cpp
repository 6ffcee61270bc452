#include "hoc/linalg.hpp"

#include <stdexcept>

namespace hoc {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

QMatrix operator*(const QMatrix& A, const QMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("QMatrix: dimension mismatch in product");
    QMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Rational& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Rational& bkj = B.at(k, j);
                if (bkj == 0) continue;
                C.at(i, j) += aik * bkj;
            }
        }
    return C;
}

QMatrix operator+(const QMatrix& A, const QMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
}

QMatrix operator-(const QMatrix& A, const QMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
}

QMatrix operator*(const Rational& c, const QMatrix& A) {
    QMatrix C = A;
    for (auto& x : C.a) x *= c;
    return C;
}

QVec matvec(const QMatrix& A, const QVec& v) {
    if (static_cast<int>(v.size()) != A.cols) throw std::invalid_argument("matvec: size mismatch");
    QVec out(static_cast<size_t>(A.rows), Rational(0));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            const Rational& x = A.at(i, j);
            if (x == 0 || v[j] == 0) continue;
            out[i] += x * v[j];
        }
    return out;
}

namespace {

// Multiply each row through by the lcm of its denominators.
void clear_denominators(QMatrix& M) {
    for (int i = 0; i < M.rows; ++i) {
        mpz_class l(1);
        for (int j = 0; j < M.cols; ++j) {
            const mpz_class& d = M.at(i, j).get_den();
            if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        if (l != 1)
            for (int j = 0; j < M.cols; ++j) M.at(i, j) *= Rational(l);
    }
}

}  // namespace

Echelon row_echelon(QMatrix M) {
    clear_denominators(M);
    Echelon e;
    int r = 0;
    Rational prev(1);
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int piv = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
        const Rational pv = M.at(r, c);
        for (int i = r + 1; i < M.rows; ++i) {
            const Rational mic = M.at(i, c);
            for (int j = c; j < M.cols; ++j) {
                // Bareiss step: exact integer division by the previous pivot.
                Rational t = M.at(i, j) * pv - M.at(r, j) * mic;
                M.at(i, j) = t / prev;
            }
            M.at(i, c) = 0;
        }
        prev = pv;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    e.m = std::move(M);
    return e;
}

int rank(const QMatrix& M) { return row_echelon(M).rank; }

std::vector<QVec> kernel_basis(const QMatrix& M) {
    Echelon e = row_echelon(M);
    const int n = M.cols;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<QVec> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        QVec x(static_cast<size_t>(n), Rational(0));
        x[static_cast<size_t>(f)] = 1;
        for (int i = e.rank - 1; i >= 0; --i) {
            const int pc = e.pivot_cols[static_cast<size_t>(i)];
            Rational s(0);
            for (int j = pc + 1; j < n; ++j) {
                if (e.m.at(i, j) == 0 || x[static_cast<size_t>(j)] == 0) continue;
                s += e.m.at(i, j) * x[static_cast<size_t>(j)];
            }
            x[static_cast<size_t>(pc)] = -s / e.m.at(i, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<QVec> solve(const QMatrix& M, const QVec& b) {
    if (static_cast<int>(b.size()) != M.rows) throw std::invalid_argument("solve: size mismatch");
    QMatrix aug(M.rows, M.cols + 1);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols) = b[static_cast<size_t>(i)];
    }
    Echelon e = row_echelon(std::move(aug));
    for (int c : e.pivot_cols)
        if (c == M.cols) return std::nullopt;  // inconsistent
    QVec x(static_cast<size_t>(M.cols), Rational(0));
    for (int i = e.rank - 1; i >= 0; --i) {
        const int pc = e.pivot_cols[static_cast<size_t>(i)];
        Rational s = e.m.at(i, M.cols);
        for (int j = pc + 1; j < M.cols; ++j) {
            if (e.m.at(i, j) == 0 || x[static_cast<size_t>(j)] == 0) continue;
            s -= e.m.at(i, j) * x[static_cast<size_t>(j)];
        }
        x[static_cast<size_t>(pc)] = s / e.m.at(i, pc);
    }
    return x;
}

std::optional<QMatrix> inverse(const QMatrix& M) {
    if (M.rows != M.cols) throw std::invalid_argument("inverse: non-square matrix");
    QMatrix inv(M.rows, M.cols);
    for (int j = 0; j < M.cols; ++j) {
        QVec e(static_cast<size_t>(M.rows), Rational(0));
        e[static_cast<size_t>(j)] = 1;
        auto x = solve(M, e);
        if (!x) return std::nullopt;
        for (int i = 0; i < M.rows; ++i) inv.at(i, j) = (*x)[static_cast<size_t>(i)];
    }
    // solve() leaves free variables at zero, which only happens when M is
    // singular; verify to be safe.
    if (!(M * inv == QMatrix::identity(M.rows))) return std::nullopt;
    return inv;
}

QMatrix vstack(const QMatrix& A, const QMatrix& B) {
    if (A.cols != B.cols) throw std::invalid_argument("vstack: column mismatch");
    QMatrix C(A.rows + B.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
    return C;
}

QMatrix from_columns(const std::vector<QVec>& cols, int rows) {
    QMatrix M(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw std::invalid_argument("from_columns: bad column");
        for (int i = 0; i < rows; ++i) M.at(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
    }
    return M;
}

}  // namespace hoc
