#include "hoc/poly_matrix.hpp"

#include <stdexcept>

namespace hoc {

PolyMatrix PolyMatrix::identity(int n_dim, int nvars) {
    PolyMatrix m(n_dim, n_dim, nvars);
    for (int i = 0; i < n_dim; ++i) m.at(i, i) = Poly::constant(nvars, Rational(1));
    return m;
}

PolyMatrix PolyMatrix::from_q(const QMatrix& q, int nvars) {
    PolyMatrix m(q.rows, q.cols, nvars);
    for (int i = 0; i < q.rows; ++i)
        for (int j = 0; j < q.cols; ++j)
            if (q.at(i, j) != 0) m.at(i, j) = Poly::constant(nvars, q.at(i, j));
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_constant() const {
    for (const auto& p : e)
        if (!p.is_constant()) return false;
    return true;
}

PolyMatrix PolyMatrix::derive(int axis) const {
    PolyMatrix m(rows, cols, n);
    for (size_t i = 0; i < e.size(); ++i) m.e[i] = e[i].derive(axis);
    return m;
}

PolyMatrix operator*(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix C(A.rows, B.cols, A.n ? A.n : B.n);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Poly& aik = A.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Poly& bkj = B.at(k, j);
                if (bkj.is_zero()) continue;
                C.at(i, j) += aik * bkj;
            }
        }
    return C;
}

PolyMatrix operator+(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("PolyMatrix: shape mismatch");
    PolyMatrix C = A;
    for (size_t i = 0; i < C.e.size(); ++i) C.e[i] += B.e[i];
    return C;
}

PolyMatrix operator-(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("PolyMatrix: shape mismatch");
    PolyMatrix C = A;
    for (size_t i = 0; i < C.e.size(); ++i) C.e[i] -= B.e[i];
    return C;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& A) {
    PolyMatrix C = A;
    for (auto& p : C.e) p *= c;
    return C;
}

PolyMatrix operator*(const Poly& p, const PolyMatrix& A) {
    PolyMatrix C(A.rows, A.cols, A.n);
    for (size_t i = 0; i < A.e.size(); ++i) C.e[i] = p * A.e[i];
    return C;
}

std::vector<Poly> apply(const PolyMatrix& A, const std::vector<Poly>& v) {
    if (static_cast<int>(v.size()) != A.cols) throw std::invalid_argument("PolyMatrix apply: size mismatch");
    std::vector<Poly> out(static_cast<size_t>(A.rows), Poly(A.n));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            const Poly& aij = A.at(i, j);
            if (aij.is_zero() || v[static_cast<size_t>(j)].is_zero()) continue;
            out[static_cast<size_t>(i)] += aij * v[static_cast<size_t>(j)];
        }
    return out;
}

PolyMatrix operator*(const QMatrix& A, const PolyMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("QMatrix*PolyMatrix: dimension mismatch");
    PolyMatrix C(A.rows, B.cols, B.n);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Rational& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Poly& bkj = B.at(k, j);
                if (bkj.is_zero()) continue;
                C.at(i, j) += bkj * aik;
            }
        }
    return C;
}

PolyMatrix operator*(const PolyMatrix& A, const QMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("PolyMatrix*QMatrix: dimension mismatch");
    PolyMatrix C(A.rows, B.cols, A.n);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Poly& aik = A.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Rational& bkj = B.at(k, j);
                if (bkj == 0) continue;
                C.at(i, j) += aik * bkj;
            }
        }
    return C;
}

std::vector<Poly> apply_q(const QMatrix& A, const std::vector<Poly>& v) {
    if (static_cast<int>(v.size()) != A.cols) throw std::invalid_argument("apply_q: size mismatch");
    int nv = 0;
    for (const auto& p : v)
        if (p.nvars()) nv = p.nvars();
    std::vector<Poly> out(static_cast<size_t>(A.rows), Poly(nv));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            const Rational& aij = A.at(i, j);
            if (aij == 0 || v[static_cast<size_t>(j)].is_zero()) continue;
            out[static_cast<size_t>(i)] += v[static_cast<size_t>(j)] * aij;
        }
    return out;
}

QMatrix to_constant(const PolyMatrix& m) {
    QMatrix q(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            const Poly& p = m.at(i, j);
            if (!p.is_constant()) throw std::invalid_argument("to_constant: non-constant entry");
            q.at(i, j) = p.constant_value();
        }
    return q;
}

}  // namespace hoc
