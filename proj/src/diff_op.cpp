#include "hoc/diff_op.hpp"

#include <stdexcept>

namespace hoc {

LinearDiffOp LinearDiffOp::zero(const Bundle& src, const Bundle& tgt) { return {src, tgt}; }

LinearDiffOp LinearDiffOp::homomorphism(const Bundle& src, const Bundle& tgt, PolyMatrix m) {
    if (m.rows != tgt.dim || m.cols != src.dim)
        throw std::invalid_argument("LinearDiffOp::homomorphism: matrix shape mismatch");
    LinearDiffOp op(src, tgt);
    op.add_coeff(mi_zero(src.n), m);
    return op;
}

LinearDiffOp LinearDiffOp::identity(const Bundle& b) {
    return homomorphism(b, b, PolyMatrix::identity(b.dim, b.n));
}

int LinearDiffOp::order() const {
    int o = -1;
    for (const auto& [a, m] : coeffs) o = std::max(o, mi_sum(a));
    return o;
}

void LinearDiffOp::add_coeff(const MultiIndex& alpha, const PolyMatrix& m) {
    if (m.rows != target.dim || m.cols != source.dim)
        throw std::invalid_argument("LinearDiffOp::add_coeff: matrix shape mismatch");
    auto it = coeffs.find(alpha);
    if (it == coeffs.end()) {
        if (!m.is_zero()) coeffs.emplace(alpha, m);
        return;
    }
    it->second = it->second + m;
    if (it->second.is_zero()) coeffs.erase(it);
}

const PolyMatrix* LinearDiffOp::coeff(const MultiIndex& alpha) const {
    auto it = coeffs.find(alpha);
    return it == coeffs.end() ? nullptr : &it->second;
}

std::vector<Poly> LinearDiffOp::apply(const std::vector<Poly>& section) const {
    if (static_cast<int>(section.size()) != source.dim)
        throw std::invalid_argument("LinearDiffOp::apply: section size mismatch");
    std::vector<Poly> out(static_cast<size_t>(target.dim), Poly(source.n));
    std::vector<Poly> ds;
    for (const auto& [alpha, m] : coeffs) {
        ds = section;
        for (size_t ax = 0; ax < alpha.size(); ++ax)
            for (int rep = 0; rep < alpha[ax]; ++rep)
                for (auto& p : ds) p = p.derive(static_cast<int>(ax));
        std::vector<Poly> term = ::hoc::apply(m, ds);
        for (int i = 0; i < target.dim; ++i) out[static_cast<size_t>(i)] += term[static_cast<size_t>(i)];
    }
    return out;
}

std::map<MultiIndex, PolyMatrix, GradedLexLess> LinearDiffOp::symbol() const {
    std::map<MultiIndex, PolyMatrix, GradedLexLess> s;
    const int o = order();
    for (const auto& [a, m] : coeffs)
        if (mi_sum(a) == o) s.emplace(a, m);
    return s;
}

bool LinearDiffOp::operator==(const LinearDiffOp& o) const {
    return source.compatible(o.source) && target.compatible(o.target) && coeffs == o.coeffs;
}

LinearDiffOp compose(const LinearDiffOp& outer, const LinearDiffOp& inner) {
    if (!outer.source.compatible(inner.target))
        throw std::invalid_argument("compose: middle bundle mismatch between " + inner.target.name +
                                    " and " + outer.source.name);
    LinearDiffOp out(inner.source, outer.target);
    const int n = inner.source.n;
    for (const auto& [beta, B] : outer.coeffs) {
        // enumerate gamma <= beta componentwise
        std::vector<MultiIndex> gammas;
        MultiIndex g = mi_zero(n);
        while (true) {
            gammas.push_back(g);
            int pos = 0;
            while (pos < n) {
                if (g[pos] < beta[pos]) {
                    ++g[pos];
                    for (int i = 0; i < pos; ++i) g[i] = 0;
                    break;
                }
                ++pos;
            }
            if (pos == n) break;
        }
        for (const auto& [alpha, A] : inner.coeffs) {
            for (const auto& gamma : gammas) {
                const long long c = multi_binomial(beta, gamma);
                MultiIndex diff = mi_sub(beta, gamma);
                PolyMatrix Ad = A;
                for (size_t ax = 0; ax < diff.size(); ++ax)
                    for (int rep = 0; rep < diff[ax]; ++rep) Ad = Ad.derive(static_cast<int>(ax));
                if (Ad.is_zero()) continue;
                PolyMatrix term = B * Ad;
                if (c != 1) term = Rational(static_cast<long>(c)) * term;
                out.add_coeff(mi_add(gamma, alpha), term);
            }
        }
    }
    return out;
}

LinearDiffOp operator+(const LinearDiffOp& a, const LinearDiffOp& b) {
    if (!a.source.compatible(b.source) || !a.target.compatible(b.target))
        throw std::invalid_argument("LinearDiffOp: shape mismatch in sum");
    LinearDiffOp out = a;
    for (const auto& [alpha, m] : b.coeffs) out.add_coeff(alpha, m);
    return out;
}

LinearDiffOp operator-(const LinearDiffOp& a, const LinearDiffOp& b) {
    return a + Rational(-1) * b;
}

LinearDiffOp operator*(const Rational& c, const LinearDiffOp& a) {
    LinearDiffOp out(a.source, a.target);
    if (c == 0) return out;
    for (const auto& [alpha, m] : a.coeffs) out.coeffs.emplace(alpha, c * m);
    return out;
}

LinearDiffOp coupled_extension(const LinearDiffOp& nabla, int p) {
    const Bundle& V = nabla.source;
    const int n = V.n;
    if (nabla.target.dim != n * V.dim)
        throw std::invalid_argument("coupled_extension: nabla target is not Lambda^1 (x) source");
    if (p == 0) return nabla;
    const auto src_forms = increasing_tuples(n, p);
    const auto src_pos = index_of(src_forms);
    const auto tgt_forms = increasing_tuples(n, p + 1);
    const Bundle src = form_bundle(p, V);
    const Bundle tgt = form_bundle(p + 1, V);
    LinearDiffOp out(src, tgt);
    const Rational scale(1, p + 1);
    for (const auto& [alpha, M] : nabla.coeffs) {
        PolyMatrix N(tgt.dim, src.dim, n);
        for (size_t fa = 0; fa < tgt_forms.size(); ++fa) {
            const auto& A = tgt_forms[fa];
            for (int i = 0; i <= p; ++i) {
                const int b = A[static_cast<size_t>(i)];
                std::vector<int> rest = A;
                rest.erase(rest.begin() + i);
                const int fs = src_pos.at(rest);
                const Rational sgn = (i % 2 ? Rational(-1) : Rational(1)) * scale;
                for (int vp = 0; vp < V.dim; ++vp)
                    for (int v = 0; v < V.dim; ++v) {
                        const Poly& entry = M.at(b * V.dim + vp, v);
                        if (entry.is_zero()) continue;
                        N.at(static_cast<int>(fa) * V.dim + vp, fs * V.dim + v) += entry * sgn;
                    }
            }
        }
        out.add_coeff(alpha, N);
    }
    return out;
}

PolyMatrix degree_slice_matrix(const LinearDiffOp& op, int d) {
    const int o = op.order();
    if (o < 0) {
        // zero operator: slice is a zero matrix of the right shape
        const int n = op.source.n;
        auto src = monomials_of_degree(n, d);
        return PolyMatrix(0, static_cast<int>(src.size()) * op.source.dim, n);
    }
    if (d < o) throw std::invalid_argument("degree_slice_matrix: d < order");
    for (const auto& [a, m] : op.coeffs) {
        if (mi_sum(a) != o)
            throw std::invalid_argument("degree_slice_matrix: operator not graded (mixed orders)");
        if (!m.is_constant())
            throw std::invalid_argument("degree_slice_matrix: non-constant coefficient entry");
    }
    const int n = op.source.n;
    const auto src_mons = monomials_of_degree(n, d);
    const auto tgt_mons = monomials_of_degree(n, d - o);
    std::map<MultiIndex, int, GradedLexLess> tgt_pos;
    for (size_t i = 0; i < tgt_mons.size(); ++i) tgt_pos[tgt_mons[i]] = static_cast<int>(i);

    PolyMatrix M(static_cast<int>(tgt_mons.size()) * op.target.dim,
                 static_cast<int>(src_mons.size()) * op.source.dim, n);
    for (size_t ms = 0; ms < src_mons.size(); ++ms) {
        for (int j = 0; j < op.source.dim; ++j) {
            std::vector<Poly> sec(static_cast<size_t>(op.source.dim), Poly(n));
            sec[static_cast<size_t>(j)] = Poly::monomial(n, src_mons[ms], Rational(1));
            std::vector<Poly> img = op.apply(sec);
            for (int i = 0; i < op.target.dim; ++i) {
                for (const auto& [mon, c] : img[static_cast<size_t>(i)].terms()) {
                    auto it = tgt_pos.find(mon);
                    if (it == tgt_pos.end())
                        throw std::logic_error("degree_slice_matrix: image degree mismatch (bug)");
                    M.at(it->second * op.target.dim + i,
                         static_cast<int>(ms) * op.source.dim + j) = Poly::constant(n, c);
                }
            }
        }
    }
    return M;
}

PolyMapKernel kernel_of_images(const std::vector<std::vector<Poly>>& images) {
    PolyMapKernel out;
    const int cols = static_cast<int>(images.size());
    if (cols == 0) return out;
    const size_t m = images[0].size();
    std::map<std::pair<size_t, MultiIndex>, int> row_of;
    for (const auto& img : images) {
        if (img.size() != m) throw std::invalid_argument("kernel_of_images: ragged images");
        for (size_t i = 0; i < m; ++i)
            for (const auto& [mon, c] : img[i].terms()) {
                auto key = std::make_pair(i, mon);
                if (!row_of.count(key)) {
                    const int next = static_cast<int>(row_of.size());
                    row_of[key] = next;
                }
            }
    }
    QMatrix M(static_cast<int>(row_of.size()), cols);
    for (int j = 0; j < cols; ++j)
        for (size_t i = 0; i < m; ++i)
            for (const auto& [mon, c] : images[static_cast<size_t>(j)][i].terms())
                M.at(row_of[{i, mon}], j) = c;
    out.rank = rank(M);
    out.kernel = kernel_basis(M);
    return out;
}

}  // namespace hoc
