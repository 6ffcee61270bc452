#include "hoc/symmetry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hoc {

SymmetryType SymmetryType::full(int rank) {
    if (rank < 0) throw std::invalid_argument("SymmetryType: negative rank");
    return {Kind::Full, rank, 0};
}
SymmetryType SymmetryType::lambda(int p) {
    if (p < 0) throw std::invalid_argument("SymmetryType: negative p");
    return {Kind::Lambda, p, 0};
}
SymmetryType SymmetryType::sym(int q) {
    if (q < 0) throw std::invalid_argument("SymmetryType: negative q");
    return {Kind::Sym, 0, q};
}
SymmetryType SymmetryType::lambda_sym(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("SymmetryType: negative block");
    if (q == 0) return lambda(p);
    if (p == 0) return sym(q);
    return {Kind::LambdaSym, p, q};
}
SymmetryType SymmetryType::lambda_lambda(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("SymmetryType: negative block");
    if (q == 0) return lambda(p);
    if (p == 0) return lambda(q);
    return {Kind::LambdaLambda, p, q};
}
SymmetryType SymmetryType::theta(int p, int q) {
    if (p < 1) throw std::invalid_argument("SymmetryType::theta: p >= 1 required");
    if (q < 0) throw std::invalid_argument("SymmetryType::theta: negative q");
    if (q == 0) return lambda(p);
    if (p == 1) return sym(q + 1);
    return {Kind::Theta, p, q};
}
SymmetryType SymmetryType::xi(int p, int q) {
    if (p < 1) throw std::invalid_argument("SymmetryType::xi: p >= 1 required");
    if (q < 0) throw std::invalid_argument("SymmetryType::xi: negative q");
    if (q == 0) return lambda(p);
    return {Kind::Xi, p, q};
}

int SymmetryType::rank() const {
    switch (kind) {
        case Kind::Full:
        case Kind::Lambda:
            return p;
        case Kind::Sym:
            return q;
        default:
            return p + q;
    }
}

std::string SymmetryType::str() const {
    switch (kind) {
        case Kind::Full:
            return "Full(" + std::to_string(p) + ")";
        case Kind::Lambda:
            return "Lambda(" + std::to_string(p) + ")";
        case Kind::Sym:
            return "Sym(" + std::to_string(q) + ")";
        case Kind::LambdaSym:
            return "LambdaSym(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Kind::LambdaLambda:
            return "LambdaLambda(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Kind::Theta:
            return "Theta(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Kind::Xi:
            return "Xi(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return "?";
}

bool SymmetryType::operator<(const SymmetryType& o) const {
    return std::tie(kind, p, q) < std::tie(o.kind, o.p, o.q);
}

namespace {

// Distinct permutations of a tuple together with the sign of the permutation
// if `signed_perms` (the tuple values are then distinct by construction).
struct OrbitEntry {
    std::vector<int> tuple;
    int sign;
};

std::vector<OrbitEntry> orbit(const std::vector<int>& sorted, bool signed_perms) {
    std::vector<OrbitEntry> out;
    std::vector<int> t = sorted;
    std::sort(t.begin(), t.end());
    // Walk distinct permutations; recover the sign by counting inversions
    // relative to the sorted tuple (valid when all values are distinct).
    do {
        int sgn = 1;
        if (signed_perms) {
            int inv = 0;
            for (size_t i = 0; i < t.size(); ++i)
                for (size_t j = i + 1; j < t.size(); ++j)
                    if (t[i] > t[j]) ++inv;
            sgn = inv % 2 ? -1 : 1;
        }
        out.push_back({t, sgn});
    } while (std::next_permutation(t.begin(), t.end()));
    return out;
}

std::vector<std::vector<int>> nondecreasing_tuples(int n, int q) {
    std::vector<std::vector<int>> out;
    auto mons = monomials_of_degree(n, q);
    out.reserve(mons.size());
    for (const auto& m : mons) out.push_back(multiindex_to_tuple(m));
    return out;
}

// Canonical orbit-sum basis of the block-symmetry subspace: entries are +-1,
// supports of distinct columns are disjoint.
QMatrix block_basis(int n, SymmetryType s, int rank, int full_dim) {
    using K = SymmetryType::Kind;
    std::vector<QVec> cols;
    auto push = [&](const std::vector<std::pair<int, int>>& entries) {
        QVec v(static_cast<size_t>(full_dim), Rational(0));
        for (auto [idx, sgn] : entries) v[static_cast<size_t>(idx)] = sgn;
        cols.push_back(std::move(v));
    };
    switch (s.kind) {
        case K::Full: {
            return QMatrix::identity(full_dim);
        }
        case K::Lambda: {
            for (const auto& I : increasing_tuples(n, s.p)) {
                std::vector<std::pair<int, int>> es;
                for (const auto& o : orbit(I, true)) es.push_back({tuple_flat_index(o.tuple, n), o.sign});
                push(es);
            }
            break;
        }
        case K::Sym: {
            for (const auto& J : nondecreasing_tuples(n, s.q)) {
                std::vector<std::pair<int, int>> es;
                for (const auto& o : orbit(J, false)) es.push_back({tuple_flat_index(o.tuple, n), 1});
                push(es);
            }
            break;
        }
        case K::LambdaSym:
        case K::Theta: {
            for (const auto& I : increasing_tuples(n, s.p))
                for (const auto& J : nondecreasing_tuples(n, s.q)) {
                    std::vector<std::pair<int, int>> es;
                    for (const auto& oi : orbit(I, true))
                        for (const auto& oj : orbit(J, false)) {
                            std::vector<int> t = oi.tuple;
                            t.insert(t.end(), oj.tuple.begin(), oj.tuple.end());
                            es.push_back({tuple_flat_index(t, n), oi.sign});
                        }
                    push(es);
                }
            break;
        }
        case K::LambdaLambda:
        case K::Xi: {
            for (const auto& I : increasing_tuples(n, s.p))
                for (const auto& J : increasing_tuples(n, s.q)) {
                    std::vector<std::pair<int, int>> es;
                    for (const auto& oi : orbit(I, true))
                        for (const auto& oj : orbit(J, true)) {
                            std::vector<int> t = oi.tuple;
                            t.insert(t.end(), oj.tuple.begin(), oj.tuple.end());
                            es.push_back({tuple_flat_index(t, n), oi.sign * oj.sign});
                        }
                    push(es);
                }
            break;
        }
    }
    (void)rank;
    return from_columns(cols, full_dim);
}

// Antisymmetrization over tensor positions 0..p (inclusive), as a map on full
// component vectors. Average convention; the scale is irrelevant for kernels.
QVec over_antisymmetrize(const QVec& v, int n, int rank, int p) {
    const auto tuples = all_tuples(n, rank);
    QVec out(v.size(), Rational(0));
    std::vector<int> perm_positions(static_cast<size_t>(p + 1));
    for (int i = 0; i <= p; ++i) perm_positions[static_cast<size_t>(i)] = i;
    // Precompute permutations of 0..p with signs.
    std::vector<std::pair<std::vector<int>, int>> perms;
    std::vector<int> sigma = perm_positions;
    do {
        int inv = 0;
        for (size_t i = 0; i < sigma.size(); ++i)
            for (size_t j = i + 1; j < sigma.size(); ++j)
                if (sigma[i] > sigma[j]) ++inv;
        perms.push_back({sigma, inv % 2 ? -1 : 1});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    const Rational scale(1, static_cast<long>(perms.size()));
    std::vector<int> t2;
    for (size_t ti = 0; ti < tuples.size(); ++ti) {
        const auto& t = tuples[ti];
        Rational acc(0);
        bool any = false;
        for (const auto& [sg, sgn] : perms) {
            t2 = t;
            for (int i = 0; i <= p; ++i) t2[static_cast<size_t>(i)] = t[static_cast<size_t>(sg[static_cast<size_t>(i)])];
            const Rational& src = v[static_cast<size_t>(tuple_flat_index(t2, n))];
            if (src == 0) continue;
            any = true;
            if (sgn > 0)
                acc += src;
            else
                acc -= src;
        }
        if (any && acc != 0) out[ti] = acc * scale;
    }
    return out;
}

SymmetryTable build_table(int n, SymmetryType s) {
    SymmetryTable tab;
    tab.n = n;
    tab.sym = s;
    tab.rank = s.rank();
    tab.full_dim = static_cast<int>(power_ll(n, tab.rank));

    QMatrix W = block_basis(n, s, tab.rank, tab.full_dim);

    const bool constrained = s.kind == SymmetryType::Kind::Theta || s.kind == SymmetryType::Kind::Xi;
    if (!constrained) {
        tab.basis = W;
    } else {
        // Kernel of the extra antisymmetrization, restricted to the block
        // subspace.
        QMatrix AW(tab.full_dim, W.cols);
        for (int j = 0; j < W.cols; ++j) {
            QVec col(static_cast<size_t>(tab.full_dim));
            for (int i = 0; i < tab.full_dim; ++i) col[static_cast<size_t>(i)] = W.at(i, j);
            QVec img = over_antisymmetrize(col, n, tab.rank, s.p);
            for (int i = 0; i < tab.full_dim; ++i) AW.at(i, j) = img[static_cast<size_t>(i)];
        }
        auto ker = kernel_basis(AW);
        QMatrix K = from_columns(ker, W.cols);
        tab.basis = W * K;
    }

    // coords = (B^T B)^{-1} B^T : exact orthogonal-projection coordinates.
    QMatrix Bt = tab.basis.transpose();
    QMatrix G = Bt * tab.basis;
    if (tab.basis.cols == 0) {
        tab.coords = QMatrix(0, tab.full_dim);
        return tab;
    }
    auto Ginv = inverse(G);
    if (!Ginv) throw std::logic_error("symmetry_table: Gram matrix singular (bug)");
    tab.coords = (*Ginv) * Bt;
    return tab;
}

std::map<std::pair<int, SymmetryType>, SymmetryTable> g_tables;
std::mutex g_tables_mutex;

}  // namespace

const SymmetryTable& symmetry_table(int n, SymmetryType sym) {
    if (n < 1) throw std::invalid_argument("symmetry_table: n >= 1 required");
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    auto key = std::make_pair(n, sym);
    auto it = g_tables.find(key);
    if (it != g_tables.end()) return it->second;
    SymmetryTable tab = build_table(n, sym);
    return g_tables.emplace(key, std::move(tab)).first->second;
}

int symmetry_dimension(SymmetryType sym, int n) { return symmetry_table(n, sym).dim(); }

}  // namespace hoc
