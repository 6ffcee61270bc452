#include "hoc/tensor_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoc {

TensorField TensorField::zero(int n, SymmetryType sym, int fiber_rank) {
    TensorField t;
    t.n = n;
    t.sym = sym;
    t.fiber_rank = fiber_rank;
    t.comps.assign(static_cast<size_t>(power_ll(n, sym.rank())) * fiber_rank, Poly(n));
    return t;
}

Poly& TensorField::at(const std::vector<int>& tuple, int e) {
    return comps[static_cast<size_t>(tuple_flat_index(tuple, n)) * fiber_rank + e];
}

const Poly& TensorField::at(const std::vector<int>& tuple, int e) const {
    return comps[static_cast<size_t>(tuple_flat_index(tuple, n)) * fiber_rank + e];
}

TensorField TensorField::operator+(const TensorField& o) const {
    if (n != o.n || rank() != o.rank() || fiber_rank != o.fiber_rank)
        throw std::invalid_argument("TensorField: shape mismatch");
    TensorField t = *this;
    for (size_t i = 0; i < comps.size(); ++i) t.comps[i] += o.comps[i];
    return t;
}

TensorField TensorField::operator-(const TensorField& o) const {
    if (n != o.n || rank() != o.rank() || fiber_rank != o.fiber_rank)
        throw std::invalid_argument("TensorField: shape mismatch");
    TensorField t = *this;
    for (size_t i = 0; i < comps.size(); ++i) t.comps[i] -= o.comps[i];
    return t;
}

TensorField TensorField::operator*(const Rational& c) const {
    TensorField t = *this;
    for (auto& p : t.comps) p *= c;
    return t;
}

bool TensorField::operator==(const TensorField& o) const {
    return n == o.n && rank() == o.rank() && fiber_rank == o.fiber_rank && comps == o.comps;
}

TensorField project(SymmetryType sym, const TensorField& t) {
    if (t.rank() != sym.rank()) throw std::invalid_argument("project: rank mismatch");
    const SymmetryTable& tab = symmetry_table(t.n, sym);
    TensorField out = TensorField::zero(t.n, sym, t.fiber_rank);
    const int fd = tab.full_dim, r = t.fiber_rank;
    for (int e = 0; e < r; ++e) {
        std::vector<Poly> v(static_cast<size_t>(fd), Poly(t.n));
        for (int i = 0; i < fd; ++i) v[static_cast<size_t>(i)] = t.comps[static_cast<size_t>(i) * r + e];
        std::vector<Poly> proj = apply_q(tab.basis, apply_q(tab.coords, v));
        for (int i = 0; i < fd; ++i) out.comps[static_cast<size_t>(i) * r + e] = proj[static_cast<size_t>(i)];
    }
    return out;
}

bool is_fixed_by(SymmetryType sym, const TensorField& t) {
    TensorField p = project(sym, t);
    return p.comps == t.comps;
}

std::vector<Poly> antisymmetrize_positions(const std::vector<Poly>& comps, int n, int rank,
                                           int fiber_rank, int pos, int count) {
    const auto tuples = all_tuples(n, rank);
    std::vector<Poly> out(comps.size(), Poly(n));
    std::vector<int> base(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) base[static_cast<size_t>(i)] = i;
    std::vector<std::pair<std::vector<int>, int>> perms;
    std::vector<int> sigma = base;
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
        for (int e = 0; e < fiber_rank; ++e) {
            Poly acc(n);
            for (const auto& [sg, sgn] : perms) {
                t2 = t;
                for (int i = 0; i < count; ++i)
                    t2[static_cast<size_t>(pos + i)] = t[static_cast<size_t>(pos + sg[static_cast<size_t>(i)])];
                const Poly& src = comps[static_cast<size_t>(tuple_flat_index(t2, n)) * fiber_rank + e];
                if (src.is_zero()) continue;
                if (sgn > 0)
                    acc += src;
                else
                    acc -= src;
            }
            if (!acc.is_zero()) out[ti * fiber_rank + static_cast<size_t>(e)] = acc * scale;
        }
    }
    return out;
}

TensorField delta_map(const TensorField& phi) {
    const int k = phi.rank() - 1;
    if (k < 1) throw std::invalid_argument("delta_map: rank k+1 >= 2 required");
    // Precondition: symmetric in the last k indices.
    {
        std::vector<Poly> symmed = phi.comps;
        // symmetrize positions 1..k and compare
        const auto tuples = all_tuples(phi.n, phi.rank());
        std::vector<int> t2;
        for (size_t ti = 0; ti < tuples.size(); ++ti) {
            const auto& t = tuples[ti];
            t2 = t;
            std::sort(t2.begin() + 1, t2.end());
            if (t2 == t) continue;
            for (int e = 0; e < phi.fiber_rank; ++e)
                if (!(phi.comps[ti * phi.fiber_rank + static_cast<size_t>(e)] ==
                      phi.comps[static_cast<size_t>(tuple_flat_index(t2, phi.n)) * phi.fiber_rank +
                                static_cast<size_t>(e)]))
                    throw std::invalid_argument("delta_map: input not symmetric in trailing indices");
        }
    }
    TensorField out = TensorField::zero(phi.n, SymmetryType::theta(2, k - 1), phi.fiber_rank);
    out.comps = antisymmetrize_positions(phi.comps, phi.n, phi.rank(), phi.fiber_rank, 0, 2);
    if (!is_fixed_by(out.sym, out)) throw std::logic_error("delta_map: image not in Theta(2,k-1) (bug)");
    return out;
}

TensorField nearrow_map(const TensorField& mu) {
    const int p = mu.rank() - 2;
    if (p < 0) throw std::invalid_argument("nearrow_map: rank p+2 >= 2 required");
    if (!is_fixed_by(SymmetryType::lambda_lambda(p, 2), mu))
        throw std::invalid_argument("nearrow_map: input not in Lambda^p (x) Lambda^2");
    TensorField out = TensorField::zero(mu.n, SymmetryType::lambda_sym(p + 1, 1), mu.fiber_rank);
    out.comps = antisymmetrize_positions(mu.comps, mu.n, mu.rank(), mu.fiber_rank, 0, p + 1);
    for (auto& c : out.comps) c *= Rational(-1);
    if (!is_fixed_by(out.sym, out)) throw std::logic_error("nearrow_map: image symmetry failure (bug)");
    return out;
}

QMatrix nearrow_fiber_matrix(int n, int p) {
    const SymmetryTable& src = symmetry_table(n, SymmetryType::lambda_lambda(p, 2));
    const SymmetryTable& tgt = symmetry_table(n, SymmetryType::lambda_sym(p + 1, 1));
    QMatrix M(tgt.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
        TensorField t = TensorField::zero(n, src.sym, 1);
        for (int i = 0; i < src.full_dim; ++i)
            if (src.basis.at(i, j) != 0) t.comps[static_cast<size_t>(i)] = Poly::constant(n, src.basis.at(i, j));
        TensorField img = nearrow_map(t);
        std::vector<Poly> coords = tensor_to_coords(img);
        for (int i = 0; i < tgt.dim(); ++i) M.at(i, j) = coords[static_cast<size_t>(i)].constant_value();
    }
    return M;
}

int epsilon3(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    // parity of the permutation (a,b,c) of (0,1,2)
    int inv = (a > b) + (a > c) + (b > c);
    return inv % 2 ? -1 : 1;
}

TensorField curl(const TensorField& t, int slot) {
    if (t.n != 3) throw std::invalid_argument("curl: n = 3 required");
    if (slot < 0 || slot >= t.rank()) throw std::invalid_argument("curl: slot out of range");
    TensorField out = TensorField::zero(3, SymmetryType::full(t.rank()), t.fiber_rank);
    const auto tuples = all_tuples(3, t.rank());
    std::vector<int> t2;
    for (size_t ti = 0; ti < tuples.size(); ++ti) {
        const auto& tup = tuples[ti];
        const int a = tup[static_cast<size_t>(slot)];
        for (int e = 0; e < t.fiber_rank; ++e) {
            Poly acc(3);
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    const int s = epsilon3(a, c, d);
                    if (s == 0) continue;
                    t2 = tup;
                    t2[static_cast<size_t>(slot)] = d;
                    Poly dp = t.comps[static_cast<size_t>(tuple_flat_index(t2, 3)) * t.fiber_rank +
                                      static_cast<size_t>(e)]
                                  .derive(c);
                    if (dp.is_zero()) continue;
                    if (s > 0)
                        acc += dp;
                    else
                        acc -= dp;
                }
            out.comps[ti * static_cast<size_t>(t.fiber_rank) + static_cast<size_t>(e)] = acc;
        }
    }
    return out;
}

std::vector<Poly> tensor_to_coords_projecting(const TensorField& t) {
    const SymmetryTable& tab = symmetry_table(t.n, t.sym);
    const int r = t.fiber_rank;
    std::vector<Poly> coords(static_cast<size_t>(tab.dim()) * r, Poly(t.n));
    for (int e = 0; e < r; ++e) {
        std::vector<Poly> v(static_cast<size_t>(tab.full_dim), Poly(t.n));
        for (int i = 0; i < tab.full_dim; ++i) v[static_cast<size_t>(i)] = t.comps[static_cast<size_t>(i) * r + e];
        std::vector<Poly> c = apply_q(tab.coords, v);
        for (int s = 0; s < tab.dim(); ++s) coords[static_cast<size_t>(s) * r + e] = c[static_cast<size_t>(s)];
    }
    return coords;
}

std::vector<Poly> tensor_to_coords(const TensorField& t) {
    std::vector<Poly> coords = tensor_to_coords_projecting(t);
    TensorField back = tensor_from_coords(t.n, t.sym, t.fiber_rank, coords);
    if (!(back.comps == t.comps))
        throw std::invalid_argument("tensor_to_coords: components not in the declared symmetry subspace");
    return coords;
}

TensorField tensor_from_coords(int n, SymmetryType sym, int fiber_rank,
                               const std::vector<Poly>& coords) {
    const SymmetryTable& tab = symmetry_table(n, sym);
    if (static_cast<int>(coords.size()) != tab.dim() * fiber_rank)
        throw std::invalid_argument("tensor_from_coords: size mismatch");
    TensorField t = TensorField::zero(n, sym, fiber_rank);
    for (int e = 0; e < fiber_rank; ++e) {
        std::vector<Poly> c(static_cast<size_t>(tab.dim()), Poly(n));
        for (int s = 0; s < tab.dim(); ++s) c[static_cast<size_t>(s)] = coords[static_cast<size_t>(s) * fiber_rank + e];
        std::vector<Poly> v = apply_q(tab.basis, c);
        for (int i = 0; i < tab.full_dim; ++i) t.comps[static_cast<size_t>(i) * fiber_rank + e] = v[static_cast<size_t>(i)];
    }
    return t;
}

}  // namespace hoc
