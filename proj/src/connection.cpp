#include "hoc/connection.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoc {

namespace {

// rows (s,e) = sum_flat q(s,flat) * F(flat*r+e, col): contract the tuple part
// of a tuple-major (x) fiber row layout with a rational matrix.
PolyMatrix contract_rows(const QMatrix& q, const PolyMatrix& F, int r) {
    if (q.cols * r != F.rows) throw std::invalid_argument("contract_rows: shape mismatch");
    PolyMatrix out(q.rows * r, F.cols, F.n);
    for (int s = 0; s < q.rows; ++s)
        for (int flat = 0; flat < q.cols; ++flat) {
            const Rational& c = q.at(s, flat);
            if (c == 0) continue;
            for (int e = 0; e < r; ++e)
                for (int j = 0; j < F.cols; ++j) {
                    const Poly& v = F.at(flat * r + e, j);
                    if (v.is_zero()) continue;
                    out.at(s * r + e, j) += v * c;
                }
        }
    return out;
}

}  // namespace

ConnectionData ConnectionData::flat(int n, int k, int r) {
    if (n < 1 || k < 1 || r < 1) throw std::invalid_argument("ConnectionData: n,k,r >= 1 required");
    ConnectionData c;
    c.n = n;
    c.k = k;
    c.fiber_rank = r;
    c.gammas.resize(static_cast<size_t>(k));
    const long long nk = power_ll(n, k);
    for (int j = 0; j < k; ++j)
        c.gammas[static_cast<size_t>(j)].assign(static_cast<size_t>(nk * power_ll(n, j)),
                                                PolyMatrix(r, r, n));
    return c;
}

ConnectionData ConnectionData::zero_shaped(int n, int k, int r) { return flat(n, k, r); }

const PolyMatrix& ConnectionData::gamma(int j, int lower_flat, int upper_flat) const {
    return gammas[static_cast<size_t>(j)]
                 [static_cast<size_t>(lower_flat) * static_cast<size_t>(power_ll(n, j)) +
                  static_cast<size_t>(upper_flat)];
}

PolyMatrix& ConnectionData::gamma(int j, int lower_flat, int upper_flat) {
    return gammas[static_cast<size_t>(j)]
                 [static_cast<size_t>(lower_flat) * static_cast<size_t>(power_ll(n, j)) +
                  static_cast<size_t>(upper_flat)];
}

bool ConnectionData::is_flat_data() const {
    for (const auto& g : gammas)
        for (const auto& m : g)
            if (!m.is_zero()) return false;
    return true;
}

ConnectionData symmetrize_connection(const ConnectionData& raw, GammaLoadReport* rep) {
    ConnectionData c = ConnectionData::flat(raw.n, raw.k, raw.fiber_rank);
    bool changed = false;
    const int n = raw.n, k = raw.k;
    for (int j = 0; j < k; ++j) {
        const auto lowers = all_tuples(n, k);
        const auto uppers = all_tuples(n, j);
        for (size_t li = 0; li < lowers.size(); ++li)
            for (size_t ui = 0; ui < uppers.size(); ++ui) {
                // average over sorted-content representatives
                std::vector<int> ls = lowers[li], us = uppers[ui];
                std::sort(ls.begin(), ls.end());
                std::sort(us.begin(), us.end());
                PolyMatrix acc(raw.fiber_rank, raw.fiber_rank, n);
                long count = 0;
                std::vector<int> lp = ls;
                do {
                    std::vector<int> up = us;
                    do {
                        acc = acc + raw.gamma(j, tuple_flat_index(lp, n), tuple_flat_index(up, n));
                        ++count;
                    } while (std::next_permutation(up.begin(), up.end()));
                } while (std::next_permutation(lp.begin(), lp.end()));
                acc = Rational(1, count) * acc;
                c.gamma(j, static_cast<int>(li), static_cast<int>(ui)) = acc;
                if (!(acc == raw.gamma(j, static_cast<int>(li), static_cast<int>(ui)))) changed = true;
            }
    }
    if (rep) rep->changed = changed;
    return c;
}

LinearDiffOp higher_op(const ConnectionData& c) {
    const int n = c.n, k = c.k, r = c.fiber_rank;
    const SymmetryTable& tab = symmetry_table(n, SymmetryType::sym(k));
    const Bundle src = trivial_bundle(n, r);
    const Bundle tgt = tensor_bundle(n, SymmetryType::sym(k), r);
    LinearDiffOp op(src, tgt);

    // symbol: the k-th symmetrized derivatives (plain d^alpha)
    for (const auto& alpha : monomials_of_degree(n, k)) {
        PolyMatrix F(tab.full_dim * r, r, n);
        for (const auto& t : all_tuples(n, k)) {
            if (!(tuple_to_multiindex(t, n) == alpha)) continue;
            for (int e = 0; e < r; ++e)
                F.at(tuple_flat_index(t, n) * r + e, e) = Poly::constant(n, Rational(1));
        }
        op.add_coeff(alpha, contract_rows(tab.coords, F, r));
    }
    // Gamma_j terms
    for (int j = 0; j < k; ++j) {
        for (const auto& beta : monomials_of_degree(n, j)) {
            PolyMatrix F(tab.full_dim * r, r, n);
            bool any = false;
            for (const auto& lt : all_tuples(n, k)) {
                const int lf = tuple_flat_index(lt, n);
                for (const auto& ut : all_tuples(n, j)) {
                    if (!(tuple_to_multiindex(ut, n) == beta)) continue;
                    const PolyMatrix& g = c.gamma(j, lf, tuple_flat_index(ut, n));
                    if (g.is_zero()) continue;
                    any = true;
                    for (int eo = 0; eo < r; ++eo)
                        for (int ei = 0; ei < r; ++ei)
                            if (!g.at(eo, ei).is_zero()) F.at(lf * r + eo, ei) += g.at(eo, ei);
                }
            }
            if (any) op.add_coeff(beta, contract_rows(tab.coords, F, r));
        }
    }
    return op;
}

TensorField higher_apply(const ConnectionData& c, const std::vector<Poly>& s) {
    if (static_cast<int>(s.size()) != c.fiber_rank)
        throw std::invalid_argument("higher_apply: fiber rank mismatch");
    for (const auto& p : s)
        if (!p.is_zero() && p.nvars() != c.n)
            throw std::invalid_argument("higher_apply: variable count mismatch");
    LinearDiffOp op = higher_op(c);
    return tensor_from_coords(c.n, SymmetryType::sym(c.k), c.fiber_rank, op.apply(s));
}

LinearDiffOp induced_operator(const ConnectionData& c) {
    const int n = c.n, k = c.k, r = c.fiber_rank;
    const SymmetryTable& stab = symmetry_table(n, SymmetryType::sym(k));
    const SymmetryType out_sym = SymmetryType::theta(2, k - 1);
    const SymmetryTable& ttab = symmetry_table(n, out_sym);
    const Bundle src = tensor_bundle(n, SymmetryType::sym(k), r);
    const Bundle tgt = tensor_bundle(n, out_sym, r);
    LinearDiffOp op(src, tgt);

    const auto out_tuples = all_tuples(n, k + 1);  // (x, y, gamma...)
    const auto gtuples = all_tuples(n, k - 1);
    const Rational half(1, 2);

    // order-1 coefficients: T_{xy g} = (1/2)(delta_{x,a} w_{y g} - delta_{y,a} w_{x g})
    for (int a = 0; a < n; ++a) {
        PolyMatrix F(static_cast<int>(out_tuples.size()) * r, src.dim, n);
        for (size_t ot = 0; ot < out_tuples.size(); ++ot) {
            const auto& t = out_tuples[ot];
            const int x = t[0], y = t[1];
            for (int sign = 0; sign < 2; ++sign) {
                const int lead = sign == 0 ? x : y;
                const int other = sign == 0 ? y : x;
                if (lead != a) continue;
                std::vector<int> wt;
                wt.push_back(other);
                wt.insert(wt.end(), t.begin() + 2, t.end());
                const int wf = tuple_flat_index(wt, n);
                for (int s = 0; s < stab.dim(); ++s) {
                    const Rational& v = stab.basis.at(wf, s);
                    if (v == 0) continue;
                    const Rational coef = (sign == 0 ? half : -half) * v;
                    for (int e = 0; e < r; ++e)
                        F.at(static_cast<int>(ot) * r + e, s * r + e) += Poly::constant(n, coef);
                }
            }
        }
        // image must lie in Theta(2,k-1) without projection
        PolyMatrix proj = contract_rows(ttab.basis, contract_rows(ttab.coords, F, r), r);
        if (!(proj == F)) throw std::logic_error("induced_operator: symbol image not in Theta (bug)");
        op.add_coeff(mi_unit(n, a), contract_rows(ttab.coords, F, r));
    }

    // order-0 coefficient from the top Gamma:
    // T_{xy g} = (1/2) sum_f ( Gamma[g+x, f] w_{y f} - Gamma[g+y, f] w_{x f} )
    if (k >= 1) {
        PolyMatrix F(static_cast<int>(out_tuples.size()) * r, src.dim, n);
        bool any = false;
        for (size_t ot = 0; ot < out_tuples.size(); ++ot) {
            const auto& t = out_tuples[ot];
            const int x = t[0], y = t[1];
            const std::vector<int> g(t.begin() + 2, t.end());
            for (int sign = 0; sign < 2; ++sign) {
                const int lead = sign == 0 ? x : y;    // appended to Gamma's lower tuple
                const int other = sign == 0 ? y : x;   // contracted with w's first index
                std::vector<int> lower = g;
                lower.push_back(lead);
                const int lf = tuple_flat_index(lower, n);
                for (const auto& f : gtuples) {
                    const PolyMatrix& gm = c.gamma(k - 1, lf, tuple_flat_index(f, n));
                    if (gm.is_zero()) continue;
                    any = true;
                    std::vector<int> wt;
                    wt.push_back(other);
                    wt.insert(wt.end(), f.begin(), f.end());
                    const int wf = tuple_flat_index(wt, n);
                    for (int s = 0; s < stab.dim(); ++s) {
                        const Rational& v = stab.basis.at(wf, s);
                        if (v == 0) continue;
                        const Rational coef = (sign == 0 ? half : -half) * v;
                        for (int eo = 0; eo < r; ++eo)
                            for (int ei = 0; ei < r; ++ei) {
                                const Poly& ge = gm.at(eo, ei);
                                if (ge.is_zero()) continue;
                                F.at(static_cast<int>(ot) * r + eo, s * r + ei) += ge * coef;
                            }
                    }
                }
            }
        }
        if (any) {
            PolyMatrix proj = contract_rows(ttab.basis, contract_rows(ttab.coords, F, r), r);
            if (!(proj == F))
                throw std::logic_error("induced_operator: Gamma image not in Theta (bug)");
            op.add_coeff(mi_zero(n), contract_rows(ttab.coords, F, r));
        }
    }
    return op;
}

LinearDiffOp curvature(const ConnectionData& c) {
    LinearDiffOp comp = compose(induced_operator(c), higher_op(c));
    for (const auto& [alpha, m] : comp.coeffs)
        if (mi_sum(alpha) >= c.k)
            throw std::logic_error("curvature: order-" + std::to_string(mi_sum(alpha)) +
                                   " coefficients fail to cancel (bug)");
    return comp;
}

JetSection splitting_h(const ConnectionData& c, const JetSection& u) {
    if (u.n != c.n || u.fiber_rank != c.fiber_rank || u.order != c.k - 1)
        throw std::invalid_argument("splitting_h: jet shape mismatch");
    JetSection v = JetSection::zero(c.n, c.k, c.fiber_rank);
    for (const auto& [a, vals] : u.slots) v.slot(a) = vals;
    for (auto& [a, vals] : v.slots) {
        if (mi_sum(a) != c.k) continue;
        const int lf = tuple_flat_index(multiindex_to_tuple(a), c.n);
        for (int j = 0; j < c.k; ++j)
            for (const auto& f : all_tuples(c.n, j)) {
                const PolyMatrix& g = c.gamma(j, lf, tuple_flat_index(f, c.n));
                if (g.is_zero()) continue;
                const auto& uj = u.slot(tuple_to_multiindex(f, c.n));
                std::vector<Poly> t = apply(g, uj);
                for (int e = 0; e < c.fiber_rank; ++e) vals[static_cast<size_t>(e)] -= t[static_cast<size_t>(e)];
            }
    }
    return v;
}

LinearDiffOp h_hom(const ConnectionData& c) {
    const int n = c.n, k = c.k, r = c.fiber_rank;
    const Bundle src = jet_bundle(n, k - 1, r);
    const Bundle tgt = jet_bundle(n, k, r);
    const auto src_slots = monomials_up_to(n, k - 1);
    const auto tgt_slots = monomials_up_to(n, k);
    std::map<MultiIndex, int, GradedLexLess> spos, tpos;
    for (size_t i = 0; i < src_slots.size(); ++i) spos[src_slots[i]] = static_cast<int>(i);
    for (size_t i = 0; i < tgt_slots.size(); ++i) tpos[tgt_slots[i]] = static_cast<int>(i);
    PolyMatrix m(tgt.dim, src.dim, n);
    for (const auto& a : tgt_slots) {
        if (mi_sum(a) < k) {
            for (int e = 0; e < r; ++e)
                m.at(tpos[a] * r + e, spos[a] * r + e) = Poly::constant(n, Rational(1));
            continue;
        }
        const int lf = tuple_flat_index(multiindex_to_tuple(a), n);
        for (int j = 0; j < k; ++j)
            for (const auto& f : all_tuples(n, j)) {
                const PolyMatrix& g = c.gamma(j, lf, tuple_flat_index(f, n));
                if (g.is_zero()) continue;
                const int sp = spos[tuple_to_multiindex(f, n)];
                for (int eo = 0; eo < r; ++eo)
                    for (int ei = 0; ei < r; ++ei)
                        if (!g.at(eo, ei).is_zero()) m.at(tpos[a] * r + eo, sp * r + ei) -= g.at(eo, ei);
            }
    }
    return LinearDiffOp::homomorphism(src, tgt, m);
}

JetConnection jet_connection(const ConnectionData& c) {
    return {c, compose(spencer_op(c.n, c.k, c.fiber_rank), h_hom(c))};
}

LinearDiffOp theta2_jet_inclusion(int n, int k, int r) {
    return compose(form_block_hom(n, 2, sym_top_inclusion_hom(n, k - 1, r)),
                   theta_form_inclusion_hom(n, 2, k - 1, r));
}

namespace {

LinearDiffOp theta2_jet_reader(int n, int k, int r) {
    return compose(form_to_theta_hom(n, 2, k - 1, r),
                   form_block_hom(n, 2, jet_top_reader_hom(n, k - 1, r)));
}

}  // namespace

LinearDiffOp jet_curvature(const ConnectionData& c) {
    const JetConnection jc = jet_connection(c);
    LinearDiffOp kappa = compose(coupled_extension(jc.op, 1), jc.op);
    if (kappa.order() > 0)
        throw std::logic_error("jet_curvature: not a homomorphism (bug)");
    // values in Theta(2,k-1) (x) E inside Lambda^2 (x) J^{k-1}E
    const LinearDiffOp round =
        compose(theta2_jet_inclusion(c.n, c.k, c.fiber_rank),
                compose(theta2_jet_reader(c.n, c.k, c.fiber_rank), kappa));
    if (!(round == kappa))
        throw std::logic_error("jet_curvature: values not in Theta(2,k-1)(x)E (bug)");
    return kappa;
}

LinearDiffOp jet_curvature_theta(const ConnectionData& c) {
    return compose(theta2_jet_reader(c.n, c.k, c.fiber_rank), jet_curvature(c));
}

bool RoundtripReport::all_ok() const {
    for (const auto& it : items)
        if (!it.ok) return false;
    return true;
}

RoundtripReport roundtrip_check(const ConnectionData& c) {
    RoundtripReport rep;
    const int n = c.n, k = c.k, r = c.fiber_rank;
    const JetConnection jc = jet_connection(c);

    // pi o h = Id
    {
        const LinearDiffOp comp = compose(jet_projection_hom(n, k, r), h_hom(c));
        rep.items.push_back({"pi_o_h_is_id", comp == LinearDiffOp::identity(jet_bundle(n, k - 1, r)),
                             ""});
    }
    // forward: nabla o j^{k-1} == iota(nabla^(k))
    {
        const LinearDiffOp lhs = compose(jc.op, jet_prolong_op(n, k - 1, r));
        const LinearDiffOp incl =
            compose(form_block_hom(n, 1, sym_top_inclusion_hom(n, k - 1, r)),
                    iota_inclusion_hom(n, k, r));
        const LinearDiffOp rhs = compose(incl, higher_op(c));
        rep.items.push_back({"nabla_o_jet_is_higher", lhs == rhs, ""});
    }
    // property 1: (Id (x) pi) o nabla == S  (vacuous projection for k = 1)
    if (k >= 2) {
        const LinearDiffOp lhs = compose(form_jet_projection_hom(n, 1, k - 1, r), jc.op);
        const LinearDiffOp rhs = spencer_op(n, k - 1, r);
        rep.items.push_back({"pi_o_nabla_is_spencer", lhs == rhs, ""});
    }
    // reverse: extract a connection back from nabla and compare
    {
        ExtractResult ex = connection_from_jet_connection(jc.op, k, r);
        bool same = ex.ok;
        if (same) {
            for (int j = 0; j < k && same; ++j)
                if (!(ex.c.gammas[static_cast<size_t>(j)] == c.gammas[static_cast<size_t>(j)]))
                    same = false;
            if (!(compose(spencer_op(n, k, r), h_hom(ex.c)) == jc.op)) same = false;
        }
        rep.items.push_back({"reverse_reconstruction", same, ex.detail});
    }
    return rep;
}

ExtractResult connection_from_jet_connection(const LinearDiffOp& nabla, int k, int r) {
    ExtractResult res;
    const int n = nabla.source.n;
    if (nabla.source.dim != jet_bundle(n, k - 1, r).dim ||
        nabla.target.dim != form_bundle(1, jet_bundle(n, k - 1, r)).dim) {
        res.detail = "operator shape is not J^{k-1}E -> Lambda^1 (x) J^{k-1}E";
        return res;
    }
    const LinearDiffOp P = compose(nabla, jet_prolong_op(n, k - 1, r));
    const auto slots = monomials_up_to(n, k - 1);
    std::map<MultiIndex, int, GradedLexLess> spos;
    for (size_t i = 0; i < slots.size(); ++i) spos[slots[i]] = static_cast<int>(i);
    const int jdim = static_cast<int>(slots.size()) * r;

    // values must lie in Lambda^1 (x) Sym^{k-1} (x) E: rows at lower slots vanish
    for (const auto& [alpha, M] : P.coeffs)
        for (int a = 0; a < n; ++a)
            for (const auto& beta : slots) {
                if (mi_sum(beta) == k - 1) continue;
                for (int e = 0; e < r; ++e)
                    for (int j = 0; j < r; ++j)
                        if (!M.at(a * jdim + spos[beta] * r + e, j).is_zero()) {
                            res.detail = "nabla o j^{k-1} has components below the top slots "
                                         "(property 1 fails)";
                            return res;
                        }
            }

    ConnectionData c = ConnectionData::flat(n, k, r);
    // top-order coefficient must be the inclusion iota(d^k s)
    for (const auto& [alpha, M] : P.coeffs) {
        const int d = mi_sum(alpha);
        if (d > k) {
            res.detail = "nabla o j^{k-1} exceeds order k";
            return res;
        }
        if (d == k) {
            for (int a = 0; a < n; ++a)
                for (const auto& beta : slots) {
                    if (mi_sum(beta) != k - 1) continue;
                    for (int e = 0; e < r; ++e)
                        for (int j = 0; j < r; ++j) {
                            const Poly& v = M.at(a * jdim + spos[beta] * r + e, j);
                            const bool expect_one = (mi_plus_axis(beta, a) == alpha) && e == j;
                            if (expect_one ? !(v == Poly::constant(n, Rational(1))) : !v.is_zero()) {
                                res.detail = "symbol of nabla o j^{k-1} is not iota (x) Id";
                                return res;
                            }
                        }
                }
        }
    }
    // read Gamma_j off the order-j coefficients; consistency across (a,beta)
    // pairs with the same index multiset is required
    for (int j = 0; j < k; ++j) {
        for (const auto& alpha : monomials_of_degree(n, j)) {
            const PolyMatrix* M = P.coeff(alpha);
            const long long cnt = tuple_count(alpha);
            std::map<MultiIndex, PolyMatrix, GradedLexLess> seen;
            for (int a = 0; a < n; ++a)
                for (const auto& beta : slots) {
                    if (mi_sum(beta) != k - 1) continue;
                    PolyMatrix block(r, r, n);
                    if (M)
                        for (int e = 0; e < r; ++e)
                            for (int ei = 0; ei < r; ++ei)
                                block.at(e, ei) = M->at(a * jdim + spos[beta] * r + e, ei);
                    const MultiIndex m = mi_plus_axis(beta, a);
                    auto it = seen.find(m);
                    if (it == seen.end())
                        seen.emplace(m, block);
                    else if (!(it->second == block)) {
                        res.detail = "order-" + std::to_string(j) +
                                     " coefficients inconsistent across symmetric index positions "
                                     "(property 2 fails)";
                        return res;
                    }
                }
            for (const auto& [m, block] : seen) {
                const PolyMatrix scaled = Rational(1, static_cast<long>(cnt)) * block;
                for (const auto& lt : all_tuples(n, k)) {
                    if (!(tuple_to_multiindex(lt, n) == m)) continue;
                    for (const auto& ut : all_tuples(n, j)) {
                        if (!(tuple_to_multiindex(ut, n) == alpha)) continue;
                        c.gamma(j, tuple_flat_index(lt, n), tuple_flat_index(ut, n)) = scaled;
                    }
                }
            }
        }
    }
    res.ok = true;
    res.c = std::move(c);
    return res;
}

}  // namespace hoc
