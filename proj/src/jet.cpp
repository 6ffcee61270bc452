#include "hoc/jet.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hoc {

JetSection JetSection::zero(int n, int order, int fiber_rank) {
    JetSection u;
    u.n = n;
    u.order = order;
    u.fiber_rank = fiber_rank;
    for (const auto& a : monomials_up_to(n, order))
        u.slots.emplace(a, std::vector<Poly>(static_cast<size_t>(fiber_rank), Poly(n)));
    return u;
}

std::vector<Poly>& JetSection::slot(const MultiIndex& a) {
    auto it = slots.find(a);
    if (it == slots.end()) throw std::invalid_argument("JetSection::slot: no such slot");
    return it->second;
}

const std::vector<Poly>& JetSection::slot(const MultiIndex& a) const {
    auto it = slots.find(a);
    if (it == slots.end()) throw std::invalid_argument("JetSection::slot: no such slot");
    return it->second;
}

bool JetSection::operator==(const JetSection& o) const {
    return n == o.n && order == o.order && fiber_rank == o.fiber_rank && slots == o.slots;
}

FormValuedJet FormValuedJet::zero(int n, int p, int order, int fiber_rank) {
    FormValuedJet w;
    w.n = n;
    w.p = p;
    w.order = order;
    w.fiber_rank = fiber_rank;
    w.parts.assign(increasing_tuples(n, p).size(), JetSection::zero(n, order, fiber_rank));
    return w;
}

bool FormValuedJet::operator==(const FormValuedJet& o) const {
    return n == o.n && p == o.p && order == o.order && fiber_rank == o.fiber_rank && parts == o.parts;
}

JetSection jet_prolong(const std::vector<Poly>& s, int order) {
    if (s.empty()) throw std::invalid_argument("jet_prolong: empty section");
    if (order < 0) throw std::invalid_argument("jet_prolong: negative order");
    const int n = s[0].nvars();
    JetSection u = JetSection::zero(n, order, static_cast<int>(s.size()));
    for (auto& [a, vals] : u.slots) {
        for (size_t e = 0; e < s.size(); ++e) {
            Poly p = s[e];
            for (size_t ax = 0; ax < a.size(); ++ax)
                for (int rep = 0; rep < a[ax]; ++rep) p = p.derive(static_cast<int>(ax));
            vals[e] = p;
        }
    }
    return u;
}

JetSection jet_project(const JetSection& u) {
    if (u.order < 1) throw std::invalid_argument("jet_project: order 0 jet");
    JetSection v = JetSection::zero(u.n, u.order - 1, u.fiber_rank);
    for (auto& [a, vals] : v.slots) vals = u.slot(a);
    return v;
}

FormValuedJet spencer(const JetSection& u) {
    if (u.order < 1) throw std::invalid_argument("spencer: order >= 1 required");
    FormValuedJet w = FormValuedJet::zero(u.n, 1, u.order - 1, u.fiber_rank);
    for (int a = 0; a < u.n; ++a) {
        JetSection& part = w.parts[static_cast<size_t>(a)];
        for (auto& [beta, vals] : part.slots) {
            const auto& ub = u.slot(beta);
            const auto& ua = u.slot(mi_plus_axis(beta, a));
            for (int e = 0; e < u.fiber_rank; ++e)
                vals[static_cast<size_t>(e)] = ub[static_cast<size_t>(e)].derive(a) - ua[static_cast<size_t>(e)];
        }
    }
    return w;
}

FormValuedJet spencer_wedge(const FormValuedJet& w) {
    if (w.order < 1) throw std::invalid_argument("spencer_wedge: order >= 1 required");
    FormValuedJet out = FormValuedJet::zero(w.n, w.p + 1, w.order - 1, w.fiber_rank);
    const auto src_tuples = increasing_tuples(w.n, w.p);
    const auto src_pos = index_of(src_tuples);
    const auto tgt_tuples = increasing_tuples(w.n, w.p + 1);
    const Rational scale(1, w.p + 1);
    for (size_t fa = 0; fa < tgt_tuples.size(); ++fa) {
        const auto& A = tgt_tuples[fa];
        JetSection& part = out.parts[fa];
        for (auto& [beta, vals] : part.slots) {
            for (int i = 0; i <= w.p; ++i) {
                const int ai = A[static_cast<size_t>(i)];
                std::vector<int> rest = A;
                rest.erase(rest.begin() + i);
                const JetSection& src = w.parts[static_cast<size_t>(src_pos.at(rest))];
                const auto& ub = src.slot(beta);
                const auto& ua = src.slot(mi_plus_axis(beta, ai));
                const int sgn = i % 2 ? -1 : 1;
                for (int e = 0; e < w.fiber_rank; ++e) {
                    Poly t = ub[static_cast<size_t>(e)].derive(ai) - ua[static_cast<size_t>(e)];
                    t *= scale;
                    if (sgn > 0)
                        vals[static_cast<size_t>(e)] += t;
                    else
                        vals[static_cast<size_t>(e)] -= t;
                }
            }
        }
    }
    return out;
}

std::vector<Poly> jet_to_coords(const JetSection& u) {
    std::vector<Poly> c;
    c.reserve(u.slots.size() * static_cast<size_t>(u.fiber_rank));
    for (const auto& [a, vals] : u.slots)
        for (const auto& p : vals) c.push_back(p);
    return c;
}

JetSection jet_from_coords(int n, int order, int r, const std::vector<Poly>& coords) {
    JetSection u = JetSection::zero(n, order, r);
    size_t i = 0;
    for (auto& [a, vals] : u.slots)
        for (auto& p : vals) {
            if (i >= coords.size()) throw std::invalid_argument("jet_from_coords: short vector");
            p = coords[i++];
        }
    if (i != coords.size()) throw std::invalid_argument("jet_from_coords: size mismatch");
    return u;
}

std::vector<Poly> form_jet_to_coords(const FormValuedJet& w) {
    std::vector<Poly> c;
    for (const auto& part : w.parts) {
        auto pc = jet_to_coords(part);
        c.insert(c.end(), pc.begin(), pc.end());
    }
    return c;
}

FormValuedJet form_jet_from_coords(int n, int p, int order, int r, const std::vector<Poly>& coords) {
    FormValuedJet w = FormValuedJet::zero(n, p, order, r);
    const size_t inner = static_cast<size_t>(jet_slot_count(n, order)) * r;
    if (coords.size() != inner * w.parts.size())
        throw std::invalid_argument("form_jet_from_coords: size mismatch");
    for (size_t f = 0; f < w.parts.size(); ++f)
        w.parts[f] = jet_from_coords(n, order, r,
                                     std::vector<Poly>(coords.begin() + static_cast<long>(f * inner),
                                                       coords.begin() + static_cast<long>((f + 1) * inner)));
    return w;
}

namespace {

struct JetLayout {
    std::vector<MultiIndex> slots;
    std::map<MultiIndex, int, GradedLexLess> pos;
    int r;
    JetLayout(int n, int order, int r_) : slots(monomials_up_to(n, order)), r(r_) {
        for (size_t i = 0; i < slots.size(); ++i) pos[slots[i]] = static_cast<int>(i);
    }
    int coord(const MultiIndex& a, int e) const { return pos.at(a) * r + e; }
    int dim() const { return static_cast<int>(slots.size()) * r; }
};

}  // namespace

LinearDiffOp spencer_op(int n, int order, int r) { return spencer_wedge_op(n, 0, order, r); }

LinearDiffOp spencer_wedge_op(int n, int p, int order, int r) {
    if (order < 1) throw std::invalid_argument("spencer_wedge_op: order >= 1 required");
    const JetLayout src_jet(n, order, r), tgt_jet(n, order - 1, r);
    const auto src_forms = increasing_tuples(n, p);
    const auto src_form_pos = index_of(src_forms);
    const auto tgt_forms = increasing_tuples(n, p + 1);
    const Bundle src = form_bundle(p, jet_bundle(n, order, r));
    const Bundle tgt = form_bundle(p + 1, jet_bundle(n, order - 1, r));
    LinearDiffOp op(src, tgt);
    const Rational scale(1, p + 1);
    PolyMatrix c0(tgt.dim, src.dim, n);
    std::map<int, PolyMatrix> c1;  // axis -> matrix
    for (int a = 0; a < n; ++a) c1.emplace(a, PolyMatrix(tgt.dim, src.dim, n));
    for (size_t fa = 0; fa < tgt_forms.size(); ++fa) {
        const auto& A = tgt_forms[fa];
        for (int i = 0; i <= p; ++i) {
            const int ai = A[static_cast<size_t>(i)];
            std::vector<int> rest = A;
            rest.erase(rest.begin() + i);
            const int fsrc = src_form_pos.at(rest);
            const Rational sgn = (i % 2 ? Rational(-1) : Rational(1)) * scale;
            for (const auto& beta : tgt_jet.slots) {
                for (int e = 0; e < r; ++e) {
                    const int row = static_cast<int>(fa) * tgt_jet.dim() + tgt_jet.coord(beta, e);
                    c1.at(ai).at(row, fsrc * src_jet.dim() + src_jet.coord(beta, e)) +=
                        Poly::constant(n, sgn);
                    c0.at(row, fsrc * src_jet.dim() + src_jet.coord(mi_plus_axis(beta, ai), e)) +=
                        Poly::constant(n, -sgn);
                }
            }
        }
    }
    op.add_coeff(mi_zero(n), c0);
    for (int a = 0; a < n; ++a) op.add_coeff(mi_unit(n, a), c1.at(a));
    return op;
}

LinearDiffOp jet_prolong_op(int n, int order, int r) {
    const JetLayout lay(n, order, r);
    const Bundle src = trivial_bundle(n, r);
    const Bundle tgt = jet_bundle(n, order, r);
    LinearDiffOp op(src, tgt);
    for (const auto& a : lay.slots) {
        PolyMatrix m(tgt.dim, src.dim, n);
        for (int e = 0; e < r; ++e) m.at(lay.coord(a, e), e) = Poly::constant(n, Rational(1));
        op.add_coeff(a, m);
    }
    return op;
}

LinearDiffOp jet_projection_hom(int n, int order, int r) {
    if (order < 1) throw std::invalid_argument("jet_projection_hom: order >= 1 required");
    const JetLayout src(n, order, r), tgt(n, order - 1, r);
    PolyMatrix m(tgt.dim(), src.dim(), n);
    for (const auto& a : tgt.slots)
        for (int e = 0; e < r; ++e)
            m.at(tgt.coord(a, e), src.coord(a, e)) = Poly::constant(n, Rational(1));
    return LinearDiffOp::homomorphism(jet_bundle(n, order, r), jet_bundle(n, order - 1, r), m);
}

LinearDiffOp form_jet_projection_hom(int n, int p, int order, int r) {
    return form_block_hom(n, p, jet_projection_hom(n, order, r));
}

LinearDiffOp sym_top_inclusion_hom(int n, int order, int r) {
    const SymmetryTable& tab = symmetry_table(n, SymmetryType::sym(order));
    const JetLayout lay(n, order, r);
    const Bundle src = tensor_bundle(n, SymmetryType::sym(order), r);
    const Bundle tgt = jet_bundle(n, order, r);
    PolyMatrix m(tgt.dim, src.dim, n);
    for (const auto& a : lay.slots) {
        if (mi_sum(a) != order) continue;
        const int flat = tuple_flat_index(multiindex_to_tuple(a), n);
        for (int s = 0; s < tab.dim(); ++s) {
            const Rational& v = tab.basis.at(flat, s);
            if (v == 0) continue;
            for (int e = 0; e < r; ++e)
                m.at(lay.coord(a, e), s * r + e) += Poly::constant(n, v);
        }
    }
    return LinearDiffOp::homomorphism(src, tgt, m);
}

LinearDiffOp jet_top_reader_hom(int n, int order, int r) {
    const SymmetryTable& tab = symmetry_table(n, SymmetryType::sym(order));
    const JetLayout lay(n, order, r);
    const Bundle src = jet_bundle(n, order, r);
    const Bundle tgt = tensor_bundle(n, SymmetryType::sym(order), r);
    PolyMatrix m(tgt.dim, src.dim, n);
    // coords of the full symmetric tensor whose value at every tuple of
    // content a is the slot value u_a
    const auto tuples = all_tuples(n, order);
    for (int s = 0; s < tab.dim(); ++s) {
        for (int flat = 0; flat < tab.full_dim; ++flat) {
            const Rational& c = tab.coords.at(s, flat);
            if (c == 0) continue;
            const MultiIndex a = tuple_to_multiindex(tuples[static_cast<size_t>(flat)], n);
            for (int e = 0; e < r; ++e) m.at(s * r + e, lay.coord(a, e)) += Poly::constant(n, c);
        }
    }
    return LinearDiffOp::homomorphism(src, tgt, m);
}

LinearDiffOp iota_inclusion_hom(int n, int k, int r) {
    if (k < 1) throw std::invalid_argument("iota_inclusion_hom: k >= 1 required");
    const SymmetryTable& big = symmetry_table(n, SymmetryType::sym(k));
    const SymmetryTable& small = symmetry_table(n, SymmetryType::sym(k - 1));
    const Bundle src = tensor_bundle(n, SymmetryType::sym(k), r);
    const Bundle inner = tensor_bundle(n, SymmetryType::sym(k - 1), r);
    const Bundle tgt = form_bundle(1, inner);
    PolyMatrix m(tgt.dim, src.dim, n);
    const auto small_tuples = all_tuples(n, k - 1);
    for (int a = 0; a < n; ++a) {
        for (int g = 0; g < small.full_dim; ++g) {
            std::vector<int> tup = small_tuples[static_cast<size_t>(g)];
            tup.insert(tup.begin(), a);
            const int big_flat = tuple_flat_index(tup, n);
            // target coord (a, (s_small, e)) <- sum over source coords
            for (int ss = 0; ss < small.dim(); ++ss) {
                const Rational& cs = small.coords.at(ss, g);
                if (cs == 0) continue;
                for (int sb = 0; sb < big.dim(); ++sb) {
                    const Rational& vb = big.basis.at(big_flat, sb);
                    if (vb == 0) continue;
                    for (int e = 0; e < r; ++e)
                        m.at(a * inner.dim + ss * r + e, sb * r + e) += Poly::constant(n, cs * vb);
                }
            }
        }
    }
    return LinearDiffOp::homomorphism(src, tgt, m);
}

LinearDiffOp form_block_hom(int n, int p, const LinearDiffOp& inner_hom) {
    if (inner_hom.order() > 0) throw std::invalid_argument("form_block_hom: inner operator must be order 0");
    const int nf = static_cast<int>(binomial(n, p));
    const Bundle src = form_bundle(p, inner_hom.source);
    const Bundle tgt = form_bundle(p, inner_hom.target);
    PolyMatrix m(tgt.dim, src.dim, n);
    if (!inner_hom.is_zero()) {
        const PolyMatrix& im = inner_hom.coeffs.begin()->second;
        for (int f = 0; f < nf; ++f)
            for (int i = 0; i < inner_hom.target.dim; ++i)
                for (int j = 0; j < inner_hom.source.dim; ++j)
                    if (!im.at(i, j).is_zero())
                        m.at(f * inner_hom.target.dim + i, f * inner_hom.source.dim + j) = im.at(i, j);
    }
    return LinearDiffOp::homomorphism(src, tgt, m);
}

LinearDiffOp theta_form_inclusion_hom(int n, int p, int q, int r) {
    const SymmetryType th = SymmetryType::theta(p, q);
    const SymmetryTable& ttab = symmetry_table(n, th);
    const SymmetryTable& stab = symmetry_table(n, SymmetryType::sym(q));
    const Bundle src = tensor_bundle(n, th, r);
    const Bundle inner = tensor_bundle(n, SymmetryType::sym(q), r);
    const Bundle tgt = form_bundle(p, inner);
    const auto forms = increasing_tuples(n, p);
    const auto qt = all_tuples(n, q);
    PolyMatrix m(tgt.dim, src.dim, n);
    for (int s = 0; s < ttab.dim(); ++s) {
        for (size_t f = 0; f < forms.size(); ++f) {
            // the Sym(q) tensor at this form index, then its coordinates
            QVec comp(static_cast<size_t>(stab.full_dim), Rational(0));
            for (int g = 0; g < stab.full_dim; ++g) {
                std::vector<int> tup = forms[f];
                tup.insert(tup.end(), qt[static_cast<size_t>(g)].begin(), qt[static_cast<size_t>(g)].end());
                comp[static_cast<size_t>(g)] = ttab.basis.at(tuple_flat_index(tup, n), s);
            }
            QVec coords = matvec(stab.coords, comp);
            for (int ss = 0; ss < stab.dim(); ++ss) {
                if (coords[static_cast<size_t>(ss)] == 0) continue;
                for (int e = 0; e < r; ++e)
                    m.at(static_cast<int>(f) * inner.dim + ss * r + e, s * r + e) +=
                        Poly::constant(n, coords[static_cast<size_t>(ss)]);
            }
        }
    }
    return LinearDiffOp::homomorphism(src, tgt, m);
}

LinearDiffOp form_to_theta_hom(int n, int p, int q, int r) {
    const SymmetryType th = SymmetryType::theta(p, q);
    const SymmetryTable& ttab = symmetry_table(n, th);
    const SymmetryTable& stab = symmetry_table(n, SymmetryType::sym(q));
    const Bundle inner = tensor_bundle(n, SymmetryType::sym(q), r);
    const Bundle src = form_bundle(p, inner);
    const Bundle tgt = tensor_bundle(n, th, r);
    const auto forms = increasing_tuples(n, p);
    const auto form_pos = index_of(forms);
    const auto full_tuples = all_tuples(n, p + q);
    PolyMatrix m(tgt.dim, src.dim, n);
    // full tensor from form-major coords (antisymmetric expansion in the
    // first p indices, Sym-basis expansion in the last q), then Theta coords
    for (size_t ft = 0; ft < full_tuples.size(); ++ft) {
        const auto& tup = full_tuples[ft];
        std::vector<int> head(tup.begin(), tup.begin() + p);
        std::vector<int> sorted = head;
        std::sort(sorted.begin(), sorted.end());
        bool repeat = false;
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1]) repeat = true;
        if (repeat) continue;
        int inv = 0;
        for (size_t i = 0; i < head.size(); ++i)
            for (size_t j = i + 1; j < head.size(); ++j)
                if (head[i] > head[j]) ++inv;
        const Rational sgn = inv % 2 ? Rational(-1) : Rational(1);
        const int f = form_pos.at(sorted);
        const int tail_flat = tuple_flat_index(std::vector<int>(tup.begin() + p, tup.end()), n);
        for (int t = 0; t < ttab.dim(); ++t) {
            const Rational& ct = ttab.coords.at(t, static_cast<int>(ft));
            if (ct == 0) continue;
            for (int ss = 0; ss < stab.dim(); ++ss) {
                const Rational& vb = stab.basis.at(tail_flat, ss);
                if (vb == 0) continue;
                for (int e = 0; e < r; ++e)
                    m.at(t * r + e, f * inner.dim + ss * r + e) += Poly::constant(n, ct * sgn * vb);
            }
        }
    }
    return LinearDiffOp::homomorphism(src, tgt, m);
}

bool Diagram4Report::all_ok() const {
    for (const auto& it : items)
        if (!it.ok) return false;
    return true;
}

namespace {

void push_check(std::vector<CheckItem>& items, const std::string& id, bool ok,
                const std::string& detail = "") {
    items.push_back({id, ok, detail});
}

}  // namespace

Diagram4Report check_diagram4(int k, int n, int r, unsigned long long seed, int samples) {
    if (k < 1) throw std::invalid_argument("check_diagram4: k >= 1 required");
    Diagram4Report rep;

    // (i) rows: 0 -> Sym^l (x) E -> J^l E -> J^{l-1} E -> 0 for l = k..1
    for (int l = k; l >= 1; --l) {
        const LinearDiffOp incl = sym_top_inclusion_hom(n, l, r);
        const LinearDiffOp proj = jet_projection_hom(n, l, r);
        const LinearDiffOp comp = compose(proj, incl);
        push_check(rep.items, "row" + std::to_string(l) + ".pi_o_incl_zero", comp.is_zero());
        const QMatrix mi = to_constant(incl.coeffs.begin()->second);
        const QMatrix mp = to_constant(proj.coeffs.begin()->second);
        const bool inj = rank(mi) == incl.source.dim;
        const bool surj = rank(mp) == proj.target.dim;
        const bool dims = incl.source.dim + proj.target.dim == incl.target.dim;
        push_check(rep.items, "row" + std::to_string(l) + ".exact_ranks", inj && surj && dims,
                   "dim " + std::to_string(incl.source.dim) + "+" + std::to_string(proj.target.dim) +
                       "=" + std::to_string(incl.target.dim));
    }

    // (ii) S o j^l = 0, operator level, for the column starts
    for (int l = k; l >= 1; --l) {
        const LinearDiffOp c = compose(spencer_op(n, l, r), jet_prolong_op(n, l, r));
        push_check(rep.items, "col.S_o_j" + std::to_string(l) + "_zero", c.is_zero());
    }

    // (iii) first column starts with -iota (x) Id
    {
        const LinearDiffOp lhs = compose(spencer_op(n, k, r), sym_top_inclusion_hom(n, k, r));
        const LinearDiffOp incl_next =
            form_block_hom(n, 1, sym_top_inclusion_hom(n, k - 1, r));
        const LinearDiffOp rhs = compose(incl_next, Rational(-1) * iota_inclusion_hom(n, k, r));
        push_check(rep.items, "col0.S_incl_is_minus_iota", lhs == rhs);
    }
    // higher first-column entries are homomorphisms (order 0)
    for (int i = 1; i < k; ++i) {
        const int l = k - i;
        const LinearDiffOp incl = form_block_hom(n, i, sym_top_inclusion_hom(n, l, r));
        const LinearDiffOp Si = spencer_wedge_op(n, i, l, r);
        const LinearDiffOp c = compose(Si, incl);
        push_check(rep.items, "col" + std::to_string(i) + ".S_incl_is_hom", c.order() <= 0);
        if (l >= 2) {
            const LinearDiffOp drop = form_jet_projection_hom(n, i + 1, l - 1, r);
            push_check(rep.items, "col" + std::to_string(i) + ".S_incl_lands_in_sym",
                       compose(drop, c).is_zero());
        }
    }

    // (iv) squares: (Id (x) pi) o S == S o (Id (x) pi), operator level
    for (int i = 0; i + 1 < k; ++i) {
        const int l = k - i;
        if (l - 1 < 1) break;
        const LinearDiffOp S_up = spencer_wedge_op(n, i, l, r);
        const LinearDiffOp S_down = spencer_wedge_op(n, i, l - 1, r);
        const LinearDiffOp pi_src = form_jet_projection_hom(n, i, l, r);
        const LinearDiffOp pi_tgt = form_jet_projection_hom(n, i + 1, l - 1, r);
        const bool eq = compose(pi_tgt, S_up) == compose(S_down, pi_src);
        push_check(rep.items, "square" + std::to_string(i) + ".pi_S_commute", eq);
    }

    // random-sample square commutativity on the top square, exercising the
    // section-level spencer/jet_project implementations too
    {
        std::mt19937_64 rng(seed);
        auto rnd_poly = [&](int deg) {
            Poly p(n);
            const auto mons = monomials_up_to(n, deg);
            for (const auto& a : mons) {
                const int c = static_cast<int>(rng() % 7) - 3;
                if (c != 0) p.add_term(a, Rational(c));
            }
            return p;
        };
        bool ok = true;
        for (int s = 0; s < samples && k >= 2; ++s) {
            JetSection u = JetSection::zero(n, k, r);
            for (auto& [a, vals] : u.slots)
                for (auto& p : vals) p = rnd_poly(4);
            FormValuedJet su = spencer(u);
            // route 1: project the jet part of S u
            FormValuedJet left = su;
            for (auto& part : left.parts) part = jet_project(part);
            // route 2: S of the projected jet
            FormValuedJet right = spencer(jet_project(u));
            if (!(left == right)) ok = false;
            // holonomic column start
            std::vector<Poly> sec(static_cast<size_t>(r), Poly(n));
            for (auto& p : sec) p = rnd_poly(4);
            FormValuedJet sj = spencer(jet_prolong(sec, k));
            if (!(sj == FormValuedJet::zero(n, 1, k - 1, r))) ok = false;
        }
        push_check(rep.items, "samples.squares_commute", ok,
                   std::to_string(samples) + " random jets");
    }
    return rep;
}

LocalExactnessItem jets_local_exactness(int n, int order, int r, int max_degree) {
    LocalExactnessItem item;
    item.max_degree = max_degree;
    const auto mons = monomials_up_to(n, max_degree);
    const LinearDiffOp S = spencer_op(n, order, r);
    // basis of jets with polynomial slots of degree <= max_degree
    std::vector<std::vector<Poly>> images;
    std::vector<std::pair<int, MultiIndex>> basis_tags;  // (coord index, monomial)
    const int jd = S.source.dim;
    for (int c = 0; c < jd; ++c)
        for (const auto& m : mons) {
            std::vector<Poly> sec(static_cast<size_t>(jd), Poly(n));
            sec[static_cast<size_t>(c)] = Poly::monomial(n, m, Rational(1));
            images.push_back(S.apply(sec));
            basis_tags.push_back({c, m});
        }
    PolyMapKernel ker = kernel_of_images(images);
    item.kernel_dim = static_cast<long>(ker.kernel.size());
    item.expected_dim = static_cast<long>(binomial(n + max_degree, n)) * r;
    // each kernel element must be holonomic: slots == derivatives of slot 0
    item.holonomic_ok = true;
    for (const auto& kv : ker.kernel) {
        std::vector<Poly> coords(static_cast<size_t>(jd), Poly(n));
        for (size_t b = 0; b < kv.size(); ++b) {
            if (kv[b] == 0) continue;
            coords[static_cast<size_t>(basis_tags[b].first)] +=
                Poly::monomial(n, basis_tags[b].second, kv[b]);
        }
        JetSection u = jet_from_coords(n, order, r, coords);
        JetSection holo = jet_prolong(u.slot(mi_zero(n)), order);
        if (!(u == holo)) item.holonomic_ok = false;
    }
    item.ok = item.kernel_dim == item.expected_dim && item.holonomic_ok;
    return item;
}

}  // namespace hoc
