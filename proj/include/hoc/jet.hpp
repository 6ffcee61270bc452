#ifndef HOC_JET_HPP
#define HOC_JET_HPP

#include <string>
#include <vector>

#include "hoc/diff_op.hpp"
#include "hoc/report.hpp"
#include "hoc/tensor_field.hpp"

namespace hoc {

// Coordinate representative of a section of J^order E: one fiber vector per
// derivative multi-index. Slots are first-class data; nothing forces them to
// be derivatives of slot 0 (non-holonomic jets are valid values).
struct JetSection {
    int n = 0, order = 0, fiber_rank = 1;
    std::map<MultiIndex, std::vector<Poly>, GradedLexLess> slots;  // every |a| <= order present

    static JetSection zero(int n, int order, int fiber_rank);
    std::vector<Poly>& slot(const MultiIndex& a);
    const std::vector<Poly>& slot(const MultiIndex& a) const;
    bool operator==(const JetSection& o) const;
};

// Element of Lambda^p (x) J^order E: one jet per increasing p-tuple of form
// indices (antisymmetry holds by storing independent components only).
struct FormValuedJet {
    int n = 0, p = 0, order = 0, fiber_rank = 1;
    std::vector<JetSection> parts;  // indexed like increasing_tuples(n, p)

    static FormValuedJet zero(int n, int p, int order, int fiber_rank);
    bool operator==(const FormValuedJet& o) const;
};

// j^order: slots[a] = d^a s.
JetSection jet_prolong(const std::vector<Poly>& s, int order);
// pi: forget the top-order slots. Throws for order 0.
JetSection jet_project(const JetSection& u);

// Spencer operator, coordinate realization (S u)_{a,b} = d_a u_b - u_{b+e_a}.
FormValuedJet spencer(const JetSection& u);
// Induced operator Lambda^p (x) J^l E -> Lambda^{p+1} (x) J^{l-1} E; bracket
// (projection) normalization on the new form index.
FormValuedJet spencer_wedge(const FormValuedJet& w);

// Coordinates (see bundle.hpp for layouts).
std::vector<Poly> jet_to_coords(const JetSection& u);
JetSection jet_from_coords(int n, int order, int r, const std::vector<Poly>& coords);
std::vector<Poly> form_jet_to_coords(const FormValuedJet& w);
FormValuedJet form_jet_from_coords(int n, int p, int order, int r, const std::vector<Poly>& coords);

// Operator forms.
LinearDiffOp spencer_op(int n, int order, int r);                    // J^l -> Lambda^1 (x) J^{l-1}
LinearDiffOp spencer_wedge_op(int n, int p, int order, int r);       // p >= 0, recovers spencer_op at p=0
LinearDiffOp jet_prolong_op(int n, int order, int r);                // E -> J^l
LinearDiffOp jet_projection_hom(int n, int order, int r);            // J^l -> J^{l-1}
// (Id (x) pi) on Lambda^p (x) J^l.
LinearDiffOp form_jet_projection_hom(int n, int p, int order, int r);

// Sym^l (x) E -> J^l E as the top-order slots (kernel of pi).
LinearDiffOp sym_top_inclusion_hom(int n, int order, int r);
// Read the top-order slots back as a Sym^l (x) E tensor.
LinearDiffOp jet_top_reader_hom(int n, int order, int r);
// iota: Sym^k (x) E -> Lambda^1 (x) (Sym^{k-1} (x) E), (iota w)_{a,g} = w_{(a g)}.
LinearDiffOp iota_inclusion_hom(int n, int k, int r);
// Lambda^p (x) inner_src -> Lambda^p (x) inner_tgt, block-diagonal over form indices.
LinearDiffOp form_block_hom(int n, int p, const LinearDiffOp& inner_hom);

// Theta(p,q) (x) E -> Lambda^p (x) (Sym(q) (x) E) inclusion and the
// orthogonal-projection left inverse.
LinearDiffOp theta_form_inclusion_hom(int n, int p, int q, int r);
LinearDiffOp form_to_theta_hom(int n, int p, int q, int r);

struct Diagram4Report {
    std::vector<CheckItem> items;
    bool all_ok() const;
};

// Verify diagram (4) for the given jet order k: exact rows, S o j^k = 0
// column starts, the first column beginning with -iota (x) Id, and
// commutativity of every square (operator-level plus random samples).
Diagram4Report check_diagram4(int k, int n, int r, unsigned long long seed, int samples);

struct LocalExactnessItem {
    int max_degree = 0;
    long kernel_dim = 0, expected_dim = 0;
    bool holonomic_ok = false;
    bool ok = false;
};
// ker S on jets with polynomial slots of degree <= max_degree equals the
// image of j^order, by exact rank counting and explicit reconstruction.
LocalExactnessItem jets_local_exactness(int n, int order, int r, int max_degree);

}  // namespace hoc

#endif
