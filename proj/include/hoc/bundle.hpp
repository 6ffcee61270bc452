#ifndef HOC_BUNDLE_HPP
#define HOC_BUNDLE_HPP

#include <string>

#include "hoc/symmetry.hpp"

namespace hoc {

// Minimal bundle descriptor: sections are plain coordinate vectors of
// polynomials of length `dim`. The structured types (tensor fields, jets,
// form-valued jets, sums) define their own coordinate layouts; see the
// factories below for the conventions.
struct Bundle {
    int n = 0;
    int dim = 0;
    std::string name;

    bool compatible(const Bundle& o) const { return n == o.n && dim == o.dim; }
};

// dim = r; coordinates are the fiber components of E.
Bundle trivial_bundle(int n, int r, const std::string& name = "E");

// dim = symdim * r; coordinate (s, e) at s*r + e, where s runs over the
// symmetry-adapted basis of symmetry_table(n, sym).
Bundle tensor_bundle(int n, SymmetryType sym, int r);

// dim = #slots * r with slots = monomials_up_to(n, order) in graded-lex
// order; coordinate (slot, e) at slot*r + e.
Bundle jet_bundle(int n, int order, int r);

// Lambda^p (x) inner: dim = C(n,p) * inner.dim; form indices are increasing
// p-tuples in lexicographic order, form-major layout f*inner.dim + i.
Bundle form_bundle(int p, const Bundle& inner);

// Direct sum, a-coordinates first.
Bundle sum_bundle(const Bundle& a, const Bundle& b, const std::string& name = "");

int jet_slot_count(int n, int order);

}  // namespace hoc

#endif
