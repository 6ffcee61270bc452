#include "hoc/bundle.hpp"

namespace hoc {

Bundle trivial_bundle(int n, int r, const std::string& name) { return {n, r, name}; }

Bundle tensor_bundle(int n, SymmetryType sym, int r) {
    return {n, symmetry_dimension(sym, n) * r, sym.str() + (r > 1 ? "(x)E" + std::to_string(r) : "")};
}

int jet_slot_count(int n, int order) {
    return static_cast<int>(monomials_up_to(n, order).size());
}

Bundle jet_bundle(int n, int order, int r) {
    return {n, jet_slot_count(n, order) * r, "J^" + std::to_string(order) + "E"};
}

Bundle form_bundle(int p, const Bundle& inner) {
    return {inner.n, static_cast<int>(binomial(inner.n, p)) * inner.dim,
            "Lambda^" + std::to_string(p) + "(x)" + inner.name};
}

Bundle sum_bundle(const Bundle& a, const Bundle& b, const std::string& name) {
    return {a.n, a.dim + b.dim, name.empty() ? a.name + "(+)" + b.name : name};
}

}  // namespace hoc
