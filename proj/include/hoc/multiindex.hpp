#ifndef HOC_MULTIINDEX_HPP
#define HOC_MULTIINDEX_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace hoc {

// Derivative/exponent multi-index: one non-negative entry per variable.
using MultiIndex = std::vector<int>;

int mi_sum(const MultiIndex& a);

// Graded lexicographic order: first by total degree, then lexicographically.
// This is the one monomial/slot order used everywhere.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

MultiIndex mi_zero(int n);
MultiIndex mi_unit(int n, int axis);          // e_axis, 0-based
MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b);
MultiIndex mi_plus_axis(const MultiIndex& a, int axis);
bool mi_leq(const MultiIndex& g, const MultiIndex& b);   // componentwise g <= b
MultiIndex mi_sub(const MultiIndex& b, const MultiIndex& g);  // requires mi_leq(g,b)

// All multi-indices with |a| == d (resp. <= d), in graded-lex order.
std::vector<MultiIndex> monomials_of_degree(int n, int d);
std::vector<MultiIndex> monomials_up_to(int n, int d);

long long binomial(int n, int k);
// prod_i C(b_i, g_i); the Leibniz coefficient.
long long multi_binomial(const MultiIndex& b, const MultiIndex& g);
// |a|! / prod a_i!  == number of distinct index tuples with content a.
long long tuple_count(const MultiIndex& a);

// Index tuples (lists of 0-based axis ids) <-> multi-indices.
MultiIndex tuple_to_multiindex(const std::vector<int>& tuple, int n);
std::vector<int> multiindex_to_tuple(const MultiIndex& a);  // non-decreasing tuple

// All r-tuples over {0..n-1} in row-major order; flat index of a tuple.
std::vector<std::vector<int>> all_tuples(int n, int r);
int tuple_flat_index(const std::vector<int>& tuple, int n);
long long power_ll(int n, int r);

// Strictly increasing p-tuples over {0..n-1}, lexicographic.
std::vector<std::vector<int>> increasing_tuples(int n, int p);

// Position lookup helper for small enumerations.
std::map<std::vector<int>, int> index_of(const std::vector<std::vector<int>>& v);

}  // namespace hoc

#endif
