#include "hoc/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoc {

int mi_sum(const MultiIndex& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    const int da = mi_sum(a), db = mi_sum(b);
    if (da != db) return da < db;
    return a < b;
}

MultiIndex mi_zero(int n) { return MultiIndex(n, 0); }

MultiIndex mi_unit(int n, int axis) {
    MultiIndex a(n, 0);
    a.at(axis) = 1;
    return a;
}

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

MultiIndex mi_plus_axis(const MultiIndex& a, int axis) {
    MultiIndex c = a;
    c.at(axis) += 1;
    return c;
}

bool mi_leq(const MultiIndex& g, const MultiIndex& b) {
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] > b[i]) return false;
    return true;
}

MultiIndex mi_sub(const MultiIndex& b, const MultiIndex& g) {
    MultiIndex c = b;
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] -= g[i];
        if (c[i] < 0) throw std::invalid_argument("mi_sub: not componentwise <=");
    }
    return c;
}

static void gen_degree(int n, int d, MultiIndex& cur, int pos, std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int v = d; v >= 0; --v) {
        cur[pos] = v;
        gen_degree(n, d - v, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

std::vector<MultiIndex> monomials_of_degree(int n, int d) {
    std::vector<MultiIndex> out;
    if (d < 0) return out;
    MultiIndex cur(n, 0);
    if (n == 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    gen_degree(n, d, cur, 0, out);
    // gen_degree emits lexicographically descending; flip for ascending graded-lex.
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> monomials_up_to(int n, int d) {
    std::vector<MultiIndex> out;
    for (int j = 0; j <= d; ++j) {
        auto lvl = monomials_of_degree(n, j);
        out.insert(out.end(), lvl.begin(), lvl.end());
    }
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long multi_binomial(const MultiIndex& b, const MultiIndex& g) {
    long long r = 1;
    for (size_t i = 0; i < b.size(); ++i) r *= binomial(b[i], g[i]);
    return r;
}

long long tuple_count(const MultiIndex& a) {
    long long r = 1;
    int seen = 0;
    for (int ai : a)
        for (int j = 1; j <= ai; ++j) r = r * (++seen) / j;
    return r;
}

MultiIndex tuple_to_multiindex(const std::vector<int>& tuple, int n) {
    MultiIndex a(n, 0);
    for (int t : tuple) a.at(t) += 1;
    return a;
}

std::vector<int> multiindex_to_tuple(const MultiIndex& a) {
    std::vector<int> t;
    for (size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < a[i]; ++j) t.push_back(static_cast<int>(i));
    return t;
}

std::vector<std::vector<int>> all_tuples(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r, 0);
    const long long total = power_ll(n, r);
    out.reserve(static_cast<size_t>(total));
    for (long long i = 0; i < total; ++i) {
        long long x = i;
        for (int pos = r - 1; pos >= 0; --pos) {
            cur[pos] = static_cast<int>(x % n);
            x /= n;
        }
        out.push_back(cur);
    }
    return out;
}

int tuple_flat_index(const std::vector<int>& tuple, int n) {
    long long idx = 0;
    for (int t : tuple) idx = idx * n + t;
    return static_cast<int>(idx);
}

long long power_ll(int n, int r) {
    long long p = 1;
    for (int i = 0; i < r; ++i) p *= n;
    return p;
}

std::vector<std::vector<int>> increasing_tuples(int n, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > n) return out;
    std::vector<int> cur(p);
    for (int i = 0; i < p; ++i) cur[i] = i;
    if (p == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        int i = p - 1;
        while (i >= 0 && cur[i] == n - p + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::map<std::vector<int>, int> index_of(const std::vector<std::vector<int>>& v) {
    std::map<std::vector<int>, int> m;
    for (size_t i = 0; i < v.size(); ++i) m[v[i]] = static_cast<int>(i);
    return m;
}

}  // namespace hoc
