#include "hoc/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hoc {

Poly Poly::constant(int n, const Rational& c) {
    Poly p(n);
    p.add_term(mi_zero(n), c);
    return p;
}

Poly Poly::variable(int n, int axis) {
    if (axis < 0 || axis >= n) throw std::invalid_argument("Poly::variable: axis out of range");
    Poly p(n);
    p.add_term(mi_unit(n, axis), Rational(1));
    return p;
}

Poly Poly::monomial(int n, const MultiIndex& a, const Rational& c) {
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("Poly::monomial: bad index size");
    Poly p(n);
    p.add_term(a, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mi_sum(terms_.begin()->first) == 0);
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw std::domain_error("Poly: non-constant polynomial");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return mi_sum(terms_.rbegin()->first);
}

Rational Poly::coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const MultiIndex& a, const Rational& c) {
    if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("Poly::add_term: bad index size");
    if (c == 0) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::derive(int axis) const {
    if (axis < 0 || axis >= n_) throw std::invalid_argument("Poly::derive: axis out of range");
    Poly out(n_);
    for (const auto& [a, c] : terms_) {
        if (a[axis] == 0) continue;
        MultiIndex b = a;
        b[axis] -= 1;
        out.add_term(b, c * Rational(a[axis]));
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out(n_);
    for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (terms_.empty() && n_ == 0) n_ = o.n_;
    if (o.terms_.empty()) return *this;
    if (n_ != o.n_) throw std::invalid_argument("Poly: mixed variable counts");
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (terms_.empty() && n_ == 0) n_ = o.n_;
    if (o.terms_.empty()) return *this;
    if (n_ != o.n_) throw std::invalid_argument("Poly: mixed variable counts");
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_ && !a.terms_.empty() && !b.terms_.empty())
        throw std::invalid_argument("Poly: mixed variable counts");
    Poly out(a.n_ ? a.n_ : b.n_);
    for (const auto& [ai, ac] : a.terms_)
        for (const auto& [bi, bc] : b.terms_) {
            Rational c = ac * bc;
            out.add_term(mi_add(ai, bi), c);
        }
    return out;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) v *= c;
    return *this;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const MultiIndex& a = it->first;
        Rational c = it->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool is_const = mi_sum(a) == 0;
        if (c != 1 || is_const) {
            os << rat_str(c);
            if (!is_const) os << " ";
        }
        bool first_var = true;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!first_var) os << " ";
            first_var = false;
            os << "x" << (i + 1);
            if (a[i] > 1) os << "^" << a[i];
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

long long parse_uint(Cursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size() || !isdigit(static_cast<unsigned char>(c.s[c.i])))
        throw std::invalid_argument("Poly::parse: expected number at position " + std::to_string(c.i));
    long long v = 0;
    while (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        v = v * 10 + (c.s[c.i] - '0');
        ++c.i;
    }
    return v;
}

// coefficient:  int | int/int   (optional), variables: xK or xK^E, '*' optional
Poly parse_term(Cursor& c, int n) {
    Rational coeff(1);
    bool have_coeff = false;
    c.skip_ws();
    if (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        long long num = parse_uint(c);
        coeff = Rational(num);
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == '/') {
            ++c.i;
            long long den = parse_uint(c);
            if (den == 0) throw std::invalid_argument("Poly::parse: zero denominator");
            coeff = Rational(num, den);
            coeff.canonicalize();
        }
        have_coeff = true;
    }
    MultiIndex a(n, 0);
    bool have_var = false;
    while (true) {
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == '*') {
            ++c.i;
            c.skip_ws();
        }
        if (c.i >= c.s.size() || (c.s[c.i] != 'x' && c.s[c.i] != 'X')) break;
        ++c.i;
        long long k = parse_uint(c);
        if (k < 1 || k > n)
            throw std::invalid_argument("Poly::parse: variable index out of range 1.." + std::to_string(n));
        int e = 1;
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == '^') {
            ++c.i;
            e = static_cast<int>(parse_uint(c));
        }
        a[static_cast<size_t>(k - 1)] += e;
        have_var = true;
    }
    if (!have_coeff && !have_var) throw std::invalid_argument("Poly::parse: empty term");
    return Poly::monomial(n, a, coeff);
}

}  // namespace

Poly Poly::parse(const std::string& s, int n) {
    Cursor c{s};
    Poly out(n);
    if (c.done()) throw std::invalid_argument("Poly::parse: empty input");
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
        neg = c.peek() == '-';
        ++c.i;
    }
    while (true) {
        Poly t = parse_term(c, n);
        out += neg ? -t : t;
        if (c.done()) break;
        char op = c.peek();
        if (op != '+' && op != '-')
            throw std::invalid_argument("Poly::parse: unexpected character '" + std::string(1, op) + "'");
        neg = op == '-';
        ++c.i;
    }
    return out;
}

Poly poly_derive(const Poly& p, int axis_one_based) {
    if (axis_one_based < 1 || axis_one_based > p.nvars())
        throw std::invalid_argument("poly_derive: axis out of range");
    return p.derive(axis_one_based - 1);
}

}  // namespace hoc
