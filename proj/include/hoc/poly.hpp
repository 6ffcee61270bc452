#ifndef HOC_POLY_HPP
#define HOC_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "hoc/multiindex.hpp"
#include "hoc/rational.hpp"

namespace hoc {

// Exact multivariate polynomial over the rationals in n variables x1..xn.
// Terms are kept in graded-lex order with no stored zero coefficients, so
// two polynomials are equal iff their term maps are equal.
class Poly {
  public:
    using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

    Poly() = default;
    explicit Poly(int n) : n_(n) {}

    static Poly constant(int n, const Rational& c);
    static Poly variable(int n, int axis);  // 0-based axis
    static Poly monomial(int n, const MultiIndex& a, const Rational& c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // 0 for the zero polynomial
    int degree() const;               // -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }
    Rational coeff(const MultiIndex& a) const;

    Poly derive(int axis) const;  // exact partial derivative, 0-based axis

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void add_term(const MultiIndex& a, const Rational& c);

    // Canonical text form, leading (graded-lex greatest) term first,
    // e.g. "3/2 x1^2 x2 - x3". Zero prints as "0".
    std::string str() const;
    // Whitespace-insensitive parser for the same syntax.
    static Poly parse(const std::string& s, int n);

  private:
    int n_ = 0;
    TermMap terms_;
};

// Axis in 1..n per the operator calculus convention used by the test suites.
Poly poly_derive(const Poly& p, int axis_one_based);

}  // namespace hoc

#endif
