#ifndef HOC_RATIONAL_HPP
#define HOC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hoc {

// Exact rational scalar. mpq_class keeps values canonicalized: lowest terms,
// positive denominator.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q"; throws std::invalid_argument on malformed input.
Rational rat_parse(const std::string& s);

// "p" when integral, else "p/q".
std::string rat_str(const Rational& r);

}  // namespace hoc

#endif
