#include "hoc/rational.hpp"

#include <stdexcept>

namespace hoc {

Rational rat_parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("rat_parse: empty string");
    try {
        Rational r(t);
        if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
    }
}

std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace hoc
