#ifndef REVNF_RATIONAL_HPP
#define REVNF_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace revnf {

// Exact rational coefficient. mpq_class keeps values in canonical form
// (reduced, positive denominator) as long as every constructor goes
// through the helpers below; raw two-argument construction does not
// canonicalize on its own.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Rational rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else if (c == '/' && seen_digit && !seen_slash) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw std::invalid_argument("bad rational literal '" + text + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad rational literal '" + text + "'");
    Rational q(text);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace revnf

#endif
