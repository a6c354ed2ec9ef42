#ifndef RV_RATIONAL_HPP
#define RV_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

namespace rv {

// Exact rational scalar.  mpq_class arithmetic keeps results canonical
// (reduced, positive denominator) as long as the operands are canonical,
// so every constructor below canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Parses "3/2", "-5", "1.5" (finite decimal) into an exact rational.
std::optional<Rational> parse_rational(const std::string& s);

} // namespace rv

#endif
