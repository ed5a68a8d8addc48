#ifndef QSW_RAT_HPP
#define QSW_RAT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qsw {

/// Exact rational with arbitrary-precision numerator and positive denominator,
/// always in lowest terms. Backed by GMP's mpq, which maintains exactly that
/// canonical form through arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Parses an exact rational string "p/q" or "p". Decimal notation is rejected;
/// returns nullopt on malformed input or zero denominator.
std::optional<Rat> rat_from_string(const std::string& s);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

}  // namespace qsw

#endif
