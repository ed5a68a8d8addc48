#ifndef QSW_MODULAR_FORMS_HPP
#define QSW_MODULAR_FORMS_HPP

#include <optional>
#include <string>

#include "qsw/puiseux.hpp"

namespace qsw {

// All q-expansions follow one order convention: `order` counts integer-q
// coefficient rows beyond the (possibly fractional) leading exponent, so a
// result with leading exponent e is certified modulo O(q^{e+order+1}).

/// Divisor power sum: sum of d^k over the divisors d of n (n >= 1).
Int sigma(long k, long n);

/// E2 = 1 - 24 sum_{n>=1} sigma_1(n) q^n.
PuiseuxSeries e2(long order);

/// E4 = 1 + 240 sum_{n>=1} sigma_3(n) q^n.
PuiseuxSeries e4(long order);

/// Dedekind eta: q^{1/24} prod_{n>=1} (1 - q^n).
PuiseuxSeries eta(long order);

/// eta^w for rational w, exactly: q^{w/24} times the monic product part raised
/// via pow_rat.
PuiseuxSeries eta_pow(const Rat& w, long order);

/// Legendre symbol (n/5): 0 if 5 | n, +1 for n = +-1, -1 for n = +-2 mod 5.
int legendre5(long n);

/// The level-5 Hauptmodul t = q^{1/5} prod_{n>=1} (1 - q^n)^{(n/5)}.
PuiseuxSeries haupt_t(long order);

/// Checks E2 = 24 D(eta)/eta up to O(q^order); this is the classical
/// logarithmic-derivative identity with every 2*pi*i absorbed into D.
bool verify_e2_eta(long order);

/// Checks 12 D(E2) = E2^2 - E4 up to O(q^order) (Ramanujan's E2 derivative
/// identity in D-form).
bool verify_ramanujan(long order);

/// Catalog entry for the cache and the CLI `series` command.
struct NamedSeries {
    std::string name;     // "E2", "E4", "eta", "eta_pow:w", "t"
    PuiseuxSeries series;
    long order;
};

/// Resolves a catalog name ("E2", "E4", "eta", "eta_pow:<w>", "t");
/// nullopt for unknown names or malformed eta_pow weights.
std::optional<NamedSeries> make_named(const std::string& name, long order);

/// Catalog name with the eta_pow weight in lowest terms, or nullopt when
/// the name is outside the catalog. Does not compute the series.
std::optional<std::string> canonical_series_name(const std::string& name);

}  // namespace qsw

#endif
