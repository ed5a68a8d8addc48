#ifndef QSW_FROBENIUS_HPP
#define QSW_FROBENIUS_HPP

#include <optional>
#include <utility>

#include "qsw/puiseux.hpp"
#include "qsw/schwarz.hpp"

namespace qsw {

/// Frobenius basis at the cusp for D^2 y = (r^2/4) E4 y.
///
/// y1 = q^{r/2} (1 + ...), y2 = c*y1*L + g with g = q^{-r/2} (1 + ...).
/// c = 0 unless r is a positive integer (the resonant case); then the
/// normalization beta_r = 0 pins g down. order counts integer-q rows of
/// each component beyond its leading exponent.
struct FrobeniusBasis {
    Rat r;
    PuiseuxSeries y1;
    LogSeries y2;
    Rat c;
    long order;
};

/// Frobenius method for D^2 y = (r^2/4) E4 y, indicial roots +-r/2.
/// Resonant r (a positive integer) requires order >= r + 2.
FrobeniusBasis solve(const Rat& r, long order);

/// Checks D^2 y - (r^2/4) E4 y = O(q^order), componentwise for log-bearing y.
bool ode_residual(const PuiseuxSeries& y, const Rat& r, long order);
bool ode_residual(const LogSeries& y, const Rat& r, long order);

/// Builds the projective solution pair from a Schwarzian solution h:
/// y2 = (Dh)^{-1/2} up to the dropped irrational scalar, y1 = h * y2.
/// h must be a pure series; it is truncated to `order` certified rows first.
std::pair<PuiseuxSeries, PuiseuxSeries> solutions_from_h(const SchwarzInput& h,
                                                         const Rat& r,
                                                         long order);

/// f = eta^{2(k+1)} y, the change of function linking the normal form back to
/// the E2-coefficient equation. Requires k = 6r - 1.
PuiseuxSeries to_f(const PuiseuxSeries& y, const Rat& r, const Rat& k,
                   long order);
LogSeries to_f(const LogSeries& y, const Rat& r, const Rat& k, long order);

/// Checks D^2 f - ((k+1)/6) E2 Df + (k(k+1)/12) D(E2) f = O(q^order),
/// componentwise for log-bearing f. "kk" after the k(k+1) coefficient.
bool kk_residual(const PuiseuxSeries& f, const Rat& k, long order);
bool kk_residual(const LogSeries& f, const Rat& k, long order);

/// W = y1 D(y2) - y2 D(y1). The log contributions cancel exactly; returns
/// the exponent-0 coefficient and whether every other coefficient vanishes.
std::pair<Rat, bool> wronskian(const FrobeniusBasis& b);

/// Writes w as A*y1 + B*g over the certified range shared by all three
/// series (g = pure part of y2); nullopt when no such combination exists.
std::optional<std::pair<Rat, Rat>> in_span(const PuiseuxSeries& w,
                                           const FrobeniusBasis& b);

}  // namespace qsw

#endif
