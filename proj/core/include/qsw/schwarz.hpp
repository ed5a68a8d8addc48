#ifndef QSW_SCHWARZ_HPP
#define QSW_SCHWARZ_HPP

#include "qsw/puiseux.hpp"

namespace qsw {

/// A function of tau expressed through q: either a pure Puiseux series or
/// h = c*L + p with L = log q in D-units (D(L) = 1), the shape y2/y1 takes.
/// D(h) is always a pure series, which is what the Schwarz derivative needs.
struct SchwarzInput {
    Rat log_coeff;      // c; zero for pure series inputs
    PuiseuxSeries pure; // p

    static SchwarzInput from_series(PuiseuxSeries p) {
        return SchwarzInput{Rat(0), std::move(p)};
    }
    static SchwarzInput from_log(Rat c, PuiseuxSeries p) {
        return SchwarzInput{std::move(c), std::move(p)};
    }
    bool has_log() const { return !qsw::is_zero(log_coeff); }
};

struct Mat2 {
    Rat a, b, c, d;
    Rat det() const { return Rat(a * d - b * c); }
};

/// Schwarz derivative in the q-domain: S_q(h) = D(u) - u^2/2 with
/// u = D^2 h / D h. The tau-domain Schwarzian is {h, tau} = -4 pi^2 S_q(h);
/// the constant never enters the arithmetic.
PuiseuxSeries q_schwarz(const SchwarzInput& h);

inline PuiseuxSeries q_schwarz(const PuiseuxSeries& h) {
    return q_schwarz(SchwarzInput::from_series(h));
}

/// (a h + b)/(c h + d). When h carries a log term, c must be 0: a log in a
/// denominator leaves the representable space. det(M) must be nonzero.
/// Exact inputs with a multi-term denominator do not terminate; truncate an
/// operand to the order you need first.
SchwarzInput mobius_of_series(const Mat2& m, const SchwarzInput& h);

/// Checks S_q(h) + (r^2/2) E4 = O(q^order): the q-domain form of the
/// Schwarzian equation {h, tau} = 2 pi^2 r^2 E4. h must carry at least
/// `order` certified rows.
bool verify_schwarz_eq(const SchwarzInput& h, const Rat& r, long order);

}  // namespace qsw

#endif
