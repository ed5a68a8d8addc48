#include "qsw/schwarz.hpp"

#include "qsw/errors.hpp"
#include "qsw/modular_forms.hpp"

namespace qsw {

PuiseuxSeries q_schwarz(const SchwarzInput& h) {
    // D(h) = c + D(p); the log contributes only this constant.
    PuiseuxSeries dh = add(d_op(h.pure), PuiseuxSeries::constant(h.log_coeff));
    if (dh.is_zero()) throw ZeroDerivative();
    PuiseuxSeries u = div(d_op(dh), dh);
    return sub(d_op(u), mul(mul(u, u), Rat(1, 2)));
}

SchwarzInput mobius_of_series(const Mat2& m, const SchwarzInput& h) {
    if (is_zero(m.det())) throw Error("mobius matrix must be invertible");
    if (h.has_log()) {
        if (!is_zero(m.c)) throw LogInDenominator();
        // (a(cL+p)+b)/d with d != 0 since det = a*d here
        return SchwarzInput{
            Rat(h.log_coeff * m.a / m.d),
            mul(add(mul(h.pure, m.a), PuiseuxSeries::constant(m.b)),
                Rat(1) / m.d)};
    }
    PuiseuxSeries num = add(mul(h.pure, m.a), PuiseuxSeries::constant(m.b));
    PuiseuxSeries den = add(mul(h.pure, m.c), PuiseuxSeries::constant(m.d));
    return SchwarzInput::from_series(div(num, den));
}

bool verify_schwarz_eq(const SchwarzInput& h, const Rat& r, long order) {
    PuiseuxSeries resid =
        add(q_schwarz(h), mul(e4(order), Rat(r * r / 2)));
    return resid.is_zero() && resid.known_to() >= Rat(order);
}

}  // namespace qsw
