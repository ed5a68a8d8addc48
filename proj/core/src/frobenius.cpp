#include "qsw/frobenius.hpp"

#include <algorithm>
#include <vector>

#include "qsw/errors.hpp"
#include "qsw/modular_forms.hpp"

namespace qsw {
namespace {

// Coefficient row of the right-hand side convolution: (r^2/4) sum e_m x_{n-m}.
Rat rhs_row(const Rat& quarter_r2, const std::vector<Rat>& e,
            const std::vector<Rat>& x, long n) {
    Rat s = 0;
    for (long m = 1; m <= n; ++m)
        s += e[static_cast<size_t>(m)] * x[static_cast<size_t>(n - m)];
    return Rat(quarter_r2 * s);
}

bool certified_zero(const PuiseuxSeries& s, long order) {
    return s.is_zero() && s.known_to() >= Rat(order);
}

// A factor starting below q^0 eats into the product certificate: known_to of
// a product is min over factors of known_to + the other's lead. Rows of E4
// past the check order recover the loss.
long lead_pad(const PuiseuxSeries& y) {
    if (y.is_zero() || y.lead_exponent() >= 0) return 0;
    Rat neg = Rat(-y.lead_exponent());
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), neg.get_num().get_mpz_t(),
               neg.get_den().get_mpz_t());
    return q.get_si();
}

}  // namespace

FrobeniusBasis solve(const Rat& r, long order) {
    if (r <= 0) throw NonPositiveR();
    bool resonant = is_integer(r);
    long rz = resonant ? r.get_num().get_si() : 0;
    if (resonant && order < rz + 2)
        throw Error("resonant solve needs order >= r + 2");
    if (order < 1) throw Error("solve needs order >= 1");

    PuiseuxSeries E4 = e4(order);
    const std::vector<Rat>& e = E4.coeffs();  // e[m] = 240 sigma_3(m)
    Rat quarter_r2 = Rat(r * r / 4);

    std::vector<Rat> alpha(static_cast<size_t>(order) + 1);
    alpha[0] = 1;
    for (long n = 1; n <= order; ++n)
        alpha[static_cast<size_t>(n)] =
            rhs_row(quarter_r2, e, alpha, n) / (Rat(n) * (Rat(n) + r));

    // g = q^{-r/2} sum beta_n q^n solves the second indicial root; in the
    // resonant case the n = r row instead fixes c, and later rows feel the
    // -2c D(y1) source term.
    std::vector<Rat> beta(static_cast<size_t>(order) + 1);
    beta[0] = 1;
    Rat c = 0;
    for (long n = 1; n <= order; ++n) {
        Rat s = rhs_row(quarter_r2, e, beta, n);
        if (resonant && n == rz) {
            c = s / r;  // alpha_0 = 1
            beta[static_cast<size_t>(n)] = 0;
            continue;
        }
        if (resonant && n > rz)
            s -= 2 * c * (Rat(n) - r / 2) * alpha[static_cast<size_t>(n - rz)];
        beta[static_cast<size_t>(n)] = s / (Rat(n) * (Rat(n) - r));
    }

    PuiseuxSeries y1 =
        mul(PuiseuxSeries::monomial(1, Rat(r / 2)),
            PuiseuxSeries::make(1, 0, std::move(alpha), false));
    PuiseuxSeries g =
        mul(PuiseuxSeries::monomial(1, Rat(-r / 2)),
            PuiseuxSeries::make(1, 0, std::move(beta), false));
    LogSeries y2{mul(y1, c), g};
    return FrobeniusBasis{r, y1, y2, c, order};
}

bool ode_residual(const PuiseuxSeries& y, const Rat& r, long order) {
    PuiseuxSeries resid =
        sub(d_op(d_op(y)),
            mul(mul(e4(order + lead_pad(y)), y), Rat(r * r / 4)));
    return certified_zero(resid, order);
}

bool ode_residual(const LogSeries& y, const Rat& r, long order) {
    long pad = std::max(lead_pad(y.log_part), lead_pad(y.pure_part));
    LogSeries resid = sub(d_op(d_op(y)),
                          mul(mul(y, e4(order + pad)), Rat(r * r / 4)));
    return certified_zero(resid.log_part, order) &&
           certified_zero(resid.pure_part, order);
}

std::pair<PuiseuxSeries, PuiseuxSeries> solutions_from_h(const SchwarzInput& h,
                                                         const Rat& r,
                                                         long order) {
    if (h.has_log()) throw Error("solutions_from_h requires a pure series");
    if (r <= 0) throw NonPositiveR();
    PuiseuxSeries hh = h.pure.is_zero()
                           ? h.pure
                           : h.pure.truncated(Rat(h.pure.lead_exponent() + order + 1));
    PuiseuxSeries dh = d_op(hh);
    if (dh.is_zero()) throw ZeroDerivative();
    MonicForm mf = monicize(dh);
    // (Dh)^{-1/2} = scale^{-1/2} q^{-e/2} monic^{-1/2}; the scalar is
    // irrational in general and solutions are only needed projectively.
    PuiseuxSeries y2 = mul(PuiseuxSeries::monomial(1, Rat(-mf.exponent / 2)),
                           pow_rat(mf.monic, Rat(-1, 2)));
    return {mul(hh, y2), y2};
}

PuiseuxSeries to_f(const PuiseuxSeries& y, const Rat& r, const Rat& k,
                   long order) {
    if (k != 6 * r - 1) throw InconsistentKR();
    return mul(eta_pow(Rat(2 * (k + 1)), order), y);
}

LogSeries to_f(const LogSeries& y, const Rat& r, const Rat& k, long order) {
    if (k != 6 * r - 1) throw InconsistentKR();
    return mul(y, eta_pow(Rat(2 * (k + 1)), order));
}

namespace {

PuiseuxSeries kk_apply(const PuiseuxSeries& f, const PuiseuxSeries& E2,
                       const PuiseuxSeries& dE2, const Rat& k) {
    return add(sub(d_op(d_op(f)), mul(mul(E2, d_op(f)), Rat((k + 1) / 6))),
               mul(mul(dE2, f), Rat(k * (k + 1) / 12)));
}

}  // namespace

bool kk_residual(const PuiseuxSeries& f, const Rat& k, long order) {
    PuiseuxSeries E2 = e2(order);
    return certified_zero(kk_apply(f, E2, d_op(E2), k), order);
}

bool kk_residual(const LogSeries& f, const Rat& k, long order) {
    PuiseuxSeries E2 = e2(order);
    PuiseuxSeries dE2 = d_op(E2);
    // Componentwise in {L, 1}: the operator never mixes a log in, and the
    // cross terms from D(aL) land in the pure slot.
    PuiseuxSeries a = f.log_part, b = f.pure_part;
    PuiseuxSeries log_resid = kk_apply(a, E2, dE2, k);
    PuiseuxSeries cross =
        sub(mul(d_op(a), Rat(2)), mul(mul(E2, a), Rat((k + 1) / 6)));
    PuiseuxSeries pure_resid = add(kk_apply(b, E2, dE2, k), cross);
    return certified_zero(log_resid, order) && certified_zero(pure_resid, order);
}

std::pair<Rat, bool> wronskian(const FrobeniusBasis& b) {
    LogSeries w = sub(mul(d_op(b.y2), b.y1), mul(b.y2, d_op(b.y1)));
    // c y1 D(y1) L cancels between the two products
    if (!w.log_part.is_zero()) return {Rat(0), false};
    const PuiseuxSeries& p = w.pure_part;
    Rat at_zero = p.coeff(Rat(0));
    bool single = true;
    long i = 0;
    for (const Rat& coeff : p.coeffs()) {
        if (!is_zero(coeff) && p.lead_index() + i != 0) single = false;
        ++i;
    }
    return {at_zero, single};
}

std::optional<std::pair<Rat, Rat>> in_span(const PuiseuxSeries& w,
                                           const FrobeniusBasis& b) {
    const PuiseuxSeries& g = b.y2.pure_part;
    // alpha_0 = beta_0 = 1 and beta_r = 0, so the rows at -r/2 and r/2
    // determine the coordinates directly.
    Rat B = w.coeff(Rat(-b.r / 2));
    Rat A = Rat(w.coeff(Rat(b.r / 2)) - B * g.coeff(Rat(b.r / 2)));
    PuiseuxSeries combo = add(mul(b.y1, A), mul(g, B));
    if (!agree(w, combo)) return std::nullopt;
    return std::make_pair(A, B);
}

}  // namespace qsw
