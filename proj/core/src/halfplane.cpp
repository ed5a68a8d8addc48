#include "qsw/halfplane.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qsw/errors.hpp"
#include "qsw/modular_forms.hpp"

namespace qsw {

BigComplex operator+(const BigComplex& x, const BigComplex& y) {
    return {BigFloat(x.re + y.re), BigFloat(x.im + y.im)};
}
BigComplex operator-(const BigComplex& x, const BigComplex& y) {
    return {BigFloat(x.re - y.re), BigFloat(x.im - y.im)};
}
BigComplex operator-(const BigComplex& x) {
    return {BigFloat(-x.re), BigFloat(-x.im)};
}
BigComplex operator*(const BigComplex& x, const BigComplex& y) {
    return {BigFloat(x.re * y.re - x.im * y.im),
            BigFloat(x.re * y.im + x.im * y.re)};
}
BigComplex operator/(const BigComplex& x, const BigComplex& y) {
    BigFloat n = y.re * y.re + y.im * y.im;
    return {BigFloat((x.re * y.re + x.im * y.im) / n),
            BigFloat((x.im * y.re - x.re * y.im) / n)};
}
BigFloat abs(const BigComplex& x) {
    return sqrt(BigFloat(x.re * x.re + x.im * x.im));
}

BigComplex cexp(const BigComplex& x) {
    BigFloat e = exp(x.re);
    return {BigFloat(e * cos(x.im)), BigFloat(e * sin(x.im))};
}

BigComplex cpow(const BigComplex& x, long n) {
    if (n < 0) return BigComplex::real(1) / cpow(x, -n);
    BigComplex r = BigComplex::real(1);
    BigComplex base = x;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BigFloat two_pi() {
    BigFloat p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return BigFloat(p * 2);
}

std::string complex_to_string(const BigComplex& x) {
    std::ostringstream os;
    os << x.re.str(8) << (x.im < 0 ? "-" : "+") << abs(BigFloat(x.im)).str(8)
       << "i";
    return os.str();
}

PrecisionGuard::PrecisionGuard(long digits)
    : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(static_cast<unsigned>(digits));
}
PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(saved_); }

long q_rows_needed(double im_tau, double tol) {
    if (!(im_tau > 0)) throw NonUpperHalfPlane();
    double rows = std::log(10.0 / tol) / (2.0 * M_PI * im_tau);
    return static_cast<long>(std::ceil(rows)) + 1;
}

namespace {

BigFloat to_big(const Rat& r) {
    BigFloat f;
    mpfr_set_q(f.backend().data(), r.get_mpq_t(), MPFR_RNDN);
    return f;
}

// L = 2 pi i tau
BigComplex log_q(const BigComplex& tau) {
    BigFloat tp = two_pi();
    return {BigFloat(-tp * tau.im), BigFloat(tp * tau.re)};
}

}  // namespace

BigComplex eval_series(const PuiseuxSeries& s, const BigComplex& tau,
                       const EvalContext& ctx) {
    PrecisionGuard guard(ctx.precision);
    if (!(tau.im > 0)) throw NonUpperHalfPlane();

    long n = s.ram();
    long lead = s.lead_index();
    const std::vector<Rat>& coeffs = s.coeffs();
    long avail = static_cast<long>(coeffs.size());
    long used = avail;
    if (ctx.terms > 0 && ctx.terms <= avail / n) used = ctx.terms * n;

    bool complete = s.exact() && used == avail;
    if (!complete) {
        // first omitted q-exponent must put the tail below tol/10
        double omitted = static_cast<double>(lead + used) / n;
        double im = tau.im.convert_to<double>();
        if (!(2.0 * M_PI * im * omitted > std::log(10.0 / ctx.tol))) {
            std::ostringstream os;
            os << "tail bound violated: " << used << " rows certified at ram "
               << n << ", need q-exponent > "
               << std::log(10.0 / ctx.tol) / (2.0 * M_PI * im)
               << " at Im tau = " << im;
            throw TailBoundViolated(os.str());
        }
    }

    // w = q^{1/n} = exp(2 pi i tau / n), principal branch
    BigComplex l = log_q(tau);
    BigComplex w = cexp({BigFloat(l.re / n), BigFloat(l.im / n)});
    BigComplex p = cpow(w, lead);
    BigComplex acc;
    for (long j = 0; j < used; ++j) {
        const Rat& cf = coeffs[static_cast<size_t>(j)];
        if (!is_zero(cf)) {
            BigFloat c = to_big(cf);
            acc = acc + BigComplex{BigFloat(c * p.re), BigFloat(c * p.im)};
        }
        p = p * w;
    }
    return acc;
}

BigComplex eval_series(const LogSeries& s, const BigComplex& tau,
                       const EvalContext& ctx) {
    PrecisionGuard guard(ctx.precision);
    BigComplex pure = eval_series(s.pure_part, tau, ctx);
    if (s.log_part.is_zero()) return pure;
    return eval_series(s.log_part, tau, ctx) * log_q(tau) + pure;
}

BigComplex mobius(const UniModularMatrix& g, const BigComplex& z) {
    if (g.a * g.d - g.b * g.c != 1) throw NotUnimodular();
    BigComplex den{BigFloat(g.c * z.re + g.d), BigFloat(g.c * z.im)};
    if (den.re == 0 && den.im == 0) throw PoleHit();
    BigComplex num{BigFloat(g.a * z.re + g.b), BigFloat(g.a * z.im)};
    return num / den;
}

NumericResult check_gamma5_invariance(const UniModularMatrix& g,
                                      const BigComplex& tau,
                                      const EvalContext& ctx) {
    PrecisionGuard guard(ctx.precision);
    if (g.a * g.d - g.b * g.c != 1) throw NotUnimodular();
    auto mod5 = [](long x) { return ((x % 5) + 5) % 5; };
    if (mod5(g.a) != 1 || mod5(g.d) != 1 || mod5(g.b) != 0 || mod5(g.c) != 0)
        throw NotInGamma5();

    BigComplex gt = mobius(g, tau);
    if (!(tau.im > 0) || !(gt.im > 0)) throw NonUpperHalfPlane();
    long rows = ctx.terms;
    if (rows == 0) {
        // overshoot the bare tail bound: constant factors in the tail sum
        // would otherwise eat the tol/10 margin
        rows = std::max(q_rows_needed(tau.im.convert_to<double>(), ctx.tol),
                        q_rows_needed(gt.im.convert_to<double>(), ctx.tol));
        rows += rows / 4 + 8;
    }
    PuiseuxSeries t = haupt_t(rows);

    EvalContext local = ctx;
    local.terms = 0;
    BigFloat residual = abs(eval_series(t, gt, local) - eval_series(t, tau, local));
    return {residual < ctx.tol, residual, rows};
}

HEval h_eval_from_basis(const FrobeniusBasis& b, const EvalContext& ctx) {
    return [y1 = b.y1, g = b.y2.pure_part, c = b.c,
            ctx](const BigComplex& tau) {
        PrecisionGuard guard(ctx.precision);
        BigComplex vy1 = eval_series(y1, tau, ctx);
        if (vy1.re == 0 && vy1.im == 0) throw PoleHit();
        BigComplex h = eval_series(g, tau, ctx) / vy1;
        if (!is_zero(c)) {
            BigFloat cf = to_big(c);
            BigComplex l = log_q(tau);
            h = h + BigComplex{BigFloat(cf * l.re), BigFloat(cf * l.im)};
        }
        return h;
    };
}

BigComplex cross_ratio(const std::array<BigComplex, 4>& z) {
    BigComplex d1 = z[0] - z[3], d2 = z[1] - z[2];
    if ((d1.re == 0 && d1.im == 0) || (d2.re == 0 && d2.im == 0))
        throw DegeneratePoints();
    return ((z[0] - z[2]) * (z[1] - z[3])) / (d1 * d2);
}

namespace {

void require_distinct(const std::array<BigComplex, 4>& z, double tol) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (abs(z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]) <
                tol)
                throw DegeneratePoints();
}

std::array<BigComplex, 4> eval_orbit(const HEval& h,
                                     const std::array<BigComplex, 4>& tau) {
    return {h(tau[0]), h(tau[1]), h(tau[2]), h(tau[3])};
}

std::array<BigComplex, 4> map_points(const UniModularMatrix& g,
                                     const std::array<BigComplex, 4>& tau) {
    return {mobius(g, tau[0]), mobius(g, tau[1]), mobius(g, tau[2]),
            mobius(g, tau[3])};
}

}  // namespace

NumericResult cross_ratio_equivariance(const HEval& h,
                                       const UniModularMatrix& g,
                                       const std::array<BigComplex, 4>& tau,
                                       const EvalContext& ctx) {
    PrecisionGuard guard(ctx.precision);
    std::array<BigComplex, 4> hz = eval_orbit(h, tau);
    std::array<BigComplex, 4> hw = eval_orbit(h, map_points(g, tau));
    require_distinct(hz, ctx.tol);
    require_distinct(hw, ctx.tol);
    BigFloat residual = abs(cross_ratio(hw) - cross_ratio(hz));
    return {residual < ctx.tol, residual, ctx.terms};
}

RhoFit fit_rho(const HEval& h, const UniModularMatrix& g,
               const std::array<BigComplex, 4>& tau, const EvalContext& ctx) {
    PrecisionGuard guard(ctx.precision);
    std::array<BigComplex, 4> z = eval_orbit(h, tau);
    std::array<BigComplex, 4> w = eval_orbit(h, map_points(g, tau));
    require_distinct(z, ctx.tol);
    require_distinct(w, ctx.tol);

    // three-point construction: A sends z1,z2,z3 to 0,1,infinity; M = B^{-1} A
    auto three_point = [](const BigComplex& p1, const BigComplex& p2,
                          const BigComplex& p3) {
        BigComplex d23 = p2 - p3, d21 = p2 - p1;
        return std::array<BigComplex, 4>{d23, -(p1 * d23), d21, -(p3 * d21)};
    };
    std::array<BigComplex, 4> A = three_point(z[0], z[1], z[2]);
    std::array<BigComplex, 4> B = three_point(w[0], w[1], w[2]);
    // adj(B) * A, projectively equal to B^{-1} A
    BigComplex ma = B[3] * A[0] - B[1] * A[2];
    BigComplex mb = B[3] * A[1] - B[1] * A[3];
    BigComplex mc = B[0] * A[2] - B[2] * A[0];
    BigComplex md = B[0] * A[3] - B[2] * A[1];

    BigFloat top = abs(ma);
    for (const BigComplex& e : {mb, mc, md}) {
        BigFloat ae = abs(e);
        if (ae > top) top = ae;
    }
    if (top == 0) throw DegeneratePoints();
    BigComplex scale{BigFloat(1 / top), BigFloat(0)};
    ma = ma * scale, mb = mb * scale, mc = mc * scale, md = md * scale;

    BigComplex den = mc * z[3] + md;
    if (den.re == 0 && den.im == 0) throw PoleHit();
    BigFloat residual = abs((ma * z[3] + mb) / den - w[3]);
    return {ma, mb, mc, md, residual, residual < ctx.tol};
}

}  // namespace qsw
