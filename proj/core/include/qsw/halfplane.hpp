#ifndef QSW_HALFPLANE_HPP
#define QSW_HALFPLANE_HPP

#include <array>
#include <functional>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "qsw/frobenius.hpp"
#include "qsw/puiseux.hpp"

namespace qsw {

/// Arbitrary-precision real; working precision comes from the EvalContext
/// through a scope guard, so contexts never leak into each other.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

struct BigComplex {
    BigFloat re, im;
    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex real(double r) { return {BigFloat(r), BigFloat(0)}; }
};

BigComplex operator+(const BigComplex& x, const BigComplex& y);
BigComplex operator-(const BigComplex& x, const BigComplex& y);
BigComplex operator-(const BigComplex& x);
BigComplex operator*(const BigComplex& x, const BigComplex& y);
BigComplex operator/(const BigComplex& x, const BigComplex& y);
BigFloat abs(const BigComplex& x);
BigComplex cexp(const BigComplex& x);
/// Integer power, negative exponents via reciprocal.
BigComplex cpow(const BigComplex& x, long n);
BigFloat two_pi();
std::string complex_to_string(const BigComplex& x);

class PrecisionGuard {
  public:
    explicit PrecisionGuard(long digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

struct EvalContext {
    long precision = 60;  // decimal digits
    long terms = 0;       // integer-q rows to use; 0 = all certified rows
    double tol = 1e-8;    // absolute comparison tolerance
};

/// Integer-q rows after which the tail drops below tol/10 at height im_tau:
/// the smallest T with exp(-2 pi im_tau T) < tol/10.
long q_rows_needed(double im_tau, double tol);

/// Sum of the truncated series at tau (Im tau > 0) with q^{1/N} read as
/// exp(2 pi i tau / N), principal branch. The rows actually summed must
/// push the tail below tol/10 or the evaluation is rejected; exact
/// polynomial inputs carry no tail at all. A log part contributes
/// L = 2 pi i tau times its value.
BigComplex eval_series(const PuiseuxSeries& s, const BigComplex& tau,
                       const EvalContext& ctx);
BigComplex eval_series(const LogSeries& s, const BigComplex& tau,
                       const EvalContext& ctx);

struct UniModularMatrix {
    long a, b, c, d;
};

/// (a z + b)/(c z + d); the matrix must have determinant 1.
BigComplex mobius(const UniModularMatrix& g, const BigComplex& z);

struct NumericResult {
    bool pass;
    BigFloat residual;
    long terms_used;  // integer-q rows summed
};

/// |t(g tau) - t(tau)| < tol for g in the principal congruence group mod 5.
/// Both tau and g tau must satisfy the tail bound at the rows used.
NumericResult check_gamma5_invariance(const UniModularMatrix& g,
                                      const BigComplex& tau,
                                      const EvalContext& ctx);

using HEval = std::function<BigComplex(const BigComplex&)>;

/// h(tau) = c * 2 pi i tau + g(tau)/y1(tau) from a solved basis; the shape
/// y2/y1 takes with L materialized as 2 pi i tau.
HEval h_eval_from_basis(const FrobeniusBasis& b, const EvalContext& ctx);

/// Cross-ratio of four pairwise distinct points:
/// (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)).
BigComplex cross_ratio(const std::array<BigComplex, 4>& z);

/// Moebius-relatedness of h on gamma-orbits, tested through the cross-ratio:
/// |CR(h(g tau_i)) - CR(h(tau_i))| < tol. Insensitive to the scalar and the
/// additive y1-multiple left free in the y2 normalization.
NumericResult cross_ratio_equivariance(const HEval& h,
                                       const UniModularMatrix& g,
                                       const std::array<BigComplex, 4>& tau,
                                       const EvalContext& ctx);

struct RhoFit {
    BigComplex a, b, c, d;  // Moebius matrix, scaled to unit largest entry
    BigFloat residual;      // |M(h(tau4)) - h(g tau4)|
    bool pass;
};

/// Reconstructs the projective factor of automorphy from three point pairs
/// (M(h(tau_i)) = h(g tau_i), i = 1..3) and validates it on tau4.
RhoFit fit_rho(const HEval& h, const UniModularMatrix& g,
               const std::array<BigComplex, 4>& tau, const EvalContext& ctx);

}  // namespace qsw

#endif
