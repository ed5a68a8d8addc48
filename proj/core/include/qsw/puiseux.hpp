#ifndef QSW_PUISEUX_HPP
#define QSW_PUISEUX_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsw/errors.hpp"
#include "qsw/rat.hpp"

namespace qsw {

/// A rational exponent bound, possibly +infinity. Used both for truncation
/// certificates ("correct modulo O(q^E)") and for vanishing-order lower bounds.
class Bound {
public:
    static Bound infinity() { return Bound(std::nullopt); }
    Bound(Rat v) : v_(std::move(v)) {}
    Bound(long v) : v_(Rat(v)) {}

    bool is_infinite() const { return !v_.has_value(); }
    const Rat& value() const { return *v_; }

    Bound operator+(const Bound& o) const {
        if (is_infinite() || o.is_infinite()) return infinity();
        return Bound(Rat(*v_ + *o.v_));
    }
    friend Bound min(const Bound& a, const Bound& b) {
        if (a.is_infinite()) return b;
        if (b.is_infinite()) return a;
        return Bound(std::min(*a.v_, *b.v_));
    }
    bool operator<(const Bound& o) const {
        if (is_infinite()) return false;
        if (o.is_infinite()) return true;
        return *v_ < *o.v_;
    }
    bool operator>=(const Rat& r) const { return is_infinite() || *v_ >= r; }
    bool operator==(const Bound& o) const {
        if (is_infinite() != o.is_infinite()) return false;
        return is_infinite() || *v_ == *o.v_;
    }

private:
    explicit Bound(std::optional<Rat> v) : v_(std::move(v)) {}
    std::optional<Rat> v_;
};

/// Truncated formal Puiseux series in q with exact rational coefficients:
/// coeffs[j] multiplies q^{(lead+j)/ram}. Two flavours share the type:
///
///  - exact: a genuine polynomial in q^{1/ram}, correct to all orders
///    (known_to = infinity); produced by constant/monomial constructors and
///    closed under +, *, D.
///  - truncated: asserted correct modulo O(q^E) with E = (lead+size)/ram.
///
/// Canonical form: a nonzero series has coeffs[0] != 0; an exact series also
/// has coeffs.back() != 0; a truncated zero series keeps its certificate by
/// storing lead = E*ram with no coefficients. Values are immutable after
/// construction.
class PuiseuxSeries {
public:
    PuiseuxSeries() : ram_(1), lead_(0), exact_(true) {}

    static PuiseuxSeries zero() { return PuiseuxSeries(); }
    static PuiseuxSeries one() { return constant(1); }
    static PuiseuxSeries constant(const Rat& c);
    /// c * q^e, exact.
    static PuiseuxSeries monomial(const Rat& c, const Rat& e);
    ///yields 0 + O(q^bound)
    static PuiseuxSeries zero_to(const Rat& bound);
    static PuiseuxSeries make(long ram, long lead, std::vector<Rat> coeffs,
                              bool exact = false);

    long ram() const { return ram_; }
    long lead_index() const { return lead_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool exact() const { return exact_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// lead/ram; requires a nonzero series.
    Rat lead_exponent() const;
    const Rat& lead_coeff() const;

    /// Truncation certificate: (lead+size)/ram, or infinity when exact.
    Bound known_to() const;
    /// Lower bound for the vanishing order: the leading exponent for a nonzero
    /// series, known_to for a truncated zero, infinity for the exact zero.
    Bound order_lower() const;

    /// Coefficient at exponent e; zero off the grid or beyond the stored range.
    Rat coeff(const Rat& e) const;

    /// Clamps the certificate to min(known_to, bound), discarding higher rows.
    PuiseuxSeries truncated(const Rat& bound) const;
    /// Rescales to ramification m (m must be a positive multiple of ram).
    PuiseuxSeries with_ram(long m) const;
    /// Drops to the smallest ramification that still carries every stored row
    /// and the certificate.
    PuiseuxSeries reduce_ram() const;
    /// Substitution q -> q^n (n >= 1): every exponent is scaled by n.
    PuiseuxSeries substitute_q_power(long n) const;

    PuiseuxSeries operator-() const;

    /// Text rendering, e.g. "1 + 240q + 2160q^2 + O(q^3)".
    std::string to_text() const;

private:
    PuiseuxSeries(long ram, long lead, std::vector<Rat> coeffs, bool exact)
        : ram_(ram), lead_(lead), coeffs_(std::move(coeffs)), exact_(exact) {
        normalize();
    }
    void normalize();

    long ram_;
    long lead_;
    std::vector<Rat> coeffs_;
    bool exact_;
};

PuiseuxSeries add(const PuiseuxSeries& s, const PuiseuxSeries& t);
PuiseuxSeries sub(const PuiseuxSeries& s, const PuiseuxSeries& t);

/// Cauchy product. The certificate follows the conservative min-rule
/// known_to = min(known_to(s) + ord(t), known_to(t) + ord(s)).
PuiseuxSeries mul(const PuiseuxSeries& s, const PuiseuxSeries& t);
PuiseuxSeries mul(const PuiseuxSeries& s, const Rat& c);

/// Quotient with lead(s/t) = lead(s) - lead(t). Throws DivisionByZeroSeries if
/// t vanishes up to its truncation. When both operands are exact the division
/// must terminate (polynomial quotient); otherwise truncate an operand first
/// to choose the expansion order.
PuiseuxSeries div(const PuiseuxSeries& s, const PuiseuxSeries& t);

/// The derivation D = q d/dq: D(q^e) = e q^e. Certificates are preserved.
PuiseuxSeries d_op(const PuiseuxSeries& s);

struct MonicForm {
    Rat scale;            // c
    Rat exponent;         // e
    PuiseuxSeries monic;  // m = 1 + higher terms, so s = c q^e m
};
MonicForm monicize(const PuiseuxSeries& s);

/// m^alpha for monic m (leading term exactly 1*q^0) and rational alpha, via the
/// power-series recurrence n y_n = sum_{j=1..n} ((alpha+1)j - n) m_j y_{n-j}.
/// Exact m with a positive integer exponent is raised exactly.
PuiseuxSeries pow_rat(const PuiseuxSeries& m, const Rat& alpha);

/// Repeated-multiplication integer power (negative n via div); mainly an
/// independent route for testing pow_rat.
PuiseuxSeries pow_int(const PuiseuxSeries& s, long n);

/// Dense polynomial with Rat coefficients, ascending degree.
using Poly = std::vector<Rat>;

PuiseuxSeries poly_eval(const Poly& p, const PuiseuxSeries& s);

/// P(s)/Q(s). Requires a positive leading exponent on s so powers of s are
/// truncation-compatible.
PuiseuxSeries compose_rational(const Poly& P, const Poly& Q,
                               const PuiseuxSeries& s);

/// Equality in the sense of the carrier: coefficientwise agreement after
/// rescaling to a common ramification, up to min(known_to).
bool agree(const PuiseuxSeries& s, const PuiseuxSeries& t);

inline bool operator==(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    return agree(s, t);
}
inline bool operator!=(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    return !agree(s, t);
}

inline PuiseuxSeries operator+(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    return add(s, t);
}
inline PuiseuxSeries operator-(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    return sub(s, t);
}
inline PuiseuxSeries operator*(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    return mul(s, t);
}
inline PuiseuxSeries operator*(const Rat& c, const PuiseuxSeries& s) {
    return mul(s, c);
}

/// Depth-one logarithmic extension: log_part * L + pure_part with L = log q.
/// L is transcendental over the series field, so equality is componentwise;
/// the derivation rule is D(L) = 1.
struct LogSeries {
    PuiseuxSeries log_part;
    PuiseuxSeries pure_part;

    LogSeries() = default;
    LogSeries(PuiseuxSeries lp, PuiseuxSeries pp)
        : log_part(std::move(lp)), pure_part(std::move(pp)) {}
    /// Embeds a pure series (log_part = 0).
    explicit LogSeries(PuiseuxSeries pp) : pure_part(std::move(pp)) {}

    bool has_log() const { return !log_part.is_zero(); }
    bool is_zero() const { return log_part.is_zero() && pure_part.is_zero(); }
};

LogSeries add(const LogSeries& s, const LogSeries& t);
LogSeries sub(const LogSeries& s, const LogSeries& t);
/// Throws LogTimesLog when both factors carry a nonzero log part.
LogSeries mul(const LogSeries& s, const LogSeries& t);
LogSeries mul(const LogSeries& s, const PuiseuxSeries& t);
LogSeries mul(const LogSeries& s, const Rat& c);
/// D(a L + b) = D(a) L + (a + D(b)).
LogSeries d_op(const LogSeries& s);
bool agree(const LogSeries& s, const LogSeries& t);

inline bool operator==(const LogSeries& s, const LogSeries& t) {
    return agree(s, t);
}

}  // namespace qsw

#endif
