#include "qsw/puiseux.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace qsw {

namespace {

// Index-space bound: nullopt plays the role of +infinity.
using IdxBound = std::optional<long>;

IdxBound idx_min(IdxBound a, IdxBound b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

long lcm_long(long a, long b) {
    return a / std::gcd(a, b) * b;
}

// end index lead+size for a truncated series, infinity for an exact one
IdxBound end_index(const PuiseuxSeries& s) {
    if (s.exact()) return std::nullopt;
    return s.lead_index() + static_cast<long>(s.coeffs().size());
}

// index-space lower bound for the vanishing order
IdxBound ord_index(const PuiseuxSeries& s) {
    if (s.is_zero()) return end_index(s);
    return s.lead_index();
}

Rat idx_to_exp(long idx, long ram) {
    Rat e(idx, ram);
    e.canonicalize();
    return e;
}

// coefficient at absolute index g, zero outside the stored range
const Rat& coeff_at_index(const PuiseuxSeries& s, long g) {
    static const Rat kZero(0);
    long rel = g - s.lead_index();
    if (rel < 0 || rel >= static_cast<long>(s.coeffs().size())) return kZero;
    return s.coeffs()[static_cast<std::size_t>(rel)];
}

PuiseuxSeries zero_at_index(long ram, IdxBound bound) {
    if (!bound) return PuiseuxSeries::zero();
    return PuiseuxSeries::make(ram, *bound, {}, false);
}

struct NonzeroTerm {
    long rel;
    const Rat* c;
};

std::vector<NonzeroTerm> nonzero_terms(const PuiseuxSeries& s) {
    std::vector<NonzeroTerm> out;
    const auto& c = s.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
        if (!is_zero(c[j])) out.push_back({static_cast<long>(j), &c[j]});
    return out;
}

}  // namespace

PuiseuxSeries PuiseuxSeries::constant(const Rat& c) {
    if (qsw::is_zero(c)) return zero();
    return PuiseuxSeries(1, 0, {c}, true);
}

PuiseuxSeries PuiseuxSeries::monomial(const Rat& c, const Rat& e) {
    if (qsw::is_zero(c)) return zero();
    long ram = static_cast<long>(e.get_den().get_si());
    long lead = static_cast<long>(e.get_num().get_si());
    return PuiseuxSeries(ram, lead, {c}, true);
}

PuiseuxSeries PuiseuxSeries::zero_to(const Rat& bound) {
    long ram = static_cast<long>(bound.get_den().get_si());
    long lead = static_cast<long>(bound.get_num().get_si());
    return PuiseuxSeries(ram, lead, {}, false);
}

PuiseuxSeries PuiseuxSeries::make(long ram, long lead, std::vector<Rat> coeffs,
                                  bool exact) {
    if (ram < 1) throw Error("ramification index must be >= 1");
    return PuiseuxSeries(ram, lead, std::move(coeffs), exact);
}

void PuiseuxSeries::normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && qsw::is_zero(coeffs_[first])) ++first;
    if (first == coeffs_.size()) {
        // all coefficients vanish: the bound marker survives via lead
        lead_ += static_cast<long>(coeffs_.size());
        coeffs_.clear();
        if (exact_) {
            lead_ = 0;
            ram_ = 1;
        }
        return;
    }
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(),
                      coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
        lead_ += static_cast<long>(first);
    }
    if (exact_) {
        while (!coeffs_.empty() && qsw::is_zero(coeffs_.back()))
            coeffs_.pop_back();
    }
}

Rat PuiseuxSeries::lead_exponent() const {
    if (is_zero()) throw ZeroSeries();
    return idx_to_exp(lead_, ram_);
}

const Rat& PuiseuxSeries::lead_coeff() const {
    if (is_zero()) throw ZeroSeries();
    return coeffs_.front();
}

Bound PuiseuxSeries::known_to() const {
    if (exact_) return Bound::infinity();
    return Bound(idx_to_exp(lead_ + static_cast<long>(coeffs_.size()), ram_));
}

Bound PuiseuxSeries::order_lower() const {
    if (is_zero()) return known_to();
    return Bound(idx_to_exp(lead_, ram_));
}

Rat PuiseuxSeries::coeff(const Rat& e) const {
    Rat scaled = e * ram_;
    if (!is_integer(scaled)) return Rat(0);
    return coeff_at_index(*this, static_cast<long>(scaled.get_num().get_si()));
}

PuiseuxSeries PuiseuxSeries::truncated(const Rat& bound) const {
    Bound target = min(known_to(), Bound(bound));
    // target is finite: an exact series always accepts the requested bound
    const Rat& b = target.value();
    long m = lcm_long(ram_, static_cast<long>(b.get_den().get_si()));
    PuiseuxSeries s = with_ram(m);
    long bound_idx = static_cast<long>(Rat(b * m).get_num().get_si());
    long len = bound_idx - s.lead_;
    if (len <= 0) return zero_at_index(m, bound_idx);
    std::vector<Rat> c(s.coeffs_.begin(),
                       s.coeffs_.begin() +
                           std::min<std::ptrdiff_t>(len, static_cast<std::ptrdiff_t>(
                                                             s.coeffs_.size())));
    c.resize(static_cast<std::size_t>(len), Rat(0));
    return PuiseuxSeries(m, s.lead_, std::move(c), false);
}

PuiseuxSeries PuiseuxSeries::with_ram(long m) const {
    if (m == ram_) return *this;
    if (m < ram_ || m % ram_ != 0)
        throw Error("with_ram target must be a positive multiple of ram");
    long k = m / ram_;
    std::vector<Rat> c;
    if (!coeffs_.empty()) {
        std::size_t n = coeffs_.size();
        std::size_t new_len = exact_ ? k * (n - 1) + 1 : k * n;
        c.assign(new_len, Rat(0));
        for (std::size_t j = 0; j < n; ++j) c[k * j] = coeffs_[j];
    }
    return PuiseuxSeries(m, lead_ * k, std::move(c), exact_);
}

PuiseuxSeries PuiseuxSeries::reduce_ram() const {
    long d = ram_;
    for (std::size_t j = 0; j < coeffs_.size() && d > 1; ++j)
        if (!qsw::is_zero(coeffs_[j]))
            d = std::gcd(d, lead_ + static_cast<long>(j));
    if (!exact_) d = std::gcd(d, lead_ + static_cast<long>(coeffs_.size()));
    d = std::gcd(d, lead_);
    if (d <= 1) return *this;
    std::vector<Rat> c;
    if (!coeffs_.empty()) {
        std::size_t n = coeffs_.size();
        std::size_t new_len = exact_ ? (n - 1) / d + 1 : n / d;
        c.reserve(new_len);
        for (std::size_t j = 0; j < n; j += d) c.push_back(coeffs_[j]);
    }
    return PuiseuxSeries(ram_ / d, lead_ / d, std::move(c), exact_);
}

PuiseuxSeries PuiseuxSeries::substitute_q_power(long n) const {
    if (n < 1) throw Error("substitute_q_power requires n >= 1");
    if (n == 1) return *this;
    std::vector<Rat> c;
    if (!coeffs_.empty()) {
        std::size_t len = coeffs_.size();
        std::size_t new_len = exact_ ? n * (len - 1) + 1 : n * len;
        c.assign(new_len, Rat(0));
        for (std::size_t j = 0; j < len; ++j) c[n * j] = coeffs_[j];
    }
    return PuiseuxSeries(ram_, lead_ * n, std::move(c), exact_);
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    std::vector<Rat> c(coeffs_);
    for (auto& x : c) x = -x;
    return PuiseuxSeries(ram_, lead_, std::move(c), exact_);
}

PuiseuxSeries add(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    if (s.exact() && s.is_zero()) return t;
    if (t.exact() && t.is_zero()) return s;
    long m = lcm_long(s.ram(), t.ram());
    PuiseuxSeries sa = s.with_ram(m);
    PuiseuxSeries ta = t.with_ram(m);
    IdxBound bound = idx_min(end_index(sa), end_index(ta));
    bool exact = sa.exact() && ta.exact();

    long start, stop;
    if (exact) {
        start = std::min(sa.lead_index(), ta.lead_index());
        stop = std::max(sa.lead_index() + static_cast<long>(sa.coeffs().size()),
                        ta.lead_index() + static_cast<long>(ta.coeffs().size()));
    } else {
        stop = *bound;
        start = stop;
        if (!sa.is_zero()) start = std::min(start, sa.lead_index());
        if (!ta.is_zero()) start = std::min(start, ta.lead_index());
    }
    if (stop <= start) return zero_at_index(m, bound);

    std::vector<Rat> c(static_cast<std::size_t>(stop - start), Rat(0));
    for (long g = start; g < stop; ++g) {
        const Rat& a = coeff_at_index(sa, g);
        const Rat& b = coeff_at_index(ta, g);
        if (!is_zero(a) || !is_zero(b))
            c[static_cast<std::size_t>(g - start)] = a + b;
    }
    return PuiseuxSeries::make(m, start, std::move(c), exact);
}

PuiseuxSeries sub(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    return add(s, -t);
}

PuiseuxSeries mul(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    if ((s.exact() && s.is_zero()) || (t.exact() && t.is_zero()))
        return PuiseuxSeries::zero();
    long m = lcm_long(s.ram(), t.ram());
    PuiseuxSeries sa = s.with_ram(m);
    PuiseuxSeries ta = t.with_ram(m);
    IdxBound es = end_index(sa), et = end_index(ta);
    IdxBound bound = idx_min(es ? IdxBound(*es + *ord_index(ta)) : std::nullopt,
                             et ? IdxBound(*et + *ord_index(sa)) : std::nullopt);
    if (sa.is_zero() || ta.is_zero()) return zero_at_index(m, bound);

    bool exact = sa.exact() && ta.exact();
    long lead = sa.lead_index() + ta.lead_index();
    long ls = static_cast<long>(sa.coeffs().size());
    long lt = static_cast<long>(ta.coeffs().size());
    long len = exact ? ls + lt - 1 : *bound - lead;
    if (len <= 0) return zero_at_index(m, bound);

    std::vector<Rat> c(static_cast<std::size_t>(len), Rat(0));
    mpq_t prod;
    mpq_init(prod);
    for (long i = 0; i < ls && i < len; ++i) {
        const Rat& si = sa.coeffs()[static_cast<std::size_t>(i)];
        if (is_zero(si)) continue;
        long jmax = std::min(lt, len - i);
        for (long j = 0; j < jmax; ++j) {
            const Rat& tj = ta.coeffs()[static_cast<std::size_t>(j)];
            if (is_zero(tj)) continue;
            Rat& dst = c[static_cast<std::size_t>(i + j)];
            mpq_mul(prod, si.get_mpq_t(), tj.get_mpq_t());
            mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), prod);
        }
    }
    mpq_clear(prod);
    return PuiseuxSeries::make(m, lead, std::move(c), exact);
}

PuiseuxSeries mul(const PuiseuxSeries& s, const Rat& c) {
    if (is_zero(c)) return PuiseuxSeries::zero();
    std::vector<Rat> v(s.coeffs());
    for (auto& x : v) x *= c;
    return PuiseuxSeries::make(s.ram(), s.lead_index(), std::move(v), s.exact());
}

PuiseuxSeries div(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    if (t.is_zero()) throw DivisionByZeroSeries();
    long m = lcm_long(s.ram(), t.ram());
    PuiseuxSeries sa = s.with_ram(m);
    PuiseuxSeries ta = t.with_ram(m);
    if (sa.is_zero()) {
        if (sa.exact()) return PuiseuxSeries::zero();
        return zero_at_index(m, *end_index(sa) - ta.lead_index());
    }

    long lead = sa.lead_index() - ta.lead_index();
    long ls = static_cast<long>(sa.coeffs().size());
    long lt = static_cast<long>(ta.coeffs().size());
    bool exact = sa.exact() && ta.exact();
    long len;
    if (exact) {
        len = ls - lt + 1;
        if (len <= 0)
            throw Error("exact series division does not terminate; truncate an operand");
    } else {
        len = std::min(sa.exact() ? std::numeric_limits<long>::max() : ls,
                       ta.exact() ? std::numeric_limits<long>::max() : lt);
    }
    std::vector<Rat> r(static_cast<std::size_t>(len), Rat(0));
    auto divisor = nonzero_terms(ta);  // divisor[0].rel == 0, the unit term
    const Rat& t0 = ta.coeffs().front();
    static const Rat kZero(0);
    mpq_t acc, prod;
    mpq_init(acc);
    mpq_init(prod);
    for (long n = 0; n < len; ++n) {
        const Rat& num =
            n < ls ? sa.coeffs()[static_cast<std::size_t>(n)] : kZero;
        mpq_set(acc, num.get_mpq_t());
        for (std::size_t d = 1; d < divisor.size(); ++d) {
            long j = divisor[d].rel;
            if (j > n) break;
            const Rat& prev = r[static_cast<std::size_t>(n - j)];
            if (is_zero(prev)) continue;
            mpq_mul(prod, divisor[d].c->get_mpq_t(), prev.get_mpq_t());
            mpq_sub(acc, acc, prod);
        }
        mpq_div(r[static_cast<std::size_t>(n)].get_mpq_t(), acc, t0.get_mpq_t());
    }
    mpq_clear(acc);
    mpq_clear(prod);
    PuiseuxSeries q = PuiseuxSeries::make(m, lead, std::move(r), exact);
    if (exact && mul(q, ta) != sa)
        throw Error("exact series division does not terminate; truncate an operand");
    return q;
}

PuiseuxSeries d_op(const PuiseuxSeries& s) {
    std::vector<Rat> c(s.coeffs());
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (is_zero(c[j])) continue;
        Rat e(s.lead_index() + static_cast<long>(j), s.ram());
        e.canonicalize();
        c[j] *= e;
    }
    return PuiseuxSeries::make(s.ram(), s.lead_index(), std::move(c), s.exact());
}

MonicForm monicize(const PuiseuxSeries& s) {
    if (s.is_zero()) throw ZeroSeries();
    MonicForm out{s.lead_coeff(), s.lead_exponent(), PuiseuxSeries::zero()};
    std::vector<Rat> c(s.coeffs());
    for (auto& x : c) x /= out.scale;
    out.monic = PuiseuxSeries::make(s.ram(), 0, std::move(c), s.exact());
    return out;
}

PuiseuxSeries pow_rat(const PuiseuxSeries& m, const Rat& alpha) {
    if (m.is_zero() || m.lead_index() != 0 || m.lead_coeff() != 1)
        throw NotMonic();
    if (is_zero(alpha)) return PuiseuxSeries::one();
    if (m.exact() && is_integer(alpha) && alpha > 0)
        return pow_int(m, static_cast<long>(alpha.get_num().get_si()));

    long len = static_cast<long>(m.coeffs().size());
    std::vector<Rat> y(static_cast<std::size_t>(len), Rat(0));
    y[0] = 1;
    auto terms = nonzero_terms(m);
    Rat ap1 = alpha + 1;
    mpq_t acc, prod, coef;
    mpq_init(acc);
    mpq_init(prod);
    mpq_init(coef);
    for (long n = 1; n < len; ++n) {
        mpq_set_ui(acc, 0, 1);
        for (std::size_t d = 1; d < terms.size(); ++d) {
            long j = terms[d].rel;
            if (j > n) break;
            const Rat& prev = y[static_cast<std::size_t>(n - j)];
            if (is_zero(prev)) continue;
            Rat w = ap1 * j - n;  // ((alpha+1) j - n)
            if (is_zero(w)) continue;
            mpq_mul(prod, w.get_mpq_t(), terms[d].c->get_mpq_t());
            mpq_mul(prod, prod, prev.get_mpq_t());
            mpq_add(acc, acc, prod);
        }
        mpq_set_si(coef, n, 1);
        mpq_div(y[static_cast<std::size_t>(n)].get_mpq_t(), acc, coef);
    }
    mpq_clear(acc);
    mpq_clear(prod);
    mpq_clear(coef);
    return PuiseuxSeries::make(m.ram(), 0, std::move(y), false);
}

PuiseuxSeries pow_int(const PuiseuxSeries& s, long n) {
    if (n < 0) return div(PuiseuxSeries::one(), pow_int(s, -n));
    PuiseuxSeries acc = PuiseuxSeries::one();
    PuiseuxSeries base = s;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return acc;
}

PuiseuxSeries poly_eval(const Poly& p, const PuiseuxSeries& s) {
    PuiseuxSeries acc = PuiseuxSeries::zero();
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = add(mul(acc, s), PuiseuxSeries::constant(*it));
    return acc;
}

PuiseuxSeries compose_rational(const Poly& P, const Poly& Q,
                               const PuiseuxSeries& s) {
    if (!s.is_zero() && sgn(s.lead_exponent()) <= 0) throw NonPositiveLead();
    return div(poly_eval(P, s), poly_eval(Q, s));
}

bool agree(const PuiseuxSeries& s, const PuiseuxSeries& t) {
    long m = lcm_long(s.ram(), t.ram());
    PuiseuxSeries sa = s.with_ram(m);
    PuiseuxSeries ta = t.with_ram(m);
    IdxBound bound = idx_min(end_index(sa), end_index(ta));

    long start = std::numeric_limits<long>::max();
    long stop = std::numeric_limits<long>::min();
    if (!sa.is_zero()) {
        start = std::min(start, sa.lead_index());
        stop = std::max(stop,
                        sa.lead_index() + static_cast<long>(sa.coeffs().size()));
    }
    if (!ta.is_zero()) {
        start = std::min(start, ta.lead_index());
        stop = std::max(stop,
                        ta.lead_index() + static_cast<long>(ta.coeffs().size()));
    }
    if (start > stop) return true;  // both vanish
    if (bound) stop = std::min(stop, *bound);
    for (long g = start; g < stop; ++g)
        if (coeff_at_index(sa, g) != coeff_at_index(ta, g)) return false;
    return true;
}

std::string PuiseuxSeries::to_text() const {
    auto exp_str = [](const Rat& e) -> std::string {
        if (e == 1) return "q";
        std::string es = rat_to_string(e);
        if (is_integer(e) && sgn(e) > 0) return "q^" + es;
        return "q^(" + es + ")";
    };
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rat& c = coeffs_[j];
        if (qsw::is_zero(c)) continue;
        Rat e = idx_to_exp(lead_ + static_cast<long>(j), ram_);
        bool neg = sgn(c) < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string cs = rat_to_string(a);
        if (qsw::is_zero(e)) {
            os << cs;
        } else {
            if (a != 1) os << (is_integer(a) ? cs : "(" + cs + ")");
            os << exp_str(e);
        }
    }
    if (!exact_) {
        Rat b = idx_to_exp(lead_ + static_cast<long>(coeffs_.size()), ram_);
        if (!first) os << " + ";
        os << "O(" << exp_str(b) << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

LogSeries add(const LogSeries& s, const LogSeries& t) {
    return {add(s.log_part, t.log_part), add(s.pure_part, t.pure_part)};
}

LogSeries sub(const LogSeries& s, const LogSeries& t) {
    return {sub(s.log_part, t.log_part), sub(s.pure_part, t.pure_part)};
}

LogSeries mul(const LogSeries& s, const LogSeries& t) {
    if (s.has_log() && t.has_log()) throw LogTimesLog();
    return {add(mul(s.log_part, t.pure_part), mul(t.log_part, s.pure_part)),
            mul(s.pure_part, t.pure_part)};
}

LogSeries mul(const LogSeries& s, const PuiseuxSeries& t) {
    return {mul(s.log_part, t), mul(s.pure_part, t)};
}

LogSeries mul(const LogSeries& s, const Rat& c) {
    return {mul(s.log_part, c), mul(s.pure_part, c)};
}

LogSeries d_op(const LogSeries& s) {
    // D(a L + b) = D(a) L + (a + D(b)), from D(L) = 1
    return {d_op(s.log_part), add(s.log_part, d_op(s.pure_part))};
}

bool agree(const LogSeries& s, const LogSeries& t) {
    return agree(s.log_part, t.log_part) && agree(s.pure_part, t.pure_part);
}

}  // namespace qsw
