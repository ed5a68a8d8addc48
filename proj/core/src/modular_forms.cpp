#include "qsw/modular_forms.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace qsw {
namespace {

// Divisor power sums for 1..n by sieving multiples; one pass per divisor.
std::vector<Int> sigma_table(long k, long n) {
    std::vector<Int> sig(static_cast<size_t>(n) + 1, 0);
    Int dk;
    for (long d = 1; d <= n; ++d) {
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(k));
        for (long m = d; m <= n; m += d) sig[static_cast<size_t>(m)] += dk;
    }
    return sig;
}

PuiseuxSeries eisenstein(long weight_power, long factor, long order) {
    std::vector<Int> sig = sigma_table(weight_power, order);
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    c[0] = 1;
    for (long n = 1; n <= order; ++n)
        c[static_cast<size_t>(n)] = Rat(factor * sig[static_cast<size_t>(n)]);
    return PuiseuxSeries::make(1, 0, std::move(c), false);
}

// prod_{n=1..order} (1 - q^n)^{sign(n)} truncated to order+1 rows at ram 1.
// sign(n) in {-1, 0, +1}; each factor is a two-term binomial, so one
// multiply or divide per step costs O(order) coefficient operations.
PuiseuxSeries binomial_product(long order, int (*sign)(long)) {
    PuiseuxSeries acc = PuiseuxSeries::one().truncated(Rat(order + 1));
    for (long n = 1; n <= order; ++n) {
        int s = sign(n);
        if (s == 0) continue;
        std::vector<Rat> c(static_cast<size_t>(n) + 1);
        c[0] = 1;
        c[static_cast<size_t>(n)] = -1;
        PuiseuxSeries factor = PuiseuxSeries::make(1, 0, std::move(c), true);
        acc = s > 0 ? mul(acc, factor) : div(acc, factor);
    }
    return acc;
}

int all_ones(long) { return 1; }

PuiseuxSeries cut(const PuiseuxSeries& s, long order) {
    return s.truncated(Rat(s.lead_exponent() + order + 1));
}

std::mutex memo_mutex;
std::map<std::string, NamedSeries>& memo() {
    static std::map<std::string, NamedSeries> m;
    return m;
}

PuiseuxSeries memoized(const std::string& key, long order,
                       PuiseuxSeries (*build)(const std::string&, long)) {
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo().find(key);
        if (it != memo().end() && it->second.order >= order)
            return cut(it->second.series, order);
    }
    PuiseuxSeries s = build(key, order);
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(key);
    if (it == memo().end() || it->second.order < order)
        memo().insert_or_assign(key, NamedSeries{key, s, order});
    return s;
}

PuiseuxSeries build_named(const std::string& key, long order) {
    if (key == "E2") return eisenstein(1, -24, order);
    if (key == "E4") return eisenstein(3, 240, order);
    if (key == "eta")
        return mul(PuiseuxSeries::monomial(1, Rat(1, 24)),
                   binomial_product(order, all_ones));
    if (key == "t")
        return mul(PuiseuxSeries::monomial(1, Rat(1, 5)),
                   binomial_product(order, legendre5));
    // "eta_pow:<w>"
    Rat w = *rat_from_string(key.substr(8));
    return mul(PuiseuxSeries::monomial(1, w / 24),
               pow_rat(binomial_product(order, all_ones), w));
}

}  // namespace

Int sigma(long k, long n) {
    Int total = 0, dk;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(k));
        total += dk;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(e),
                          static_cast<unsigned long>(k));
            total += dk;
        }
    }
    return total;
}

PuiseuxSeries e2(long order) { return memoized("E2", order, build_named); }
PuiseuxSeries e4(long order) { return memoized("E4", order, build_named); }
PuiseuxSeries eta(long order) { return memoized("eta", order, build_named); }

PuiseuxSeries eta_pow(const Rat& w, long order) {
    return memoized("eta_pow:" + rat_to_string(w), order, build_named);
}

int legendre5(long n) {
    long m = ((n % 5) + 5) % 5;
    if (m == 0) return 0;
    return (m == 1 || m == 4) ? 1 : -1;
}

PuiseuxSeries haupt_t(long order) { return memoized("t", order, build_named); }

bool verify_e2_eta(long order) {
    PuiseuxSeries et = eta(order);
    PuiseuxSeries lhs = sub(e2(order), mul(div(d_op(et), et), Rat(24)));
    return lhs.is_zero() && lhs.known_to() >= Rat(order);
}

bool verify_ramanujan(long order) {
    PuiseuxSeries E2 = e2(order);
    PuiseuxSeries lhs =
        sub(mul(d_op(E2), Rat(12)), sub(mul(E2, E2), e4(order)));
    return lhs.is_zero() && lhs.known_to() >= Rat(order);
}

std::optional<NamedSeries> make_named(const std::string& name, long order) {
    if (order < 1) return std::nullopt;
    std::optional<std::string> key = canonical_series_name(name);
    if (!key) return std::nullopt;
    return NamedSeries{*key, memoized(*key, order, build_named), order};
}

std::optional<std::string> canonical_series_name(const std::string& name) {
    if (name == "E2" || name == "E4" || name == "eta" || name == "t")
        return name;
    if (name.rfind("eta_pow:", 0) == 0) {
        std::optional<Rat> w = rat_from_string(name.substr(8));
        if (!w) return std::nullopt;
        return "eta_pow:" + rat_to_string(*w);
    }
    return std::nullopt;
}

}  // namespace qsw
