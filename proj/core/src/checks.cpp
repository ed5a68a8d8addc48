#include "qsw/checks.hpp"

#include <algorithm>
#include <cmath>

#include "qsw/classifier.hpp"
#include "qsw/errors.hpp"
#include "qsw/frobenius.hpp"
#include "qsw/modular_forms.hpp"
#include "qsw/schwarz.hpp"

namespace qsw {
namespace {

std::string fl(const BigFloat& x) {
    return x.str(3, std::ios_base::scientific);
}

nlohmann::json eval_entry(const std::string& check, const UniModularMatrix& g,
                          const BigComplex& tau, const NumericResult& r) {
    return {{"check", check},
            {"gamma", {g.a, g.b, g.c, g.d}},
            {"tau", complex_to_string(tau)},
            {"residual", fl(r.residual)},
            {"terms", r.terms_used},
            {"pass", r.pass}};
}

CheckReport run_ramanujan(const CheckParams& p) {
    bool ok = verify_ramanujan(p.order);
    return {"ramanujan-e2", ok, {{"order", p.order}}};
}

CheckReport run_eta_e2(const CheckParams& p) {
    bool ok = verify_e2_eta(p.order);
    return {"eta-e2", ok, {{"order", p.order}}};
}

CheckReport run_haupt_schwarz(const CheckParams& p) {
    PuiseuxSeries t = haupt_t(p.order);
    bool ok = verify_schwarz_eq(SchwarzInput::from_series(t), Rat(1, 5),
                                p.order);
    return {"hauptmodul-schwarz", ok, {{"order", p.order}, {"r", "1/5"}}};
}

// The two explicit level-5 solutions beyond the Hauptmodul itself:
// h = t^2(t^5-7)/(7t^5+1) for r = 2/5 and
// h = t^3(t^10-39t^5-26)/(26t^10-39t^5-1) for r = 3/5.
CheckReport run_rational_map(const char* name, int which,
                             const CheckParams& p) {
    PuiseuxSeries t = haupt_t(p.order + 2);
    Poly num, den;
    Rat r;
    if (which == 2) {
        num = {0, 0, -7, 0, 0, 0, 0, 1};
        den = {1, 0, 0, 0, 0, 7};
        r = Rat(2, 5);
    } else {
        num = {0, 0, 0, -26, 0, 0, 0, 0, -39, 0, 0, 0, 0, 1};
        den = {-1, 0, 0, 0, 0, -39, 0, 0, 0, 0, 26};
        r = Rat(3, 5);
    }
    PuiseuxSeries h = compose_rational(num, den, t);
    bool ok = verify_schwarz_eq(SchwarzInput::from_series(h), r, p.order);
    return {name, ok, {{"order", p.order}, {"r", rat_to_string(r)}}};
}

CheckReport run_ode_roundtrip(const CheckParams& p) {
    const std::vector<Rat> rs = {Rat(1, 5), Rat(2, 5), Rat(1, 2), Rat(3, 4),
                                 Rat(1),    Rat(2),    Rat(3)};
    bool ok = true;
    nlohmann::json per = nlohmann::json::array();
    for (const Rat& r : rs) {
        // the q^{-r/2} lead of y2 costs up to two rows of certificate
        FrobeniusBasis b = solve(r, p.order + 2);
        bool this_ok = ode_residual(b.y1, r, p.order) &&
                       ode_residual(b.y2, r, p.order);
        per.push_back({{"r", rat_to_string(r)}, {"pass", this_ok}});
        ok = ok && this_ok;
    }
    // the Hauptmodul's projective pair must lie in the solved span
    FrobeniusBasis b = solve(Rat(1, 5), p.order);
    auto [v1, v2] = solutions_from_h(
        SchwarzInput::from_series(haupt_t(p.order)), Rat(1, 5), p.order);
    auto s1 = in_span(v1, b);
    auto s2 = in_span(v2, b);
    bool span_ok = s1.has_value() && s2.has_value();
    ok = ok && span_ok;
    nlohmann::json span = {{"pass", span_ok}};
    if (s1)
        span["y1"] = {rat_to_string(s1->first), rat_to_string(s1->second)};
    if (s2)
        span["y2"] = {rat_to_string(s2->first), rat_to_string(s2->second)};
    return {"ode-roundtrip", ok, {{"order", p.order}, {"per_r", per},
                                  {"span", span}}};
}

CheckReport run_wronskian(const CheckParams& p) {
    const std::vector<Rat> rs = {Rat(1, 5), Rat(2, 5), Rat(1, 2),
                                 Rat(1),    Rat(2),    Rat(3)};
    bool ok = true;
    nlohmann::json per = nlohmann::json::array();
    for (const Rat& r : rs) {
        FrobeniusBasis b = solve(r, p.order);
        auto [w0, single] = wronskian(b);
        bool beta0 = b.y2.pure_part.coeff(Rat(-r / 2)) == 1;
        bool c_ok = is_integer(r) ? !is_zero(b.c) : is_zero(b.c);
        if (r == 1) c_ok = c_ok && b.c == 60;
        bool this_ok = single && w0 == -r && beta0 && c_ok;
        per.push_back({{"r", rat_to_string(r)},
                       {"w0", rat_to_string(w0)},
                       {"single_term", single},
                       {"c", rat_to_string(b.c)},
                       {"pass", this_ok}});
        ok = ok && this_ok;
    }
    return {"wronskian", ok, {{"order", p.order}, {"per_r", per}}};
}

bool kk_pair(const Rat& k, long order, std::optional<Rat> exponent) {
    Rat r = Rat((k + 1) / 6);
    FrobeniusBasis b = solve(r, order + 2);
    if (exponent) {
        // probe mode: raise eta to the requested exponent instead of 2(k+1)
        PuiseuxSeries f = mul(eta_pow(*exponent, order + 2), b.y1);
        return kk_residual(f, k, order);
    }
    return kk_residual(to_f(b.y1, r, k, order + 2), k, order) &&
           kk_residual(to_f(b.y2, r, k, order + 2), k, order);
}

CheckReport run_kk_residual(const CheckParams& p) {
    std::vector<Rat> ks;
    if (p.k)
        ks = {*p.k};
    else
        ks = {Rat(1, 5), Rat(7, 5), Rat(13, 5), Rat(2), Rat(5)};
    bool ok = true;
    nlohmann::json per = nlohmann::json::array();
    for (const Rat& k : ks) {
        bool this_ok = kk_pair(k, p.order, p.exponent);
        nlohmann::json e = {{"k", rat_to_string(k)}, {"pass", this_ok}};
        if (p.exponent) e["exponent"] = rat_to_string(*p.exponent);
        per.push_back(e);
        ok = ok && this_ok;
    }
    return {"kk-residual", ok, {{"order", p.order}, {"per_k", per}}};
}

CheckReport run_exponent_probe(const CheckParams& p) {
    Rat k = p.k ? *p.k : Rat(1, 5);
    Rat good = Rat(2 * (k + 1));
    Rat bad = Rat(2 * k + 1);
    bool good_ok = kk_pair(k, p.order, good);
    bool bad_ok = kk_pair(k, p.order, bad);
    return {"exponent-probe",
            good_ok && !bad_ok,
            {{"order", p.order},
             {"k", rat_to_string(k)},
             {"vanishing_exponent", rat_to_string(good)},
             {"vanishes", good_ok},
             {"probed_exponent", rat_to_string(bad)},
             {"probe_vanishes", bad_ok}}};
}

CheckReport run_gamma5(const CheckParams& p) {
    EvalContext ctx{p.precision, p.terms, p.tolerance};
    bool ok = true;
    nlohmann::json per = nlohmann::json::array();
    for (const UniModularMatrix& g : gamma5_test_matrices()) {
        for (const BigComplex& tau : gamma5_test_points(g)) {
            NumericResult r = gamma5_once(g, tau, ctx);
            per.push_back(eval_entry("gamma5-invariance", g, tau, r));
            ok = ok && r.pass;
        }
    }
    return {"gamma5-invariance", ok, {{"evaluations", per}}};
}

CheckReport run_equivariance(const CheckParams& p) {
    EvalContext ctx{p.precision, p.terms, p.tolerance};
    std::vector<Rat> rs;
    if (p.r)
        rs = {*p.r};
    else
        rs = {Rat(1), Rat(2), Rat(3)};
    bool ok = true;
    nlohmann::json per = nlohmann::json::array();
    for (const Rat& r : rs) {
        for (const UniModularMatrix& g : equivariance_gammas(r)) {
            NumericResult res = equivariance_once(r, g, ctx);
            nlohmann::json e = eval_entry("equivariance", g,
                                          equivariance_taus()[0], res);
            e["r"] = rat_to_string(r);
            per.push_back(e);
            ok = ok && res.pass;
        }
    }
    return {"equivariance", ok, {{"evaluations", per}}};
}

}  // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "ramanujan-e2",     "eta-e2",          "hauptmodul-schwarz",
        "rational-map-7-5", "rational-map-13-5", "ode-roundtrip",
        "wronskian",        "kk-residual",     "exponent-probe",
        "gamma5-invariance", "equivariance"};
    return names;
}

bool check_is_numeric(const std::string& name) {
    return name == "gamma5-invariance" || name == "equivariance";
}

bool is_known_check(const std::string& name) {
    const auto& names = check_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

CheckReport run_check(const std::string& name, const CheckParams& params) {
    if (name == "ramanujan-e2") return run_ramanujan(params);
    if (name == "eta-e2") return run_eta_e2(params);
    if (name == "hauptmodul-schwarz") return run_haupt_schwarz(params);
    if (name == "rational-map-7-5")
        return run_rational_map("rational-map-7-5", 2, params);
    if (name == "rational-map-13-5")
        return run_rational_map("rational-map-13-5", 3, params);
    if (name == "ode-roundtrip") return run_ode_roundtrip(params);
    if (name == "wronskian") return run_wronskian(params);
    if (name == "kk-residual") return run_kk_residual(params);
    if (name == "exponent-probe") return run_exponent_probe(params);
    if (name == "gamma5-invariance") return run_gamma5(params);
    if (name == "equivariance") return run_equivariance(params);
    throw UnknownCheck(name);
}

const std::vector<UniModularMatrix>& gamma5_test_matrices() {
    static const std::vector<UniModularMatrix> ms = {{1, 5, 0, 1},
                                                     {1, 0, 5, 1},
                                                     {1, 5, 5, 26},
                                                     {6, 5, 25, 21},
                                                     {6, 25, 5, 21}};
    return ms;
}

std::vector<BigComplex> gamma5_test_points(const UniModularMatrix& g) {
    if (g.c == 0)
        return {{BigFloat(0.13), BigFloat(0.31)},
                {BigFloat(0.05), BigFloat(0.40)},
                {BigFloat(-0.22), BigFloat(0.27)}};
    // near the real point -d/c the image height Im(g tau) stays ~ Im(tau),
    // so both sides of the comparison converge at the same rate
    double x = -static_cast<double>(g.d) / static_cast<double>(g.c);
    double ac = std::abs(static_cast<double>(g.c));
    std::vector<BigComplex> out;
    for (double s : {0.9, 1.0, 1.25})
        out.push_back({BigFloat(x), BigFloat(s / ac)});
    return out;
}

std::vector<UniModularMatrix> equivariance_gammas(const Rat& r) {
    bool even = is_integer(r) && mpz_even_p(r.get_num().get_mpz_t());
    if (even) return {{0, -1, 1, 0}, {0, -1, 1, 1}};  // S, ST
    // odd r: squares subgroup, the index-2 subgroup; (ST)^2 and T^2
    return {{-1, -1, 1, 0}, {1, 2, 0, 1}};
}

const std::array<BigComplex, 4>& equivariance_taus() {
    static const std::array<BigComplex, 4> taus = {
        BigComplex{BigFloat(0.0), BigFloat(1.1)},
        BigComplex{BigFloat(0.3), BigFloat(1.2)},
        BigComplex{BigFloat(-0.2), BigFloat(0.9)},
        BigComplex{BigFloat(0.1), BigFloat(1.3)}};
    return taus;
}

NumericResult gamma5_once(const UniModularMatrix& g, const BigComplex& tau,
                          const EvalContext& ctx) {
    return check_gamma5_invariance(g, tau, ctx);
}

namespace {

// log2 of |x| within one bit, safe for magnitudes far outside double range
double log2_mag(const Rat& x) {
    if (is_zero(x)) return -1e9;
    return static_cast<double>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2)) -
           static_cast<double>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
}

}  // namespace

NumericResult equivariance_once(const Rat& r, const UniModularMatrix& g,
                                const EvalContext& ctx) {
    PrecisionGuard guard(ctx.precision);
    long rows = ctx.terms;
    double min_im = 1e300;
    for (const BigComplex& tau : equivariance_taus()) {
        min_im = std::min(min_im, tau.im.convert_to<double>());
        BigComplex gt = mobius(g, tau);
        min_im = std::min(min_im, gt.im.convert_to<double>());
    }
    if (rows == 0) {
        rows = q_rows_needed(min_im, ctx.tol);
        rows += rows / 4 + 8;
    }
    if (is_integer(r)) rows = std::max(rows, r.get_num().get_si() + 3);
    FrobeniusBasis b = solve(r, rows);
    if (ctx.terms == 0) {
        // the bare tail bound assumes O(1) coefficients; resonant bases carry
        // the log-coupling scale, so grow rows until the first omitted term
        // of h = g / y1 (exponent rows - r after the division) clears tol/10
        double qbits = -2.0 * M_PI * min_im / std::log(2.0);
        double goal = std::log2(ctx.tol / 10.0);
        double rexp = Rat(r).get_d();
        for (int pass = 0; pass < 8 && rows < 400; ++pass) {
            double bits =
                log2_mag(b.y2.pure_part.coeffs().back()) +
                (static_cast<double>(rows) - rexp) * qbits + 4;
            if (bits < goal) break;
            rows += rows / 2 + 8;
            b = solve(r, rows);
        }
    }
    EvalContext ec = ctx;
    ec.terms = 0;
    NumericResult res =
        cross_ratio_equivariance(h_eval_from_basis(b, ec), g,
                                 equivariance_taus(), ec);
    res.terms_used = rows;
    return res;
}

}  // namespace qsw
