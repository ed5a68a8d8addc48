#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <thread>
#include <vector>

#include "doctest.h"
#include "qsw/modular_forms.hpp"

using namespace qsw;

namespace {

// Independent oracles, written against the definitions only.

// Divisor power sum by exhaustive scan.
Int sigma_oracle(long k, long n) {
    Int s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Int p = 1;
        for (long j = 0; j < k; ++j) p *= d;
        s += p;
    }
    return s;
}

// Integer rows of prod (1-q^n) via Euler's pentagonal number theorem:
// sum over k in Z of (-1)^k q^{k(3k-1)/2}.
std::vector<long> euler_product_oracle(long order) {
    std::vector<long> rows(static_cast<size_t>(order) + 1, 0);
    for (long k = -order; k <= order; ++k) {
        long e = k * (3 * k - 1) / 2;
        if (e < 0 || e > order) continue;
        rows[static_cast<size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    return rows;
}

// chi(n) = (n/5) from the quadratic-residue definition: squares mod 5 are
// {1, 4}.
int chi_oracle(long n) {
    long m = ((n % 5) + 5) % 5;
    if (m == 0) return 0;
    return (m == 1 || m == 4) ? 1 : -1;
}

// Integer rows of prod (1-q^n)^{chi(n)} by naive dense polynomial arithmetic:
// multiply out the chi = +1 binomials, then long-divide by the chi = -1 ones.
std::vector<long> hauptmodul_product_oracle(long order) {
    size_t len = static_cast<size_t>(order) + 1;
    std::vector<long> num(len, 0), den(len, 0);
    num[0] = den[0] = 1;
    for (long n = 1; n <= order; ++n) {
        std::vector<long>* p = nullptr;
        if (chi_oracle(n) == 1) p = &num;
        else if (chi_oracle(n) == -1) p = &den;
        else continue;
        for (long j = order; j >= n; --j)
            (*p)[static_cast<size_t>(j)] -= (*p)[static_cast<size_t>(j - n)];
    }
    std::vector<long> out(len, 0);
    for (size_t j = 0; j < len; ++j) {
        long v = num[j];
        for (size_t i = 1; i <= j; ++i) v -= den[i] * out[j - i];
        out[j] = v;  // den[0] == 1
    }
    return out;
}

}  // namespace

TEST_CASE("sigma matches exhaustive divisor scan") {
    for (long n = 1; n <= 300; ++n) {
        CHECK(sigma(1, n) == sigma_oracle(1, n));
        CHECK(sigma(3, n) == sigma_oracle(3, n));
    }
}

TEST_CASE("E2 and E4 rows") {
    PuiseuxSeries s2 = e2(200), s4 = e4(200);
    CHECK(s2.coeff(Rat(0)) == 1);
    CHECK(s4.coeff(Rat(0)) == 1);
    for (long n = 1; n <= 200; ++n) {
        CHECK(s2.coeff(Rat(n)) == Rat(Int(-24) * sigma_oracle(1, n)));
        CHECK(s4.coeff(Rat(n)) == Rat(Int(240) * sigma_oracle(3, n)));
    }
    // spot values
    CHECK(s2.coeff(Rat(1)) == -24);
    CHECK(s2.coeff(Rat(2)) == -72);
    CHECK(s2.coeff(Rat(3)) == -96);
    CHECK(s4.coeff(Rat(1)) == 240);
    CHECK(s4.coeff(Rat(2)) == 2160);
    CHECK(s4.coeff(Rat(3)) == 6720);
    CHECK(s4.known_to() == Bound(Rat(201)));
    CHECK(e4(3).to_text() == "1 + 240q + 2160q^2 + 6720q^3 + O(q^4)");
}

TEST_CASE("eta rows match the pentagonal number theorem") {
    long order = 160;
    PuiseuxSeries h = eta(order);
    CHECK(h.lead_exponent() == Rat(1, 24));
    std::vector<long> rows = euler_product_oracle(order);
    for (long j = 0; j <= order; ++j)
        CHECK(h.coeff(Rat(Rat(j) + Rat(1, 24))) == rows[static_cast<size_t>(j)]);
    CHECK(h.known_to() == Bound(Rat(Rat(order + 1) + Rat(1, 24))));
}

TEST_CASE("legendre5 matches the residue definition") {
    for (long n = -30; n <= 30; ++n) CHECK(legendre5(n) == chi_oracle(n));
}

TEST_CASE("hauptmodul rows match a naive product oracle") {
    long order = 40;
    PuiseuxSeries t = haupt_t(order);
    CHECK(t.lead_exponent() == Rat(1, 5));
    std::vector<long> rows = hauptmodul_product_oracle(order);
    for (long j = 0; j <= order; ++j)
        CHECK(t.coeff(Rat(Rat(j) + Rat(1, 5))) == rows[static_cast<size_t>(j)]);
    // first few rows: t = q^{1/5} (1 - q + q^2 + O(q^3))
    CHECK(rows[0] == 1);
    CHECK(rows[1] == -1);
    CHECK(rows[2] == 1);
}

TEST_CASE("logarithmic derivative identity for eta") {
    CHECK(verify_e2_eta(120));
    // direct form: E2 * eta == 24 D(eta)
    PuiseuxSeries h = eta(60);
    CHECK(agree(mul(e2(60), h), mul(d_op(h), Rat(24))));
}

TEST_CASE("E2 derivative identity") {
    CHECK(verify_ramanujan(120));
    PuiseuxSeries s2 = e2(80);
    PuiseuxSeries lhs = mul(d_op(s2), Rat(12));
    PuiseuxSeries rhs = sub(mul(s2, s2), e4(80));
    CHECK(agree(lhs, rhs));
}

TEST_CASE("eta powers") {
    long order = 50;
    CHECK(eta_pow(Rat(1), order) == eta(order));
    CHECK(agree(eta_pow(Rat(7, 2), order),
                mul(eta_pow(Rat(3), order), eta_pow(Rat(1, 2), order))));
    PuiseuxSeries inv = mul(eta_pow(Rat(5), order), eta_pow(Rat(-5), order));
    CHECK(agree(inv, PuiseuxSeries::one()));
    CHECK(eta_pow(Rat(12), order).lead_exponent() == Rat(1, 2));
}

TEST_CASE("named series catalog") {
    auto n1 = make_named("E4", 10);
    REQUIRE(n1.has_value());
    CHECK(n1->name == "E4");
    CHECK(n1->order == 10);
    CHECK(n1->series == e4(10));

    auto n2 = make_named("eta_pow:6/4", 8);
    REQUIRE(n2.has_value());
    CHECK(n2->name == "eta_pow:3/2");
    CHECK(n2->series == eta_pow(Rat(3, 2), 8));

    CHECK(!make_named("E6", 10).has_value());
    CHECK(!make_named("eta_pow:abc", 10).has_value());

    CHECK(canonical_series_name("t") == std::string("t"));
    CHECK(canonical_series_name("eta_pow:6/4") == std::string("eta_pow:3/2"));
    CHECK(!canonical_series_name("nope").has_value());
}

TEST_CASE("catalog is safe under concurrent access") {
    std::vector<std::thread> pool;
    std::vector<PuiseuxSeries> got(8);
    for (int i = 0; i < 8; ++i) {
        pool.emplace_back([i, &got] {
            got[static_cast<size_t>(i)] = make_named("t", 60 + (i % 2) * 20)->series;
        });
    }
    for (auto& th : pool) th.join();
    for (int i = 0; i < 8; ++i)
        CHECK(got[static_cast<size_t>(i)] == haupt_t(60 + (i % 2) * 20));
}
