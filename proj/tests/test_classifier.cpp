#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <string>

#include "doctest.h"
#include "qsw/classifier.hpp"
#include "qsw/errors.hpp"

using namespace qsw;

namespace {

// Independent oracle: reduce (k+1)/6 by gcd and apply the case split.
ModularityTag tag_oracle(long knum, long kden) {
    // r = (knum/kden + 1)/6 = (knum + kden) / (6 kden)
    long rn = knum + kden, rd = 6 * kden;
    long g = std::gcd(std::abs(rn), rd);
    long m = rd / g;
    if (m >= 2 && m <= 5) return ModularityTag::FullyModular;
    if (m == 1) return ModularityTag::QuasiModular;
    if (m == 6 && kden == 1) return ModularityTag::PartiallyModular;
    return ModularityTag::NoFullModularity;
}

}  // namespace

TEST_CASE("examples across the case split") {
    ModularityClass a = classify(Rat(1, 5));
    CHECK(a.tag == ModularityTag::FullyModular);
    CHECK(a.n == 1);
    CHECK(a.m == 5);
    CHECK(a.level == 5);
    CHECK(!a.note.has_value());

    ModularityClass b = classify(Rat(13, 5));
    CHECK(b.tag == ModularityTag::FullyModular);
    CHECK(b.n == 3);
    CHECK(b.m == 5);

    ModularityClass c = classify(Rat(2));
    CHECK(c.tag == ModularityTag::FullyModular);
    CHECK(c.m == 2);
    CHECK(c.level == 2);

    ModularityClass d = classify(Rat(5));
    CHECK(d.tag == ModularityTag::QuasiModular);
    CHECK(d.m == 1);
    CHECK(d.n == 1);
    REQUIRE(d.note.has_value());
    CHECK(d.note->weight == Rat(6));
    CHECK(d.note->depth == 1);
    CHECK(!d.level.has_value());

    ModularityClass e = classify(Rat(6));
    CHECK(e.tag == ModularityTag::PartiallyModular);
    CHECK(e.m == 6);
    CHECK(e.n == 7);

    ModularityClass f = classify(Rat(7, 6));
    CHECK(f.tag == ModularityTag::NoFullModularity);
    CHECK(f.m == 36);

    ModularityClass g = classify(Rat(1, 2));
    CHECK(g.tag == ModularityTag::FullyModular);
    CHECK(g.m == 4);
    CHECK(g.n == 1);

    CHECK_THROWS_AS(classify(Rat(-1)), NonPositiveR);
    CHECK_THROWS_AS(classify(Rat(-7)), NonPositiveR);
}

TEST_CASE("integer weights follow the residue pattern") {
    for (long k = 0; k <= 120; ++k) {
        ModularityClass c = classify(Rat(k));
        long res = (k + 1) % 6;
        ModularityTag want;
        if (res == 0)
            want = ModularityTag::QuasiModular;
        else if (res == 1 || res == 5)
            want = ModularityTag::PartiallyModular;
        else
            want = ModularityTag::FullyModular;
        CHECK(c.tag == want);
        CHECK(c.tag == tag_oracle(k, 1));
        CHECK(rat(6 * c.n, c.m) == Rat(k + 1));  // 6r = k + 1
        CHECK(c.r == Rat(c.n, c.m));
    }
}

TEST_CASE("half-integer weights") {
    // k = j + 1/2: r = (2j+3)/12, denominator 4 iff 3 | (j + 0? ...): check
    // against the oracle instead of a re-derived rule
    for (long j = 0; j <= 80; ++j) {
        ModularityClass c = classify(Rat(2 * j + 1, 2));
        CHECK(c.tag == tag_oracle(2 * j + 1, 2));
        // never quasi or partially modular on this family
        CHECK(c.tag != ModularityTag::QuasiModular);
        CHECK(c.tag != ModularityTag::PartiallyModular);
        bool fully = c.tag == ModularityTag::FullyModular;
        CHECK(fully == (c.m == 4));
        // m = 4 exactly when k = 1/2 mod 3
        CHECK(fully == ((2 * j + 1) % 6 == 1));
    }
}

TEST_CASE("denominator-5 family") {
    std::vector<Rat> ks = level5_ks(20);
    CHECK(ks.size() == 16);  // n = 1..20 minus multiples of 5
    CHECK(ks.front() == Rat(1, 5));
    CHECK(ks[1] == Rat(7, 5));
    CHECK(ks[2] == Rat(13, 5));
    for (const Rat& k : ks) {
        ModularityClass c = classify(k);
        CHECK(c.tag == ModularityTag::FullyModular);
        CHECK(c.m == 5);
        CHECK(c.level == 5);
        // k = 6n/5 - 1 for the n recorded in the class
        CHECK(k == Rat(6 * c.n, 5) - Rat(1));
    }
}

TEST_CASE("construction property: classify inverts k = 6r - 1") {
    for (long m = 1; m <= 12; ++m) {
        for (long n = 1; n <= 30; ++n) {
            if (std::gcd(n, m) != 1) continue;
            Rat r(n, m);
            Rat k = Rat(6) * r - 1;
            ModularityClass c = classify(k);
            CHECK(c.n == n);
            CHECK(c.m == m);
            CHECK(c.r == r);
            if (m >= 2 && m <= 5) CHECK(c.tag == ModularityTag::FullyModular);
            if (m == 1) CHECK(c.tag == ModularityTag::QuasiModular);
            if (m >= 7) CHECK(c.tag == ModularityTag::NoFullModularity);
            if (m == 6) {
                bool k_int = is_integer(k);
                CHECK(c.tag == (k_int ? ModularityTag::PartiallyModular
                                      : ModularityTag::NoFullModularity));
            }
        }
    }
}

TEST_CASE("tag names are stable") {
    CHECK(std::string(tag_name(ModularityTag::FullyModular)) == "FullyModular");
    CHECK(std::string(tag_name(ModularityTag::PartiallyModular)) ==
          "PartiallyModular");
    CHECK(std::string(tag_name(ModularityTag::QuasiModular)) == "QuasiModular");
    CHECK(std::string(tag_name(ModularityTag::NoFullModularity)) ==
          "NoFullModularity");
}
