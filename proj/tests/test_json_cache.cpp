#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "qsw/cache.hpp"
#include "qsw/modular_forms.hpp"
#include "qsw/series_json.hpp"

using namespace qsw;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qsw-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

bool identical(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return a.ram() == b.ram() && a.lead_index() == b.lead_index() &&
           a.coeffs() == b.coeffs() && a.exact() == b.exact();
}

}  // namespace

TEST_CASE("series round trip is bit exact") {
    for (const PuiseuxSeries& s :
         {e4(12), haupt_t(9), eta_pow(Rat(-3), 7),
          PuiseuxSeries::monomial(Rat(22, 7), Rat(-5, 3)),
          PuiseuxSeries::zero(), PuiseuxSeries::zero_to(Rat(11, 2)),
          PuiseuxSeries::make(2, -4, {Rat(1), Rat(0), Rat(-3, 8)}, true)}) {
        PuiseuxSeries back = parse_series(dump_series(s));
        CHECK(identical(back, s));
    }
}

TEST_CASE("wire format fields") {
    nlohmann::json j = series_to_json(PuiseuxSeries::monomial(Rat(3, 2), Rat(1, 5)));
    CHECK(j["ram"] == 5);
    CHECK(j["lead"] == 1);
    CHECK(j["coeffs"] == nlohmann::json::array({"3/2"}));
    CHECK(j["exact"] == true);

    nlohmann::json t = series_to_json(haupt_t(2));
    CHECK(t["ram"] == 5);
    CHECK(t["lead"] == 1);
    CHECK(!t.contains("exact"));
    // dense over indices 1..15: certificate O(q^{16/5}) at ram 5
    CHECK(t["coeffs"].size() == 15);
}

TEST_CASE("log series round trip") {
    LogSeries s(mul(e4(6), Rat(60)), eta_pow(Rat(2), 6));
    LogSeries back = log_series_from_json(log_series_to_json(s));
    CHECK(identical(back.log_part, s.log_part));
    CHECK(identical(back.pure_part, s.pure_part));
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_series("not json at all"), JsonError);
    CHECK_THROWS_AS(parse_series("[1,2,3]"), JsonError);
    CHECK_THROWS_AS(parse_series(R"({"ram":0,"lead":0,"coeffs":[]})"), JsonError);
    CHECK_THROWS_AS(parse_series(R"({"ram":1,"lead":0})"), JsonError);
    CHECK_THROWS_AS(parse_series(R"({"ram":1,"lead":0,"coeffs":["x"]})"),
                    JsonError);
    CHECK_THROWS_AS(parse_series(R"({"ram":1,"lead":0,"coeffs":[7]})"),
                    JsonError);
    CHECK_THROWS_AS(parse_series(R"({"ram":1,"lead":0,"coeffs":["1/0"]})"),
                    JsonError);
    CHECK_THROWS_AS(
        log_series_from_json(nlohmann::json{{"log_part", 1}}), JsonError);
}

TEST_CASE("cache stores and reloads bit-identical series") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    PuiseuxSeries t = haupt_t(25);
    CHECK(!cache.load("t", 25).has_value());
    cache.store("t", 25, t);
    auto back = cache.load("t", 25);
    REQUIRE(back.has_value());
    CHECK(identical(*back, t));
    // a different order is a distinct entry
    CHECK(!cache.load("t", 26).has_value());
    // names are sanitized into flat file names
    cache.store("eta_pow:3/2", 10, eta_pow(Rat(3, 2), 10));
    CHECK(cache.load("eta_pow:3/2", 10).has_value());
    for (const auto& entry : fs::directory_iterator(tmp.path)) {
        CHECK(entry.path().filename().string().find('/') == std::string::npos);
        CHECK(entry.path().filename().string().find(':') == std::string::npos);
    }
}

TEST_CASE("tampered or mismatched entries read as misses") {
    TempDir tmp;
    SeriesCache cache(tmp.path);
    cache.store("E4", 8, e4(8));
    REQUIRE(cache.load("E4", 8).has_value());

    fs::path entry;
    for (const auto& de : fs::directory_iterator(tmp.path)) entry = de.path();
    {
        std::ofstream out(entry, std::ios::trunc);
        out << "{\"name\":\"E4\",\"order\":8,\"series\":{\"ram\":0}}";
    }
    CHECK(!cache.load("E4", 8).has_value());
    {
        std::ofstream out(entry, std::ios::trunc);
        out << "garbage";
    }
    CHECK(!cache.load("E4", 8).has_value());

    // an entry whose payload disagrees with its key is refused
    nlohmann::json j{{"name", "E2"},
                     {"order", 8},
                     {"series", series_to_json(e2(8))}};
    {
        std::ofstream out(entry, std::ios::trunc);
        out << j.dump();
    }
    CHECK(!cache.load("E4", 8).has_value());
}

TEST_CASE("default dir honors the environment override") {
    TempDir tmp;
    setenv("QSW_CACHE_DIR", tmp.path.c_str(), 1);
    CHECK(SeriesCache::default_dir() == tmp.path);
    unsetenv("QSW_CACHE_DIR");
}
