#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsw/cache.hpp"
#include "qsw/checks.hpp"
#include "qsw/classifier.hpp"
#include "qsw/errors.hpp"
#include "qsw/frobenius.hpp"
#include "qsw/modular_forms.hpp"
#include "qsw/series_json.hpp"

namespace {

using namespace qsw;

struct Defaults {
    long order = 200;
    long precision = 60;
    double tolerance = 1e-8;
    std::string cache_dir;
};

// QSW_CONFIG points at a JSON config file; otherwise ~/.config/qsw/config.json
// is read when present. Flags override config, QSW_CACHE_DIR overrides the
// configured cache directory.
Defaults load_defaults() {
    Defaults d;
    d.cache_dir = SeriesCache::default_dir().string();
    std::string path;
    if (const char* env = std::getenv("QSW_CONFIG")) {
        path = env;
    } else if (const char* home = std::getenv("HOME")) {
        path = std::string(home) + "/.config/qsw/config.json";
    }
    if (path.empty()) return d;
    std::ifstream in(path);
    if (!in) return d;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) return d;
    d.order = j.value("order", d.order);
    d.precision = j.value("precision", d.precision);
    d.tolerance = j.value("tolerance", d.tolerance);
    if (std::getenv("QSW_CACHE_DIR") == nullptr)
        d.cache_dir = j.value("cache_dir", d.cache_dir);
    return d;
}

std::string render_log_series(const LogSeries& s) {
    if (s.log_part.is_zero()) return s.pure_part.to_text();
    return "(" + s.log_part.to_text() + ")*L + " + s.pure_part.to_text();
}

Rat parse_rat_arg(const std::string& text, const char* what) {
    std::optional<Rat> r = rat_from_string(text);
    if (!r) throw Error(std::string(what) + " must be an exact rational p/q");
    return *r;
}

int cmd_series(const std::string& name, long order, const std::string& format,
               bool no_cache, const std::string& cache_dir) {
    if (order < 1) throw Error("order must be >= 1");
    std::optional<std::string> key = canonical_series_name(name);
    if (!key) throw UnknownSeries(name);

    std::optional<PuiseuxSeries> s;
    SeriesCache cache{cache_dir};
    if (!no_cache) s = cache.load(*key, order);
    if (!s) {
        s = make_named(*key, order)->series;
        if (!no_cache) cache.store(*key, order, *s);
    }
    if (format == "json")
        std::cout << dump_series(*s) << "\n";
    else
        std::cout << s->to_text() << "\n";
    return 0;
}

int cmd_solve(const std::string& k_text, long order,
              const std::string& format) {
    Rat k = parse_rat_arg(k_text, "--k");
    Rat r = Rat((k + 1) / 6);
    if (r <= 0) throw NonPositiveR();
    FrobeniusBasis b = solve(r, order);
    if (format == "text") {
        std::cout << "r = " << rat_to_string(b.r) << "\n"
                  << "c = " << rat_to_string(b.c) << "\n"
                  << "y1 = " << b.y1.to_text() << "\n"
                  << "y2 = " << render_log_series(b.y2) << "\n";
        return 0;
    }
    nlohmann::json j = {{"r", rat_to_string(b.r)},
                        {"c", rat_to_string(b.c)},
                        {"order", b.order},
                        {"y1", series_to_json(b.y1)},
                        {"y2", log_series_to_json(b.y2)}};
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_classify(const std::string& k_text, const std::string& format) {
    Rat k = parse_rat_arg(k_text, "--k");
    ModularityClass c = classify(k);
    if (format == "text") {
        std::cout << tag_name(c.tag) << " (r = " << rat_to_string(c.r)
                  << ", n = " << c.n << ", m = " << c.m;
        if (c.level) std::cout << ", level " << *c.level;
        if (c.note)
            std::cout << ", weight " << rat_to_string(c.note->weight)
                      << ", depth " << c.note->depth;
        std::cout << ")\n";
        return 0;
    }
    nlohmann::json j = {{"tag", tag_name(c.tag)},
                        {"m", c.m},
                        {"n", c.n},
                        {"level", nullptr},
                        {"r", rat_to_string(c.r)}};
    if (c.level) j["level"] = *c.level;
    if (c.note) {
        j["weight"] = rat_to_string(c.note->weight);
        j["depth"] = c.note->depth;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& name, const CheckParams& params,
               bool numeric, const std::string& format) {
    std::vector<std::string> to_run;
    if (name == "all") {
        for (const std::string& n : check_names())
            if (numeric || !check_is_numeric(n)) to_run.push_back(n);
    } else {
        if (!is_known_check(name)) throw UnknownCheck(name);
        to_run.push_back(name);
    }

    bool all_pass = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const std::string& n : to_run) {
        CheckReport rep = run_check(n, params);
        all_pass = all_pass && rep.pass;
        if (format == "text")
            std::cout << (rep.pass ? "PASS " : "FAIL ") << n << "\n";
        else
            reports.push_back({{"name", rep.name},
                               {"pass", rep.pass},
                               {"details", rep.details}});
    }
    if (format != "text")
        std::cout << (to_run.size() == 1 ? reports[0] : reports).dump() << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Defaults defaults = load_defaults();

    CLI::App app{"exact q-series workbench for modular differential equations"};
    app.require_subcommand(1);

    long order = defaults.order;
    long precision = defaults.precision;
    long terms = 0;
    double tolerance = defaults.tolerance;
    std::string cache_dir = defaults.cache_dir;
    std::string format;
    std::string name, k_text, r_text, exponent_text;
    bool no_cache = false, numeric = false, json_flag = false;

    CLI::App* series = app.add_subcommand(
        "series", "print a named q-expansion (E2, E4, eta, eta_pow:<w>, t)");
    series->add_option("name", name)->required();
    series->add_option("--order", order);
    series->add_option("--format", format)
        ->check(CLI::IsMember({"json", "text"}));
    series->add_flag("--no-cache", no_cache);
    series->add_option("--cache-dir", cache_dir);

    CLI::App* solve_cmd = app.add_subcommand(
        "solve", "Frobenius basis at the cusp for weight k, r = (k+1)/6");
    solve_cmd->add_option("--k", k_text)->required();
    solve_cmd->add_option("--order", order);
    solve_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"json", "text"}));
    solve_cmd->add_flag("--json", json_flag);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "modularity class of weight k");
    classify_cmd->add_option("--k", k_text)->required();
    classify_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"json", "text"}));
    classify_cmd->add_flag("--json", json_flag);

    CLI::App* verify =
        app.add_subcommand("verify", "run a named check or 'all'");
    verify->add_option("check", name)->required();
    verify->add_option("--order", order);
    verify->add_option("--k", k_text);
    verify->add_option("--r", r_text);
    verify->add_option("--exponent", exponent_text);
    verify->add_option("--tolerance", tolerance);
    verify->add_option("--precision", precision);
    verify->add_option("--terms", terms);
    verify->add_flag("--numeric", numeric);
    verify->add_option("--format", format)
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (series->parsed())
            return cmd_series(name, order, format.empty() ? "text" : format,
                              no_cache, cache_dir);
        if (solve_cmd->parsed()) {
            std::string fmt = format.empty() ? "json" : format;
            if (json_flag) fmt = "json";
            return cmd_solve(k_text, order, fmt);
        }
        if (classify_cmd->parsed()) {
            std::string fmt = format.empty() ? "json" : format;
            if (json_flag) fmt = "json";
            return cmd_classify(k_text, fmt);
        }
        CheckParams params;
        params.order = order;
        params.tolerance = tolerance;
        params.precision = precision;
        params.terms = terms;
        if (!k_text.empty()) params.k = parse_rat_arg(k_text, "--k");
        if (!r_text.empty()) params.r = parse_rat_arg(r_text, "--r");
        if (!exponent_text.empty())
            params.exponent = parse_rat_arg(exponent_text, "--exponent");
        return cmd_verify(name, params, numeric,
                          format.empty() ? "json" : format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
