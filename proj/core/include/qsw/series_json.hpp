#ifndef QSW_SERIES_JSON_HPP
#define QSW_SERIES_JSON_HPP

#include <string>

#include "json.hpp"
#include "qsw/errors.hpp"
#include "qsw/puiseux.hpp"

namespace qsw {

struct JsonError : Error {
    explicit JsonError(const std::string& what) : Error(what) {}
};

// Wire format: {"ram": N, "lead": a, "coeffs": ["p/q", ...]} with rationals
// as exact strings; "exact": true marks a series known at every order (a
// polynomial). Log-bearing series nest as {"log_part": ..., "pure_part": ...}.
// Round trips are bit-exact because series are kept normalized.

nlohmann::json series_to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const nlohmann::json& j);

nlohmann::json log_series_to_json(const LogSeries& s);
LogSeries log_series_from_json(const nlohmann::json& j);

std::string dump_series(const PuiseuxSeries& s);
PuiseuxSeries parse_series(const std::string& text);

}  // namespace qsw

#endif
