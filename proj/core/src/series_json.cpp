#include "qsw/series_json.hpp"

#include <utility>
#include <vector>

#include "qsw/rat.hpp"

namespace qsw {

nlohmann::json series_to_json(const PuiseuxSeries& s) {
    nlohmann::json j;
    j["ram"] = s.ram();
    j["lead"] = s.lead_index();
    nlohmann::json arr = nlohmann::json::array();
    for (const Rat& c : s.coeffs()) arr.push_back(rat_to_string(c));
    j["coeffs"] = std::move(arr);
    if (s.exact()) j["exact"] = true;
    return j;
}

PuiseuxSeries series_from_json(const nlohmann::json& j) {
    try {
        long ram = j.at("ram").get<long>();
        long lead = j.at("lead").get<long>();
        if (ram < 1) throw JsonError("ram must be positive");
        const nlohmann::json& arr = j.at("coeffs");
        if (!arr.is_array()) throw JsonError("coeffs must be an array");
        std::vector<Rat> coeffs;
        coeffs.reserve(arr.size());
        for (const nlohmann::json& item : arr) {
            if (!item.is_string())
                throw JsonError("coefficients must be strings");
            std::optional<Rat> r = rat_from_string(item.get<std::string>());
            if (!r) throw JsonError("bad rational: " + item.get<std::string>());
            coeffs.push_back(std::move(*r));
        }
        bool exact = j.value("exact", false);
        return PuiseuxSeries::make(ram, lead, std::move(coeffs), exact);
    } catch (const nlohmann::json::exception& e) {
        throw JsonError(std::string("malformed series json: ") + e.what());
    }
}

nlohmann::json log_series_to_json(const LogSeries& s) {
    return {{"log_part", series_to_json(s.log_part)},
            {"pure_part", series_to_json(s.pure_part)}};
}

LogSeries log_series_from_json(const nlohmann::json& j) {
    try {
        return LogSeries{series_from_json(j.at("log_part")),
                         series_from_json(j.at("pure_part"))};
    } catch (const nlohmann::json::exception& e) {
        throw JsonError(std::string("malformed log series json: ") + e.what());
    }
}

std::string dump_series(const PuiseuxSeries& s) {
    return series_to_json(s).dump();
}

PuiseuxSeries parse_series(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw JsonError("unparseable json");
    return series_from_json(j);
}

}  // namespace qsw
