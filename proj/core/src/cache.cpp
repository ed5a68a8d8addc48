#include "qsw/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>

#include "qsw/series_json.hpp"

namespace qsw {
namespace {

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c == '/')
            out += '_';
        else if (c == ':')
            out += '-';
        else
            out += c;
    }
    return out;
}

}  // namespace

SeriesCache::SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path SeriesCache::entry_path(const std::string& name,
                                              long order) const {
    return dir_ / (sanitize(name) + "-" + std::to_string(order) + ".json");
}

std::optional<PuiseuxSeries> SeriesCache::load(const std::string& name,
                                               long order) const {
    std::ifstream in(entry_path(name, order));
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    try {
        if (j.at("name").get<std::string>() != name ||
            j.at("order").get<long>() != order)
            return std::nullopt;
        return series_from_json(j.at("series"));
    } catch (const Error&) {
        return std::nullopt;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void SeriesCache::store(const std::string& name, long order,
                        const PuiseuxSeries& s) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;  // best effort: a failed store is only a lost speedup

    static std::atomic<unsigned> counter{0};
    std::filesystem::path tmp =
        dir_ / ("tmp-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter.fetch_add(1)) + ".json");
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << nlohmann::json{{"name", name},
                              {"order", order},
                              {"series", series_to_json(s)}}
                   .dump();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, entry_path(name, order), ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

std::filesystem::path SeriesCache::default_dir() {
    if (const char* env = std::getenv("QSW_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "qsw";
    return std::filesystem::temp_directory_path() / "qsw-cache";
}

}  // namespace qsw
