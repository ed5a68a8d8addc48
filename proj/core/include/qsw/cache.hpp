#ifndef QSW_CACHE_HPP
#define QSW_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "qsw/puiseux.hpp"

namespace qsw {

/// On-disk store for named series keyed by (name, order). One JSON file per
/// entry; writes go through a temp file and a rename so readers never see a
/// partial entry. Any unreadable or mismatched file is treated as a miss:
/// the cache is an accelerator, never a source of truth.
class SeriesCache {
  public:
    explicit SeriesCache(std::filesystem::path dir);

    std::optional<PuiseuxSeries> load(const std::string& name,
                                      long order) const;
    void store(const std::string& name, long order,
               const PuiseuxSeries& s) const;

    const std::filesystem::path& dir() const { return dir_; }

    /// QSW_CACHE_DIR if set, else ~/.cache/qsw.
    static std::filesystem::path default_dir();

  private:
    std::filesystem::path entry_path(const std::string& name,
                                     long order) const;
    std::filesystem::path dir_;
};

}  // namespace qsw

#endif
