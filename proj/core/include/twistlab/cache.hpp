#ifndef TWISTLAB_CACHE_HPP
#define TWISTLAB_CACHE_HPP

// Plain-ASCII CSV caches.  One file per table, mandatory header row
// ("p,ap" for elliptic traces, "p,a1,a2" for genus-2 data), '\n' line
// endings, no trailing blank line.  Writes go through a temp file and a
// rename, so concurrent readers see either the old or the new table.

#include <filesystem>
#include <string>
#include <vector>

#include "twistlab/numeric.hpp"

namespace twistlab::cache {

class CacheDir {
 public:
    CacheDir() = default;  // disabled: loads miss, stores are dropped
    explicit CacheDir(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {}

    // --cache-dir flag if nonempty, else $TWISTLAB_CACHE, else ./.twistlab-cache
    static CacheDir resolve(const std::string& cli_flag);

    bool enabled() const { return enabled_; }
    const std::filesystem::path& path() const { return dir_; }
    std::filesystem::path file(const std::string& name) const { return dir_ / (name + ".csv"); }

    // Returns false when the file does not exist; throws CacheError on any
    // malformed content (with the offending line number).
    bool load_table(const std::string& name, const std::string& header,
                    std::vector<std::vector<i64>>* rows) const;
    void store_table(const std::string& name, const std::string& header,
                     const std::vector<std::vector<i64>>& rows) const;

 private:
    std::filesystem::path dir_;
    bool enabled_ = false;
};

}  // namespace twistlab::cache

#endif
