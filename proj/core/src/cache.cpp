#include "twistlab/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab::cache {

namespace {

bool parse_i64(const std::string& field, i64* out) {
    if (field.empty()) return false;
    size_t i = field[0] == '-' ? 1 : 0;
    if (i == field.size()) return false;
    for (size_t k = i; k < field.size(); ++k)
        if (field[k] < '0' || field[k] > '9') return false;
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(field.c_str(), &end, 10);
    if (errno != 0 || end != field.c_str() + field.size()) return false;
    *out = v;
    return true;
}

}  // namespace

CacheDir CacheDir::resolve(const std::string& cli_flag) {
    if (!cli_flag.empty()) return CacheDir(cli_flag);
    if (const char* env = std::getenv("TWISTLAB_CACHE"); env && *env) return CacheDir(env);
    return CacheDir(".twistlab-cache");
}

bool CacheDir::load_table(const std::string& name, const std::string& header,
                          std::vector<std::vector<i64>>* rows) const {
    if (!enabled_) return false;
    auto p = file(name);
    std::ifstream in(p);
    if (!in) return false;

    const size_t ncols = static_cast<size_t>(std::count(header.begin(), header.end(), ',')) + 1;
    std::string line;
    long lineno = 0;
    if (!std::getline(in, line)) throw CacheError(p.string(), 1, "missing header");
    ++lineno;
    if (line != header)
        throw CacheError(p.string(), lineno, "bad header, expected '" + header + "'");

    rows->clear();
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<i64> row;
        size_t start = 0;
        for (;;) {
            size_t comma = line.find(',', start);
            std::string field = line.substr(start, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - start);
            i64 v;
            if (!parse_i64(field, &v))
                throw CacheError(p.string(), lineno, "malformed integer field '" + field + "'");
            row.push_back(v);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (row.size() != ncols)
            throw CacheError(p.string(), lineno, "expected " + std::to_string(ncols) +
                                                     " columns, got " + std::to_string(row.size()));
        rows->push_back(std::move(row));
    }
    return true;
}

void CacheDir::store_table(const std::string& name, const std::string& header,
                           const std::vector<std::vector<i64>>& rows) const {
    if (!enabled_) return;
    std::filesystem::create_directories(dir_);
    auto target = file(name);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << header << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << row[i];
            }
            out << "\n";
        }
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace twistlab::cache
