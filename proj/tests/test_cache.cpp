#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "twistlab/aptables.hpp"
#include "twistlab/cache.hpp"
#include "twistlab/errors.hpp"

using namespace twistlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("twistlab-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter_++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter_ = 0;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("cache roundtrip and exact file format") {
    TempDir tmp;
    cache::CacheDir cd(tmp.path);
    cd.store_table("ap_test", "p,ap", {{5, 0}, {7, -4}, {11, 0}});
    CHECK(slurp(cd.file("ap_test")) == "p,ap\n5,0\n7,-4\n11,0\n");

    std::vector<std::vector<i64>> rows;
    REQUIRE(cd.load_table("ap_test", "p,ap", &rows));
    CHECK(rows == std::vector<std::vector<i64>>{{5, 0}, {7, -4}, {11, 0}});

    CHECK_FALSE(cd.load_table("missing", "p,ap", &rows));
}

TEST_CASE("malformed cache rows are reported with their line number") {
    TempDir tmp;
    cache::CacheDir cd(tmp.path);
    {
        std::ofstream out(cd.file("bad"));
        out << "p,a1,a2\n5,1,2\n7,x,3\n";
    }
    std::vector<std::vector<i64>> rows;
    try {
        cd.load_table("bad", "p,a1,a2", &rows);
        FAIL("expected CacheError");
    } catch (const CacheError& e) {
        CHECK(e.line() == 3);
    }

    {
        std::ofstream out(cd.file("badhdr"));
        out << "p;ap\n5,0\n";
    }
    try {
        cd.load_table("badhdr", "p,ap", &rows);
        FAIL("expected CacheError");
    } catch (const CacheError& e) {
        CHECK(e.line() == 1);
    }

    {
        std::ofstream out(cd.file("badcols"));
        out << "p,ap\n5,0,9\n";
    }
    CHECK_THROWS_AS(cd.load_table("badcols", "p,ap", &rows), CacheError);
}

TEST_CASE("disabled cache ignores stores and misses loads") {
    cache::CacheDir off;
    CHECK_FALSE(off.enabled());
    off.store_table("x", "p,ap", {{5, 1}});
    std::vector<std::vector<i64>> rows;
    CHECK_FALSE(off.load_table("x", "p,ap", &rows));
}

TEST_CASE("cache resolution order") {
    cache::CacheDir flag = cache::CacheDir::resolve("/tmp/somewhere");
    CHECK(flag.path() == fs::path("/tmp/somewhere"));
    ::setenv("TWISTLAB_CACHE", "/tmp/envcache", 1);
    cache::CacheDir env = cache::CacheDir::resolve("");
    CHECK(env.path() == fs::path("/tmp/envcache"));
    ::unsetenv("TWISTLAB_CACHE");
    cache::CacheDir def = cache::CacheDir::resolve("");
    CHECK(def.path() == fs::path(".twistlab-cache"));
}

TEST_CASE("ap tables reuse the cache byte-identically") {
    TempDir tmp;
    cache::CacheDir cd(tmp.path);
    auto rows1 = aptables::ap_range(aptables::AuxCurve::E0, 500, 2, cd);
    std::string bytes1 = slurp(cd.file("ap_e0"));
    auto rows2 = aptables::ap_range(aptables::AuxCurve::E0, 500, 1, cd);
    std::string bytes2 = slurp(cd.file("ap_e0"));
    CHECK(rows1 == rows2);
    CHECK(bytes1 == bytes2);
    // shorter request slices the same table
    auto rows3 = aptables::ap_range(aptables::AuxCurve::E0, 100, 1, cd);
    CHECK(rows3.size() < rows1.size());
    for (size_t i = 0; i < rows3.size(); ++i) CHECK(rows3[i] == rows1[i]);
}

TEST_CASE("ap sweep values match the direct character-sum oracle") {
    cache::CacheDir off;
    for (auto c : {aptables::AuxCurve::E0, aptables::AuxCurve::E1,
                   aptables::AuxCurve::E2, aptables::AuxCurve::C1}) {
        auto rows = aptables::ap_range(c, 1000, 2, off);
        for (auto& [p, ap] : rows) CHECK(ap == aptables::ap_single(c, p));
    }
}
