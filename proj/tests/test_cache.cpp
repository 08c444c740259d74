#include "tropmod/cache.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"

using namespace tropmod;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tropmod-test-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("cache round trip", "[cache]") {
  TempDir tmp;
  Cache cache(tmp.path.string());
  CHECK(cache.enabled());
  CHECK_FALSE(cache.load("some key"));
  cache.store("some key", nlohmann::json{{"a", 1}});
  auto hit = cache.load("some key");
  REQUIRE(hit);
  CHECK((*hit)["a"] == 1);
  // key mismatch (hash collision stand-in): a different key misses
  CHECK_FALSE(cache.load("another key"));
}

TEST_CASE("disabled cache is a no-op", "[cache]") {
  Cache cache;
  CHECK_FALSE(cache.enabled());
  cache.store("k", nlohmann::json{{"a", 1}});
  CHECK_FALSE(cache.load("k"));
}

TEST_CASE("corrupted entries trigger recompute, never silent reuse", "[cache]") {
  TempDir tmp;
  Cache cache(tmp.path.string());
  cache.store("k", nlohmann::json{{"a", 1}});
  // scribble over every cache file
  for (const auto& entry : fs::directory_iterator(tmp.path)) {
    std::ofstream out(entry.path());
    out << "{ not json";
  }
  CHECK_FALSE(cache.load("k"));
  // a version/key mismatch inside valid JSON also misses
  cache.store("k", nlohmann::json{{"a", 1}});
  for (const auto& entry : fs::directory_iterator(tmp.path)) {
    std::ofstream out(entry.path());
    out << nlohmann::json{{"key", "k"}, {"version", "0.0.0"}, {"payload", 7}}.dump();
  }
  CHECK_FALSE(cache.load("k"));
}

TEST_CASE("cached enumeration equals fresh enumeration", "[cache]") {
  TempDir tmp;
  Cache cache(tmp.path.string());
  for (int g : {1, 2, 3}) {
    auto fresh = stable_graphs(g);
    auto first = cached_stable_graphs(g, cache);   // populates
    auto second = cached_stable_graphs(g, cache);  // reads back
    REQUIRE(first.size() == fresh.size());
    REQUIRE(second.size() == fresh.size());
    for (size_t i = 0; i < fresh.size(); ++i) {
      CHECK(first[i].form == fresh[i].form);
      CHECK(second[i].form == fresh[i].form);
    }
  }
}

TEST_CASE("cached delta complex matches the fresh one", "[cache]") {
  TempDir tmp;
  Cache cache(tmp.path.string());
  DeltaComplex fresh = build_delta(2);
  DeltaComplex warm1 = build_delta(2, cache);
  DeltaComplex warm2 = build_delta(2, cache);
  for (const DeltaComplex* dc : {&warm1, &warm2}) {
    REQUIRE(dc->cells.size() == fresh.cells.size());
    for (size_t i = 0; i < fresh.cells.size(); ++i) {
      CHECK(dc->cells[i].cls.form == fresh.cells[i].cls.form);
      CHECK(dc->cells[i].dim == fresh.cells[i].dim);
      REQUIRE(dc->cells[i].facets.size() == fresh.cells[i].facets.size());
      for (size_t f = 0; f < fresh.cells[i].facets.size(); ++f)
        CHECK(dc->cells[i].facets[f].target == fresh.cells[i].facets[f].target);
    }
  }
}
