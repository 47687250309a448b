#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace kron;

TEST_CASE("put then get returns the same value") {
    std::string dir = "test-cache-tmp";
    std::filesystem::remove_all(dir);
    {
        JsonlCache cache(dir, "t.jsonl");
        REQUIRE(cache.enabled());
        CHECK(!cache.get("a"));
        cache.put("a", "12345678901234567890123456789");
        CHECK(*cache.get("a") == "12345678901234567890123456789");
    }
    {
        JsonlCache cache(dir, "t.jsonl");
        CHECK(*cache.get("a") == "12345678901234567890123456789");
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("empty dir disables caching") {
    JsonlCache cache("", "t.jsonl");
    CHECK(!cache.enabled());
    cache.put("a", "1");
    CHECK(!cache.get("a"));  // all misses
}

TEST_CASE("corrupted lines are skipped") {
    std::string dir = "test-cache-corrupt-tmp";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir + "/t.jsonl");
        out << "{\"key\":\"good\",\"value\":\"7\"}\n";
        out << "this is not json\n";
        out << "{\"key\":\"alsogood\",\"value\":\"8\"}\n";
        out << "{\"missing\":\"fields\"}\n";
    }
    JsonlCache cache(dir, "t.jsonl");
    CHECK(*cache.get("good") == "7");
    CHECK(*cache.get("alsogood") == "8");
    std::filesystem::remove_all(dir);
}

TEST_CASE("coefficient cache keys are canonical") {
    PartitionTuple t = PartitionTuple::parse("4,2;2,2,2;3,2,1");
    CHECK(CoeffCache::key_of(t) == "g|m6|4,2;2,2,2;3,2,1");
}

TEST_CASE("partials round trip") {
    std::string dir = "test-cache-partials-tmp";
    std::filesystem::remove_all(dir);
    {
        PartialsCache pc(dir);
        std::vector<uint64_t> primes{101, 103};
        CHECK(!pc.get("k", 3, primes));
        pc.put("k", 3, primes, {11, 13});
        auto got = pc.get("k", 3, primes);
        REQUIRE(got);
        CHECK(*got == std::vector<uint64_t>{11, 13});
        // different prime set misses
        CHECK(!pc.get("k", 3, {101, 109}));
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("environment resolution") {
    // KRON_CACHE_DIR is pinned to "" by the test harness
    const char* env = std::getenv("KRON_CACHE_DIR");
    if (env != nullptr && std::string(env).empty()) CHECK(cache_dir_from_env().empty());
}
