#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/charkron.hpp"
#include "kron/hwv.hpp"

#include <filesystem>

using namespace kron;

namespace {

PartitionTuple rect(int n, int k, int d) {
    std::vector<Partition> e(d, Partition(std::vector<int>(n, k)));
    return PartitionTuple(std::move(e));
}

}  // namespace

TEST_CASE("conjugacy classes") {
    auto c0 = conjugacy_classes(0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0].size == 1);

    auto c3 = conjugacy_classes(3);
    REQUIRE(c3.size() == 3);
    for (const auto& cls : c3) {
        if (cls.cycle_type == Partition({1, 1, 1})) CHECK(cls.size == 1);
        if (cls.cycle_type == Partition({2, 1})) CHECK(cls.size == 3);
        if (cls.cycle_type == Partition({3})) CHECK(cls.size == 2);
    }

    for (int m = 1; m <= 12; ++m) {
        Int total = 0;
        for (const auto& cls : conjugacy_classes(m)) total += cls.size;
        CHECK(total == factorial(m));
    }
}

TEST_CASE("murnaghan-nakayama basics") {
    // trivial representation
    for (const auto& cls : conjugacy_classes(6))
        CHECK(mn_character(Partition({6}), cls.cycle_type) == 1);
    // sign representation
    for (const auto& cls : conjugacy_classes(5)) {
        int parity = 0;
        for (int p : cls.cycle_type.parts()) parity ^= (p - 1) & 1;
        CHECK(mn_character(Partition({1, 1, 1, 1, 1}), cls.cycle_type) == (parity ? -1 : 1));
    }
    // the standard representation of S_3 at a 3-cycle
    CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
    // dimension = value at the identity class
    CHECK(mn_character(Partition({3, 2}), Partition({1, 1, 1, 1, 1})) == 5);
    CHECK(mn_character(Partition({4, 4}), Partition(std::vector<int>(8, 1))) ==
          Partition({4, 4}).dimension_sn());
    CHECK_THROWS(mn_character(Partition({2}), Partition({3})));
}

TEST_CASE("character orthogonality row by row") {
    // sum over classes |C| chi(C)^2 = m! for irreducible characters
    for (const Partition& lam : partitions_of(6)) {
        Int sum = 0;
        for (const auto& cls : conjugacy_classes(6)) {
            Int chi = mn_character(lam, cls.cycle_type);
            sum += cls.size * chi * chi;
        }
        CHECK(sum == factorial(6));
    }
}

TEST_CASE("small kronecker values") {
    CHECK(kronecker_characters(PartitionTuple::parse("1;1;1")) == 1);
    CHECK(kronecker_characters(PartitionTuple::parse("3;3;3")) == 1);
    CHECK(kronecker_characters(PartitionTuple::parse("2,2;2,2;2,2")) == 1);
    CHECK(kronecker_characters(PartitionTuple::parse("2;1,1;1,1")) == 1);
    // trivial-representation factor drops out: g((m),(m),(m)) = 1
    for (int m = 1; m <= 8; ++m) {
        PartitionTuple t = rect(1, m, 3);
        CHECK(kronecker_characters(t) == 1);
    }
    // d = 1 reduces to the delta at the trivial label
    std::vector<Partition> single{Partition({2, 1})};
    CHECK(kronecker_characters(PartitionTuple(single)) == 0);
    std::vector<Partition> row{Partition({3})};
    CHECK(kronecker_characters(PartitionTuple(row)) == 1);
}

TEST_CASE("golden rectangular prefixes") {
    // g_3(n,4) = 1,1,1,2,5 for n = 0..4
    std::vector<Int> g34;
    for (int n = 0; n <= 4; ++n) g34.push_back(kronecker_characters(rect(n, 4, 3)));
    CHECK(g34 == std::vector<Int>{1, 1, 1, 2, 5});
    // g_5(n,2) = 1,1,5,11 for n = 0..3
    std::vector<Int> g52;
    for (int n = 0; n <= 3; ++n) g52.push_back(kronecker_characters(rect(n, 2, 5)));
    CHECK(g52 == std::vector<Int>{1, 1, 5, 11});
}

TEST_CASE("permutation invariance of the tuple") {
    PartitionTuple a = PartitionTuple::parse("3,1;2,2;2,1,1");
    PartitionTuple b = PartitionTuple::parse("2,2;2,1,1;3,1");
    CHECK(kronecker_characters(a) == kronecker_characters(b));
}

TEST_CASE("exact and modular class sums agree") {
    for (const char* text : {"2,2,2;3,2,1;2,2,1,1", "4,2;2,2,2;3,2,1", "3,3,2;3,3,2;4,2,2",
                              "2,1;2,1;2,1;2,1;1,1,1"}) {
        PartitionTuple t = PartitionTuple::parse(text);
        CHECK(kronecker_characters_exact(t) == kronecker_class_sum_modular(t));
        CHECK(kronecker_characters_exact(t) == kronecker_class_sum_modular_serial(t));
    }
    // rectangular: crosses the m = 26 default threshold from both sides
    CHECK(kronecker_characters_exact(rect(6, 4, 3)) == kronecker_class_sum_modular(rect(6, 4, 3)));
}

TEST_CASE("oracle equivalence with the HWV backend") {
    // every d = 3 tuple of partitions of m <= 3 with parts <= 3
    for (int m = 0; m <= 3; ++m) {
        auto parts = partitions_of(m, 3);
        for (const Partition& p1 : parts)
            for (const Partition& p2 : parts)
                for (const Partition& p3 : parts) {
                    PartitionTuple t({p1, p2, p3});
                    CHECK(kronecker_characters(t) == kronecker_hwv(t, 3, 3));
                }
    }
}

TEST_CASE("checkpointed class sums resume to the same value") {
    std::string dir = "test-partials-tmp";
    std::filesystem::remove_all(dir);
    PartitionTuple t = rect(4, 4, 3);  // m = 16
    Int fresh = kronecker_class_sum_modular_serial(t);
    {
        PartialsCache partials(dir);
        CharkronOptions opts;
        opts.partials = &partials;
        CHECK(kronecker_class_sum_modular_serial(t, opts) == fresh);
    }
    {
        // second run consumes the checkpoint records instead of recomputing
        PartialsCache partials(dir);
        CharkronOptions opts;
        opts.partials = &partials;
        CHECK(kronecker_class_sum_modular_serial(t, opts) == fresh);
        CHECK(partials.get("modsum|" + t.to_string(), 16,
                           std::vector<uint64_t>{}) == std::nullopt);  // wrong prime set misses
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("character disk cache round trip") {
    // in-memory behaviour with a temp directory
    std::string dir = "test-charcache-tmp";
    std::filesystem::remove_all(dir);
    {
        CharCache cache(dir);
        Int v = mn_character(Partition({3, 2}), Partition({2, 2, 1}), &cache);
        CHECK(cache.misses() >= 1);
        Int again = mn_character(Partition({3, 2}), Partition({2, 2, 1}), &cache);
        CHECK(again == v);
        CHECK(cache.hits() >= 1);
    }
    {
        CharCache cache(dir);  // fresh load from disk
        CHECK(*cache.get(Partition({3, 2}), Partition({2, 2, 1})) ==
              mn_character(Partition({3, 2}), Partition({2, 2, 1})));
    }
    std::filesystem::remove_all(dir);
}
