#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/seqlab.hpp"

#include <filesystem>

using namespace kron;

TEST_CASE("rho operation") {
    CHECK(rho(Partition(), 2, 3) == Partition({2, 2, 2}));
    CHECK(rho(Partition({4, 2}), 4, 2) == Partition({4, 4, 4, 2}));
    CHECK(rho(rho(Partition({2, 1}), 3, 1), 3, -1) == Partition({2, 1}));
    CHECK_THROWS(rho(Partition({2, 1}), 3, -1));  // nothing to remove
    CHECK_THROWS(rho(Partition({5}), 4, 1));      // parts above k

    // rho_4^13 (4,2) equals the complement of (4,2) in 16 x 4
    CHECK(rho(Partition({4, 2}), 4, 13) == Partition({4, 2}).complement(16, 4));
}

TEST_CASE("sequence range endpoints") {
    SequenceRange r = sequence_range(PartitionTuple::parse(";;"), 3, 4);
    CHECK(r.lo == 0);
    CHECK(r.hi == 16);
    r = sequence_range(PartitionTuple::parse("4,2;2,2,2;3,2,1"), 3, 4);
    CHECK(r.lo == 0);
    CHECK(r.hi == 13);
    r = sequence_range(PartitionTuple::parse("3,2;2,2,1;3,1,1"), 3, 3);
    CHECK(r.lo == 0);
    CHECK(r.hi == 6);
    // a removable part k in every entry opens negative indices
    r = sequence_range(PartitionTuple::parse("2,1;2,1;2,1"), 3, 2);
    CHECK(r.lo == -1);
    CHECK(r.hi == 2);
}

TEST_CASE("k-complementarity") {
    CHECK(k_complementary(PartitionTuple::parse("4,2;2,2,2;3,2,1"), 4));
    CHECK(!k_complementary(PartitionTuple::parse("3,2;2,2,1;4,1"), 4));
    // all two-column tuples are 2-complementary
    for (int m = 1; m <= 5; ++m) {
        auto parts = partitions_of(m, 2);
        for (const Partition& p1 : parts)
            for (const Partition& p2 : parts) {
                PartitionTuple t({p1, p2, p1});
                (void)p2;
                CHECK(k_complementary(t, 2));
            }
    }
    CHECK_THROWS(k_complementary(PartitionTuple::parse("3;3;3"), 3));  // odd k
}

TEST_CASE("shape reports") {
    auto to_ints = [](std::initializer_list<long long> xs) {
        std::vector<Int> out;
        for (long long x : xs) out.push_back(x);
        return out;
    };
    ShapeReport rep = shape_report(to_ints({1, 0, 1}));
    CHECK(!rep.unimodal);
    CHECK(rep.symmetric);

    rep = shape_report(to_ints({1, 2, 3, 2, 1}));
    CHECK(rep.unimodal);
    CHECK(rep.symmetric);

    rep = shape_report(to_ints({1, 8, 54, 28, 10, 2}));
    CHECK(rep.unimodal);
    CHECK(!rep.symmetric);

    rep = shape_report(to_ints({5}));
    CHECK(rep.unimodal);
    CHECK(rep.symmetric);

    // log-concavity indices of the eventually log-concave example sequence
    rep = shape_report(
        to_ints({1, 1, 2, 6, 19, 58, 120, 179, 195, 145, 77, 30, 9, 2, 1, 1}));
    CHECK(rep.log_concave_indices ==
          std::vector<int>{4, 5, 6, 7, 8, 9, 10, 11, 12});
    CHECK(rep.unimodal);
    CHECK(!rep.symmetric);
}

TEST_CASE("eventually log-concave sequence prefix") {
    // {g(rho_4^n ((1),(1),(1)))} starts 1,1,2,6,19,58,120
    SequenceOptions opts;
    opts.backend = Backend::kCharacters;
    std::vector<Int> prefix;
    for (int n = 0; n <= 6; ++n)
        prefix.push_back(
            kronecker_coefficient(rho(PartitionTuple::parse("1;1;1"), 4, n), 3, 4, opts));
    std::vector<Int> expect{1, 1, 2, 6, 19, 58, 120};
    CHECK(prefix == expect);
}

TEST_CASE("build_sequence on the 9.1(c) label") {
    SequenceOptions opts;
    opts.backend = Backend::kCharacters;
    KroneckerSequence seq = build_sequence(PartitionTuple::parse("3,2;2,2,1;3,1,1"), 3, 3, opts);
    std::vector<Int> expect{1, 4, 7, 7, 5, 3, 1};
    CHECK(seq.values == expect);
    ShapeReport rep = shape_report(seq);
    CHECK(rep.unimodal);
    CHECK(!rep.symmetric);
}

TEST_CASE("backends agree wherever both run") {
    SequenceOptions hwv_opts, char_opts;
    hwv_opts.backend = Backend::kHwv;
    char_opts.backend = Backend::kCharacters;
    for (const char* text : {"1;1;1", "2;2;2", "2,1;2,1;2,1", "2,2;2,2;2,2", "1,1;2;2"}) {
        PartitionTuple t = PartitionTuple::parse(text);
        int k = std::max(2, t.max_part());
        KroneckerSequence a = build_sequence(t, 3, k, hwv_opts);
        KroneckerSequence b = build_sequence(t, 3, k, char_opts);
        CHECK(a.values == b.values);
    }
}

TEST_CASE("auto backend falls back to characters over the cap") {
    SequenceOptions opts;
    opts.backend = Backend::kAuto;
    opts.hwv_auto_cap = 2;  // force fallback everywhere beyond tiny spaces
    KroneckerSequence seq = build_sequence(PartitionTuple::parse("1;1;1"), 3, 2, opts);
    REQUIRE(seq.values.size() == 4);
    bool saw_chars = false;
    for (const auto& tag : seq.backends)
        if (tag == "characters") saw_chars = true;
    CHECK(saw_chars);
}

TEST_CASE("values vanish just outside the declared range") {
    PartitionTuple t = PartitionTuple::parse("2,1;2,1;2,1");
    SequenceRange r = sequence_range(t, 3, 2);
    PartitionTuple above = rho(t, 2, r.hi + 1);
    CHECK(kronecker_characters(above) == 0);
    // below the range rho is undefined (no part k to remove)
    CHECK_THROWS(rho(t, 2, r.lo - 1));
}

TEST_CASE("sequences for k = 2 are unimodal and symmetric") {
    SequenceOptions opts;
    for (int m = 0; m <= 4; ++m) {
        auto parts = partitions_of(m, 2);
        for (const Partition& p1 : parts)
            for (const Partition& p2 : parts)
                for (const Partition& p3 : parts) {
                    KroneckerSequence seq = build_sequence(PartitionTuple({p1, p2, p3}), 3, 2, opts);
                    ShapeReport rep = shape_report(seq);
                    CHECK(rep.unimodal);
                    CHECK(rep.symmetric);
                }
    }
}

TEST_CASE("bounded sweep covers each sequence base once") {
    SequenceOptions opts;
    auto entries = sweep_sequences(3, 2, 2, opts);
    // bases: m=0 (1), m=1 (1), m=2: tuples of {(2),(1,1)} minus the all-(2)
    // tuple (its b = 1 makes it an interior point of the empty sequence)
    CHECK(entries.size() == 1 + 1 + 7);
    for (const auto& e : entries) {
        CHECK(e.seq.range.lo == 0);
        CHECK(e.shape.unimodal);
        CHECK(e.shape.symmetric);  // k = 2: always symmetric
        CHECK(e.complementary);
    }
}

TEST_CASE("coefficient cache serves repeated queries") {
    std::string dir = "test-seqlab-cache-tmp";
    std::filesystem::remove_all(dir);
    {
        CoeffCache cache(dir);
        SequenceOptions opts;
        opts.coeff_cache = &cache;
        PartitionTuple t = PartitionTuple::parse("2,2;2,2;2,2");
        Int v = kronecker_coefficient(t, 3, 2, opts);
        std::string backend;
        Int again = kronecker_coefficient(t, 3, 2, opts, &backend);
        CHECK(again == v);
        CHECK(backend == "cache");
    }
    std::filesystem::remove_all(dir);
}
