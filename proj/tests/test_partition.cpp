#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/partition.hpp"

using namespace kron;

TEST_CASE("partition basics") {
    Partition p({4, 2});
    CHECK(p.size() == 6);
    CHECK(p.length() == 2);
    CHECK(p.part(1) == 4);
    CHECK(p.part(3) == 0);
    CHECK(p.conjugate() == Partition({2, 2, 1, 1}));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(Partition().size() == 0);
    CHECK_THROWS(Partition({2, 3}));
    CHECK_THROWS(Partition({1, -1}));
}

TEST_CASE("trailing zeros are trimmed") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
}

TEST_CASE("complement in rectangle") {
    // 16x4 - (4,2) = (4^14, 2), as in the unimodal-and-symmetric example
    Partition lam({4, 2});
    Partition comp = lam.complement(16, 4);
    std::vector<int> expect(14, 4);
    expect.push_back(2);
    CHECK(comp == Partition(expect));
    CHECK(comp.complement(16, 4) == lam);
    CHECK_THROWS(Partition({5}).complement(3, 4));
}

TEST_CASE("hook length dimension") {
    CHECK(Partition().dimension_sn() == 1);
    CHECK(Partition({3}).dimension_sn() == 1);
    CHECK(Partition({1, 1, 1}).dimension_sn() == 1);
    CHECK(Partition({2, 1}).dimension_sn() == 2);
    CHECK(Partition({3, 2}).dimension_sn() == 5);
    // sum of squares = m!
    Int sum = 0;
    for (const Partition& p : partitions_of(6)) sum += p.dimension_sn() * p.dimension_sn();
    CHECK(sum == factorial(6));
}

TEST_CASE("partition text form") {
    CHECK(Partition::parse("4,2") == Partition({4, 2}));
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition({3, 2, 1}).to_string() == "3,2,1");
    PartitionTuple t = PartitionTuple::parse("4,2;2,2,2;3,2,1");
    CHECK(t.d() == 3);
    CHECK(t.size() == 6);
    CHECK(t.to_string() == "4,2;2,2,2;3,2,1");
    PartitionTuple empty3 = PartitionTuple::parse(";;");
    CHECK(empty3.d() == 3);
    CHECK(empty3.size() == 0);
    CHECK_THROWS(PartitionTuple::parse("2;1,1;3"));  // unequal sizes: 2 vs 2 vs 3
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(5, 3).size() == 5);     // parts <= 3
    CHECK(partitions_of(5, 3, 2).size() == 1);  // only (3,2) fits a 2x3 box
    for (const Partition& p : partitions_of(8, 4, 4)) {
        CHECK(p.size() == 8);
        CHECK(p.part(1) <= 4);
        CHECK(p.length() <= 4);
    }
}
