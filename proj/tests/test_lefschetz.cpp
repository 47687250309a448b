#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/latin.hpp"
#include "kron/lefschetz.hpp"

using namespace kron;

TEST_CASE("lefschetz matrix from the empty tuple") {
    PartitionTuple empty = PartitionTuple::parse(";;");
    LefschetzMapMatrix m = lefschetz_matrix(empty, 3, 2);
    CHECK(m.source.dim() == 1);
    CHECK(m.target.dim() == 1);
    CHECK(m.rank == 1);  // 1 -> omega is nonzero
}

TEST_CASE("iterated steps agree with direct omega powers") {
    PartitionTuple empty = PartitionTuple::parse(";;");
    Multivector omega = build_cayley(3, 2).body;
    SequenceRange range = sequence_range(empty, 3, 2);
    REQUIRE(range.lo == 0);
    REQUIRE(range.hi == 4);
    HwvBasis prev = hwv_basis(empty, 3, 2);
    Multivector direct = Multivector::scalar(Cube(3, 2), 1);
    std::vector<Rat> coords{Rat(1)};
    for (int n = 0; n < 4; ++n) {
        HwvBasis next = hwv_basis(rho(empty, 2, n + 1), 3, 2);
        StepMatrix step = lefschetz_step(prev, next, omega);
        // push coords through the step
        std::vector<Rat> out(next.dim(), Rat(0));
        for (size_t c = 0; c < coords.size(); ++c)
            for (int r = 0; r < next.dim(); ++r) out[r] += step.columns[c][r] * coords[c];
        coords = out;
        direct = wedge(omega, direct);
        // rebuild the ambient vector from HWV coordinates and compare
        Multivector rebuilt(Cube(3, 2));
        for (int c = 0; c < next.dim(); ++c) {
            // scale: coords are rational; direct is integral, so denominators clear
            Rat x = coords[c];
            CHECK(boost::multiprecision::denominator(x) == 1);
            rebuilt += next.to_multivector(c) * boost::multiprecision::numerator(x);
        }
        CHECK(rebuilt == direct);
        prev = next;
    }
    // L^4(1) = omega^4 = +-AT_3(2) vol
    Int at = at_full_cube(3, 2).at();
    CHECK(boost::multiprecision::abs(direct.coefficient(full_cube(Cube(3, 2)))) == at);
}

TEST_CASE("check_lp holds for the empty tuple at k=2") {
    LpVerdict v = check_lp(PartitionTuple::parse(";;"), 3, 2);
    CHECK(v.holds);
    REQUIRE(v.dims.size() == 5);
    // symmetric unimodal dimension pattern
    ShapeReport rep = shape_report(v.dims);
    CHECK(rep.unimodal);
    CHECK(rep.symmetric);
}

TEST_CASE("check_lp holds for all small two-column tuples") {
    for (int m = 1; m <= 4; ++m) {
        auto parts = partitions_of(m, 2);
        for (const Partition& p1 : parts)
            for (const Partition& p2 : parts)
                for (const Partition& p3 : parts) {
                    PartitionTuple t({p1, p2, p3});
                    CHECK(check_lp(t, 3, 2).holds);
                }
    }
}

TEST_CASE("check_lp trivially holds on a one-point sequence") {
    // the slice-vector label: a = 16 leaves the single index n = 0
    std::vector<Partition> entries;
    entries.push_back(Partition(std::vector<int>(16, 1)));
    entries.push_back(Partition({4, 4, 4, 4}));
    entries.push_back(Partition({4, 4, 4, 4}));
    PartitionTuple t{std::move(entries)};
    LpVerdict v = check_lp(t, 3, 4);
    CHECK(v.range.lo == 0);
    CHECK(v.range.hi == 0);
    CHECK(v.dims == std::vector<Int>{1});
    CHECK(v.holds);
}

TEST_CASE("slice vector dies under L") {
    std::vector<Partition> entries;
    entries.push_back(Partition(std::vector<int>(16, 1)));
    entries.push_back(Partition({4, 4, 4, 4}));
    entries.push_back(Partition({4, 4, 4, 4}));
    PartitionTuple t{std::move(entries)};
    LefschetzMapMatrix m = lefschetz_matrix(t, 3, 4);
    CHECK(m.source.dim() == 1);
    CHECK(m.target.dim() == 0);
    CHECK(m.rank == 0);  // rank deficient: L(v) = 0
}

TEST_CASE("L(omega) = 0 for k = 3") {
    PartitionTuple t = PartitionTuple::parse("3;3;3");
    LefschetzMapMatrix m = lefschetz_matrix(t, 3, 3);
    CHECK(m.source.dim() == 1);
    CHECK(m.rank == 0);
}

TEST_CASE("check_hlp for the empty tuple and small tuples at k = 2") {
    HlpVerdict v = check_hlp(PartitionTuple::parse(";;"), 3, 2);
    CHECK(v.holds);
    // the top pair realizes L^4(1) = +-AT_3(2) vol != 0
    CHECK(v.pairs.front().n == 0);
    CHECK(v.pairs.front().nstar == 4);
    CHECK(v.pairs.front().isomorphism);

    CHECK(check_hlp(PartitionTuple::parse("1;1;1"), 3, 2).holds);
    CHECK(check_hlp(PartitionTuple::parse("2,1;2,1;1,1,1"), 3, 2).holds);
    CHECK_THROWS(check_hlp(PartitionTuple::parse("3;3;3"), 3, 3));  // odd k
}

TEST_CASE("lp_full") {
    LpFullVerdict v2 = check_lp_full(3, 2);
    CHECK(v2.mode == "exhaustive");
    CHECK(v2.holds);
    REQUIRE(v2.degrees.size() == 7);  // n = 0..6
    for (const auto& deg : v2.degrees) CHECK(deg.full);

    LpFullVerdict v3 = check_lp_full(3, 3);
    CHECK(v3.mode == "witness");
    CHECK(!v3.holds);
    CHECK(v3.witness.find("omega") != std::string::npos);

    LpFullVerdict v4 = check_lp_full(3, 4);
    CHECK(v4.mode == "witness");
    CHECK(!v4.holds);
    CHECK(v4.witness.find("slice") != std::string::npos);

    CHECK_THROWS_AS(check_lp_full(5, 2), BudgetError);
}

TEST_CASE("sl2 relations hold exhaustively for d = 3") {
    Sl2Report rep = sl2_check(3);
    CHECK(rep.holds);
    CHECK(rep.checked == 256);
}

TEST_CASE("sl2 relations sampled for d = 5") {
    Sl2Report rep = sl2_check(5, 40);
    CHECK(rep.holds);
    CHECK(rep.checked > 40);
}

TEST_CASE("k = 4 commutator control breaks the sl2 pattern") {
    Cube cube(3, 4);
    CubeSet T = CubeSet::parse(cube, "111,222");
    Multivector comm = sl2_commutator(3, 4, T);
    // not a rescaling of e_T: the off-diagonal terms are nonzero
    CHECK(boost::multiprecision::abs(comm.coefficient(CubeSet::parse(cube, "112,221"))) == 4);
    CHECK(boost::multiprecision::abs(comm.coefficient(CubeSet::parse(cube, "121,212"))) == 4);
    CHECK(boost::multiprecision::abs(comm.coefficient(CubeSet::parse(cube, "122,211"))) == 4);
    CHECK(comm.coefficient(T) != 0);
    CHECK(comm.num_terms() == 4);
}

TEST_CASE("primitive classes and the Lefschetz decomposition") {
    // P^0 = scalars
    auto p0 = primitive_basis(3, 0);
    REQUIRE(p0.size() == 1);

    // P^n = 0 above the middle grade 2^{d-1}
    for (int n = 5; n <= 8; ++n) CHECK(primitive_basis(3, n).empty());

    // dim Lambda^n = sum_i dim X^i P^{n-2i}
    for (int n = 0; n <= 8; ++n) {
        auto dims = lefschetz_decomposition_dims(3, n);
        Int total = 0;
        for (const Int& x : dims) total += x;
        // C(8, n)
        Int binom = 1;
        for (int i = 0; i < n; ++i) {
            binom *= 8 - i;
            binom /= i + 1;
        }
        CHECK(total == binom);
    }
}

TEST_CASE("stable injectivity of the Lefschetz map") {
    StableInjectivityReport rep =
        stable_injectivity_check(PartitionTuple::parse("1;1;1"), 2, 3);
    CHECK(rep.small_injective);
    CHECK(rep.embedded_injective);
    CHECK(rep.g_small <= rep.g_raised);
    CHECK(rep.holds);

    StableInjectivityReport rep2 =
        stable_injectivity_check(PartitionTuple::parse("2,1;2,1;1,1,1"), 2, 3);
    CHECK(rep2.holds);
}

TEST_CASE("lefschetz rank is invariant under kernel pivot shuffles") {
    // recompute the HWV kernel under a permuted elimination order and verify
    // the step rank is unchanged
    PartitionTuple t = PartitionTuple::parse("2,1;2,1;2,1");
    HwvBasis src = hwv_basis(t, 3, 2);
    HwvBasis dst = hwv_basis(rho(t, 2, 1), 3, 2);
    Multivector omega = build_cayley(3, 2).body;
    int base_rank = lefschetz_step(src, dst, omega).rank;

    // shuffled variant: rebuild the source kernel with reversed pivot order
    auto weight = hwv_weight(t, 3, 2);
    WeightSpaceBasis ambient = enumerate_weight_basis(Cube(3, 2), weight);
    std::vector<RaisingMatrix> mats;
    int rows = 0;
    for (int dir = 1; dir <= 3; ++dir) {
        mats.push_back(raising_matrix(ambient, dir, 1));
        rows += mats.back().matrix.rows;
    }
    IntMatrix stacked(rows, ambient.dim());
    int r0 = 0;
    for (const auto& rm : mats) {
        for (int r = 0; r < rm.matrix.rows; ++r)
            for (int c = 0; c < rm.matrix.cols; ++c) stacked.at(r0 + r, c) = rm.matrix.at(r, c);
        r0 += rm.matrix.rows;
    }
    std::vector<int> order(ambient.dim());
    for (int i = 0; i < ambient.dim(); ++i) order[i] = ambient.dim() - 1 - i;
    HwvBasis shuffled;
    shuffled.ambient = ambient;
    shuffled.vectors = kernel_exact(stacked, &order);
    REQUIRE(shuffled.dim() == src.dim());
    CHECK(lefschetz_step(shuffled, dst, omega).rank == base_rank);
}
