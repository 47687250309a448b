#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/linalg.hpp"

#include <numeric>
#include <random>

using namespace kron;

namespace {

IntMatrix random_matrix(int rows, int cols, int rank, std::mt19937_64& rng) {
    // product of random rows x rank and rank x cols factors
    IntMatrix a(rows, rank), b(rank, cols), m(rows, cols);
    for (auto* mat : {&a, &b})
        for (Int& x : mat->a) x = static_cast<long long>(rng() % 9) - 4;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            Int s = 0;
            for (int t = 0; t < rank; ++t) s += a.at(r, t) * b.at(t, c);
            m.at(r, c) = s;
        }
    return m;
}

}  // namespace

TEST_CASE("exact rank on crafted matrices") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 3 + static_cast<int>(rng() % 8);
        int cols = 3 + static_cast<int>(rng() % 8);
        int rank = static_cast<int>(rng() % std::min(rows, cols));
        IntMatrix m = random_matrix(rows, cols, rank, rng);
        CHECK(rank_exact(m) <= rank);         // product rank can only drop
        CHECK(rank_exact(m) == rank_modular(m));
    }
}

TEST_CASE("kernel is exact and primitive") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 6);
        int cols = 2 + static_cast<int>(rng() % 6);
        int rank = static_cast<int>(rng() % std::min(rows, cols));
        IntMatrix m = random_matrix(rows, cols, rank, rng);
        int r = rank_exact(m);
        auto ker = kernel_exact(m);
        CHECK(static_cast<int>(ker.size()) == cols - r);
        for (const auto& v : ker) {
            // M v = 0 exactly
            for (int row = 0; row < rows; ++row) {
                Int s = 0;
                for (int c = 0; c < cols; ++c) s += m.at(row, c) * v[c];
                CHECK(s == 0);
            }
            // primitive: gcd 1, first nonzero positive
            Int g = 0;
            for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
            if (!v.empty() && cols - r > 0) CHECK(g == 1);
        }
        // independence
        if (!ker.empty()) CHECK(rank_exact_columns(ker) == static_cast<int>(ker.size()));
    }
}

TEST_CASE("kernel rank is pivot-order independent") {
    std::mt19937_64 rng(7);
    IntMatrix m = random_matrix(6, 8, 4, rng);
    auto base = kernel_exact(m);
    std::vector<int> order(8);
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        auto shuffled = kernel_exact(m, &order);
        CHECK(shuffled.size() == base.size());
        // same span: stacking both bases does not raise the rank
        auto all = base;
        all.insert(all.end(), shuffled.begin(), shuffled.end());
        if (!base.empty()) CHECK(rank_exact_columns(all) == static_cast<int>(base.size()));
    }
}

TEST_CASE("solve handles consistent and inconsistent systems") {
    IntMatrix a(3, 2);
    // columns (1,0,1) and (0,1,1)
    a.at(0, 0) = 1;
    a.at(1, 1) = 1;
    a.at(2, 0) = 1;
    a.at(2, 1) = 1;
    std::vector<std::vector<Int>> rhs = {{2, 3, 5}, {1, 1, 3}};
    auto sols = solve_exact(a, rhs);
    REQUIRE(sols[0].has_value());
    CHECK((*sols[0])[0] == 2);
    CHECK((*sols[0])[1] == 3);
    CHECK(!sols[1].has_value());  // 1 + 1 != 3
}

TEST_CASE("rational scaling does not change column rank") {
    std::vector<std::vector<Int>> cols = {{2, 4, 6}, {3, 6, 9}, {1, 0, 0}};
    CHECK(rank_exact_columns(cols) == 2);
}
