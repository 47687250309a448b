#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/cayley.hpp"
#include "kron/latin.hpp"

using namespace kron;

TEST_CASE("cayley form for d=3, k=2") {
    CayleyForm omega = build_cayley(3, 2);
    Cube cube(3, 2);
    REQUIRE(omega.body.num_terms() == 4);
    // the four antipodal pairs; in the sorted basis the signs alternate with
    // the parity of the lower cell
    CHECK(omega.body.coefficient(CubeSet::parse(cube, "111,222")) == 1);
    CHECK(omega.body.coefficient(CubeSet::parse(cube, "112,221")) == -1);
    CHECK(omega.body.coefficient(CubeSet::parse(cube, "121,212")) == -1);
    CHECK(omega.body.coefficient(CubeSet::parse(cube, "122,211")) == 1);

    // every term is an antipodal pair with +1 coefficient when written as
    // e_i ^ e_ibar with i in I+
    CHECK(omega.body == build_cayley_pairing(3));
    CHECK(omega.body == build_cayley_definition(3, 2));

    // weight (1 x k)^d: all marginals all-ones
    CHECK(weight_of(omega.body).all_equal(1));

    // highest weight vector: annihilated by every raising operator
    for (int dir = 1; dir <= 3; ++dir) CHECK(raising_apply(omega.body, dir, 1).is_zero());
}

TEST_CASE("cayley form vs definition for larger parameters") {
    for (auto [d, k] : {std::pair{3, 3}, {3, 4}, {5, 2}}) {
        CayleyForm fast = build_cayley(d, k);
        CHECK(fast.body == build_cayley_definition(d, k));
        CHECK(weight_of(fast.body).all_equal(1));
        for (int dir = 1; dir <= d; ++dir)
            for (int i = 1; i < k; ++i) CHECK(raising_apply(fast.body, dir, i).is_zero());
    }
    CHECK(build_cayley(3, 4).body.num_terms() == 576);
}

TEST_CASE("omega squared vanishes for odd k") {
    Multivector omega = build_cayley(3, 3).body;
    CHECK(wedge(omega, omega).is_zero());
}

TEST_CASE("contraction of omega against itself counts the pairing") {
    // omega* -| omega = 2^{d-1}, forced by [X,Y] = H on the scalar 1
    for (int d : {3, 5}) {
        Multivector omega = build_cayley(d, 2).body;
        Multivector s = interior(omega, omega);
        CHECK(s == Multivector::scalar(Cube(d, 2), Int(1) << (d - 1)));
    }
}

TEST_CASE("omega powers expand over magic sets with AT coefficients") {
    // omega^n = sum over B_{d,k}(n) of +-AT(T) e_T
    for (int n = 0; n <= 5; ++n) {
        Multivector p = omega_power(3, 2, n);
        if (n > 4) {
            CHECK(p.is_zero());
            continue;
        }
        for (const auto& [key, c] : p.terms()) {
            CubeSet T(Cube(3, 2), key);
            int mag = -1;
            REQUIRE(is_magic(T, &mag));
            CHECK(mag == n);
        }
        // term-by-term |coefficient| == |AT(T)|, including absent zero-AT terms
        for (const CubeSet& T : enumerate_magic_sets(3, 2, n)) {
            Int at = at_number(T).at();
            Int coeff = p.coefficient(T);
            CHECK(boost::multiprecision::abs(coeff) == boost::multiprecision::abs(at));
        }
    }
    // top power: +-AT_3(2) vol
    Multivector top = omega_power(3, 2, 4);
    REQUIRE(top.num_terms() == 1);
    CHECK(boost::multiprecision::abs(top.coefficient(full_cube(Cube(3, 2)))) ==
          at_full_cube(3, 2).at());
}

TEST_CASE("omega power consistency with iterated wedge") {
    Multivector omega = build_cayley(3, 2).body;
    CHECK(omega_power(3, 2, 2) == wedge(omega, omega));
    CHECK(omega_power(3, 2, 0) == Multivector::scalar(Cube(3, 2), 1));
}

TEST_CASE("embedded cayley forms") {
    // I = ([k],...,[k]) reproduces omega_{d,k} inside V_l
    Multivector w22 = embed_omega(3, 3, {{1, 2}, {1, 2}, {1, 2}});
    Multivector direct = build_cayley(3, 2).body;
    Cube small(3, 2), big(3, 3);
    for (const auto& [key, c] : direct.terms()) {
        std::vector<uint32_t> mapped;
        for (uint32_t r : key) mapped.push_back(big.rank(small.coords(r)));
        std::sort(mapped.begin(), mapped.end());
        CHECK(w22.coefficient(mapped) == c);
    }
    CHECK(w22.num_terms() == direct.num_terms());

    // marginals of every term are indicator vectors of the I_j
    Multivector w13 = embed_omega(3, 3, {{2}, {1}, {3}});
    for (const auto& [key, c] : w13.terms()) {
        Marginals m = marginals(CubeSet(big, key));
        CHECK(m.s[0] == std::vector<int>{0, 1, 0});
        CHECK(m.s[1] == std::vector<int>{1, 0, 0});
        CHECK(m.s[2] == std::vector<int>{0, 0, 1});
    }

    CHECK_THROWS(embed_omega(3, 3, {{1, 2}, {2, 1}, {1, 2}}));  // not increasing
}

TEST_CASE("pairwise disjoint supports in the stability decomposition") {
    // d=3, k=1, l=2: omega_I ^ omega_Ibar for the four I with I_1 = {1}
    Cube big(3, 2);
    std::vector<std::vector<std::vector<int>>> choices;
    for (int a : {1, 2})
        for (int b : {1, 2}) choices.push_back({{1}, {a}, {b}});
    std::vector<Multivector> prods;
    for (const auto& I : choices) {
        std::vector<std::vector<int>> Ibar;
        for (const auto& ij : I) Ibar.push_back({3 - ij[0]});
        prods.push_back(wedge(embed_omega(3, 2, I), embed_omega(3, 2, Ibar)));
    }
    for (size_t i = 0; i < prods.size(); ++i)
        for (size_t j = i + 1; j < prods.size(); ++j)
            for (const auto& [key, c] : prods[i].terms())
                CHECK(prods[j].coefficient(key) == 0);
}
