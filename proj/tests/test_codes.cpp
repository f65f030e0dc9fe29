#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "rankrange/codes.hpp"
#include "rankrange/constructions.hpp"

using namespace rankrange;

TEST_CASE("weight enumerator of a fixed line") {
    Fp f3(3);
    // S = E11 + span{E12}: differences are multiples of E12
    AffineSpace S(Mat::unit(1, 1, 2, 2, f3), {Mat::unit(1, 2, 2, 2, f3)});
    CodeParams params = weight_enumerator(S);
    CHECK(params.cardinality == 3);
    CHECK(params.distance_enumerator ==
          std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 2}});
    REQUIRE(params.min_distance.has_value());
    CHECK(*params.min_distance == 1);
    CHECK(min_distance(S) == 1);
}

TEST_CASE("weight enumerator equals the pairwise-difference oracle") {
    std::mt19937_64 rng(71);
    Fp f5(5);
    for (int t = 0; t < 15; ++t) {
        Mat G = rrtest::random_mat(2, 3, f5, rng);
        AffineSpace S(G, {rrtest::random_mat(2, 3, f5, rng),
                          rrtest::random_mat(2, 3, f5, rng),
                          rrtest::random_mat(2, 3, f5, rng)});
        CodeParams params = weight_enumerator(S);
        // rk(A - B) over ordered codeword pairs, divided by |S|: each
        // direction element arises from exactly |S| pairs
        auto oracle = rrtest::pairwise_distance_histogram(S, 10'000);
        CHECK(params.distance_enumerator == oracle);
        CHECK(params.cardinality == S.size_or_throw(10'000));
    }
}

TEST_CASE("min distance of the constructed families") {
    Fp f5(5);
    // range family directions include rank-1 matrices
    CHECK(min_distance(construct_range(3, 4, 1, 2, f5)) == 1);
    CHECK(min_distance(construct_echelon_constant(3, 4, 2, f5)) == 1);
    // the offset does not change distances
    AffineSpace S = construct_range(2, 3, 1, 2, f5);
    AffineSpace shifted(S.offset() + Mat::unit(2, 3, 2, 3, f5), S.basis());
    CHECK(weight_enumerator(S).distance_enumerator ==
          weight_enumerator(shifted).distance_enumerator);
}

TEST_CASE("degenerate code") {
    Fp f5(5);
    AffineSpace pt(Mat::identity(2, f5), {});
    CodeParams params = weight_enumerator(pt);
    CHECK(params.cardinality == 1);
    CHECK_FALSE(params.min_distance.has_value());
    CHECK_THROWS_AS(min_distance(pt), DegenerateCode);
}

TEST_CASE("singleton bound") {
    Fp f5(5);
    // always satisfied by genuine spaces
    CHECK(singleton_check(construct_range(3, 4, 1, 2, f5)));
    CHECK(singleton_check(construct_echelon_constant(3, 4, 2, f5)));
    CHECK(singleton_check(construct_echelon_range(3, 4, 1, 2, f5)));
    CHECK(singleton_check(construct_counterexample_f3()));
    // equality case: the full 2x2 matrix space has d = 1 and dim 4 = 2*2
    std::vector<Mat> full;
    for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = 1; j <= 2; ++j)
            full.push_back(Mat::unit(i, j, 2, 2, f5));
    AffineSpace F(Mat::zero(2, 2, f5), std::move(full));
    CHECK(singleton_check(F));
    CHECK(F.dim() == std::max<std::size_t>(2, 2) * (2 - 1 + 1));
}

TEST_CASE("budget propagates") {
    Fp f5(5);
    AffineSpace big = construct_range(3, 4, 1, 2, f5);  // 5^7 elements
    CHECK_THROWS_AS(weight_enumerator(big, 1000), BudgetExceeded);
}
