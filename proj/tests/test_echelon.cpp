#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "rankrange/constructions.hpp"
#include "rankrange/echelon.hpp"

using namespace rankrange;

TEST_CASE("pivot profile of the constructed echelon families") {
    Fp f5(5);
    AffineSpace S = construct_echelon_constant(3, 4, 2, f5);
    PivotProfile prof = pivot_profile(S);
    CHECK(prof.P == std::vector<std::size_t>{1, 2});
    CHECK(prof.j.at(1) == 1);
    CHECK(prof.j.at(2) == 2);
    CHECK(prof.Z.at(1) == std::set<std::size_t>{1, 2, 3, 4});
    CHECK(prof.Z.at(2) == std::set<std::size_t>{2, 3, 4});

    AffineSpace R = construct_echelon_range(3, 4, 1, 2, f5);
    PivotProfile rp = pivot_profile(R);
    CHECK(rp.P == std::vector<std::size_t>{1, 2});
    CHECK(rp.j.at(1) == 1);
    CHECK(rp.j.at(2) == 2);

    // dim-0 space: profile of the single offset matrix
    AffineSpace pt(Mat::unit(2, 3, 2, 4, f5), {});
    PivotProfile pp = pivot_profile(pt);
    CHECK(pp.P == std::vector<std::size_t>{2});
    CHECK(pp.j.at(2) == 3);
}

TEST_CASE("all_echelon") {
    Fp f5(5);
    CHECK(all_echelon(construct_echelon_constant(3, 4, 2, f5)));
    CHECK(all_echelon(construct_echelon_range(3, 4, 1, 2, f5)));
    // a space with a non-echelon member: zero row above a nonzero row
    AffineSpace bad(Mat::zero(2, 2, f5), {Mat::unit(2, 1, 2, 2, f5)});
    CHECK_FALSE(all_echelon(bad));
    // budget propagates
    AffineSpace big = construct_echelon_constant(4, 6, 4, f5);
    CHECK_THROWS_AS(all_echelon(big, 100), BudgetExceeded);
}

TEST_CASE("full pivot matrix on the constructed families") {
    Fp f5(5);
    for (const AffineSpace& S : {construct_echelon_constant(3, 4, 2, f5),
                                 construct_echelon_range(3, 4, 1, 2, f5),
                                 construct_echelon_range(4, 5, 2, 4, f5)}) {
        PivotProfile prof = pivot_profile(S);
        Mat A = find_full_pivot_matrix(S);
        CHECK(S.contains(A));
        for (std::size_t i : prof.P) CHECK(A.at(i, prof.j.at(i)) != 0);
        CHECK(A.is_row_echelon());
        CHECK(A.rank() == prof.P.size());
    }
}

TEST_CASE("full pivot matrix on random all-echelon spaces") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 60; ++t) {
        AffineSpace S = rrtest::random_all_echelon_space(rng);
        REQUIRE(all_echelon(S));
        PivotProfile prof = pivot_profile(S);
        Mat A = find_full_pivot_matrix(S);
        CHECK(S.contains(A));
        for (std::size_t i : prof.P) CHECK(A.at(i, prof.j.at(i)) != 0);
        // for an all-echelon space the pivot rows are exactly 1..max rank
        RankProfile rp = S.rank_profile();
        std::vector<std::size_t> expect;
        for (std::size_t i = 1; i <= rp.max_rank; ++i) expect.push_back(i);
        CHECK(prof.P == expect);
    }
}

TEST_CASE("full pivot matrix edge cases") {
    Fp f5(5);
    // zero space: no pivot rows, offset returned as-is
    AffineSpace z(Mat::zero(2, 2, f5), {});
    CHECK(find_full_pivot_matrix(z) == Mat::zero(2, 2, f5));
    // the lambda search needs |K| >= |P| + 1
    Fp f2(2);
    AffineSpace tight = construct_echelon_constant(2, 2, 2, f2);
    CHECK_THROWS_AS(find_full_pivot_matrix(tight), FieldTooSmall);
}
