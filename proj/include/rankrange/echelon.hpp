#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rankrange/affine.hpp"

namespace rankrange {

/// Pivot data of an all-echelon affine space: Z(S,i) is the set of columns
/// where row i is nonzero somewhere on S, P the rows with nonempty Z, and
/// j_i = min Z(S,i).
struct PivotProfile {
    std::vector<std::size_t> P;            // row indices, increasing
    std::map<std::size_t, std::size_t> j;  // row -> minimal pivot column
    std::map<std::size_t, std::set<std::size_t>> Z;
};

/// Computed structurally from offset and basis supports: entry (i,j) is an
/// affine functional on S, nonzero somewhere iff it is not identically zero.
PivotProfile pivot_profile(const AffineSpace& S);

/// A member of S with nonzero entries at every (i, j_i), i in P, found by
/// the inductive lambda-search. Requires every element of S in row echelon
/// form and |K| >= |P| + 1.
Mat find_full_pivot_matrix(const AffineSpace& S);

/// True iff every element of S is in row echelon form (exhaustive scan).
bool all_echelon(const AffineSpace& S,
                 std::uint64_t budget = kDefaultElementBudget);

}  // namespace rankrange
