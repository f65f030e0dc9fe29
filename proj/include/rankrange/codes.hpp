#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "rankrange/affine.hpp"

namespace rankrange {

/// Rank-metric view of an affine space S = G + V: distances rk(A - B)
/// range over the direction V, so the distance enumerator is the rank
/// histogram of V.
struct CodeParams {
    std::uint64_t cardinality = 0;
    std::optional<std::size_t> min_distance;  // empty for the dim-0 code
    std::map<std::size_t, std::uint64_t> distance_enumerator;
};

CodeParams weight_enumerator(const AffineSpace& S,
                             std::uint64_t budget = kDefaultElementBudget);

/// Least nonzero rank in the direction space. Throws DegenerateCode when
/// dim(S) = 0.
std::size_t min_distance(const AffineSpace& S,
                         std::uint64_t budget = kDefaultElementBudget);

/// Rank-metric Singleton bound: q^dim <= q^{max(m,n)(min(m,n)-d+1)}.
bool singleton_check(const AffineSpace& S,
                     std::uint64_t budget = kDefaultElementBudget);

}  // namespace rankrange
