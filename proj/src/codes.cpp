#include "rankrange/codes.hpp"

#include <algorithm>

#include "rankrange/errors.hpp"

namespace rankrange {

CodeParams weight_enumerator(const AffineSpace& S, std::uint64_t budget) {
    // Profile the direction space: offset dropped.
    AffineSpace direction(Mat::zero(S.mat_rows(), S.mat_cols(), S.field()),
                          S.basis(), S.ambient());
    RankProfile prof = direction.rank_profile(budget);
    CodeParams params;
    params.cardinality = prof.total;
    params.distance_enumerator = prof.histogram;
    for (const auto& [rk, cnt] : prof.histogram)
        if (rk > 0) {
            params.min_distance = rk;
            break;
        }
    return params;
}

std::size_t min_distance(const AffineSpace& S, std::uint64_t budget) {
    if (S.dim() == 0)
        throw DegenerateCode("single-element code has no minimum distance");
    return *weight_enumerator(S, budget).min_distance;
}

bool singleton_check(const AffineSpace& S, std::uint64_t budget) {
    std::size_t d = min_distance(S, budget);
    std::size_t mmax = std::max(S.mat_rows(), S.mat_cols());
    std::size_t mmin = std::min(S.mat_rows(), S.mat_cols());
    // Compare exponents: q^dim <= q^{mmax (mmin - d + 1)}.
    return S.dim() <= mmax * (mmin - d + 1);
}

}  // namespace rankrange
