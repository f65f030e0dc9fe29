#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "rankrange/affine.hpp"

namespace rankrange {

using BigInt = boost::multiprecision::cpp_int;

/// Number of d-dimensional subspaces of F_q^N.
BigInt gaussian_binomial(std::size_t N, std::size_t d, std::uint64_t q);

/// Streams every d-dimensional subspace of F_q^N exactly once as its unique
/// RREF basis, ordered by pivot-column set, then lexicographically by free
/// entries.
class SubspaceEnumerator {
  public:
    SubspaceEnumerator(std::size_t N, std::size_t d, Fp f);

    std::optional<std::vector<Vec>> next();

  private:
    std::size_t N_, d_;
    Fp f_;
    bool done_;
    std::vector<std::size_t> pivots_;          // ascending, 0-based
    std::vector<std::pair<std::size_t, std::size_t>> free_cells_;
    std::vector<std::uint32_t> free_vals_;

    void compute_free_cells();
    bool advance();
    std::vector<Vec> current() const;
};

struct SearchSpec {
    std::size_t m, n;  // matrix shape; skew ambient requires m == n
    std::size_t s, r;  // exact min/max rank targets
    Fp field;
    Ambient ambient = Ambient::Full;
    bool echelon_required = false;
    std::size_t target_dim = 0;
    bool exhaustive = true;
    std::uint64_t samples = 0;  // random mode
    std::uint64_t seed = 0;
};

struct SearchCost {
    std::uint64_t candidates = 0;
    std::uint64_t elements_scanned = 0;
};

struct SearchOutcome {
    std::optional<AffineSpace> witness;
    SearchCost cost;
};

/// Ambient coordinate dimension: mn for full spaces, n(n-1)/2 for the skew
/// strict-upper-triangle chart.
std::size_t ambient_dim(const SearchSpec& spec);

/// Matrix for an ambient chart vector (skew entries mirrored with sign).
Mat chart_to_mat(const Vec& v, const SearchSpec& spec);

/// Exhaustive mode visits every direction space and every canonical coset
/// offset; random mode draws seeded samples and its negative answers are
/// evidence only. A candidate is abandoned at the first element whose rank
/// leaves [s, r].
SearchOutcome exists_affine_of_dim(const SearchSpec& spec,
                                   std::uint64_t budget = 100'000'000);

/// Probes target_dim downward from start_dim (default: ambient dimension)
/// until a witness appears; returns its dimension.
struct MaxDimResult {
    std::size_t dim;
    AffineSpace witness;
    SearchCost cost;
};

std::optional<MaxDimResult> max_affine_dim(
    SearchSpec spec, std::optional<std::size_t> start_dim = std::nullopt,
    std::uint64_t budget = 100'000'000);

}  // namespace rankrange
