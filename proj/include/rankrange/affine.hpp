#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "rankrange/matrix.hpp"
#include "rankrange/vecspace.hpp"

namespace rankrange {

enum class Ambient { Full, Skew };

/// Exact rank histogram over all elements of an affine space.
struct RankProfile {
    std::map<std::size_t, std::uint64_t> histogram;
    std::size_t min_rank = 0;
    std::size_t max_rank = 0;
    std::uint64_t total = 0;
};

constexpr std::uint64_t kDefaultElementBudget = 10'000'000;

/// An affine subspace S = offset + span(basis) of a matrix space. Always
/// held in canonical form: the vectorized basis is in RREF and the offset
/// has zeros at every pivot coordinate, so equal point sets compare equal.
class AffineSpace {
  public:
    AffineSpace(Mat offset, std::vector<Mat> basis,
                Ambient ambient = Ambient::Full);

    std::size_t dim() const { return basis_.size(); }
    std::size_t mat_rows() const { return offset_.rows(); }
    std::size_t mat_cols() const { return offset_.cols(); }
    const Fp& field() const { return offset_.field(); }
    Ambient ambient() const { return ambient_; }
    const Mat& offset() const { return offset_; }
    const std::vector<Mat>& basis() const { return basis_; }

    bool contains(const Mat& A) const;

    /// offset + sum coeffs[i] * basis[i].
    Mat element(const std::vector<std::uint32_t>& coeffs) const;

    /// Number of elements q^dim, or nullopt on overflow past limit.
    std::uint64_t size_or_throw(std::uint64_t budget) const;

    /// Visits every element in lexicographic coefficient order; stops early
    /// when the visitor returns false. Throws BudgetExceeded when
    /// q^dim > budget.
    bool for_each_element(std::uint64_t budget,
                          const std::function<bool(const Mat&)>& visit) const;

    RankProfile rank_profile(std::uint64_t budget = kDefaultElementBudget,
                             unsigned threads = 1) const;

    /// Direction space as vectorized rows (canonical RREF basis).
    std::vector<Vec> direction_vectors() const;

    friend bool operator==(const AffineSpace&, const AffineSpace&) = default;

  private:
    Mat offset_;
    std::vector<Mat> basis_;
    Ambient ambient_;
};

/// Image of a set of direction vectors under coordinate projection; coords
/// are 1-based indices into K^h. Returns the canonical RREF basis.
Rref project(const std::vector<Vec>& direction,
             const std::vector<std::size_t>& coords, const Fp& f);

enum class LemmaCheck { Holds, HypothesesNotMet, ConclusionFails };

/// Dimension bound for a subspace V of K^h, h = 3m + sum n_j, from bounded
/// projections: three 2m-coordinate projections bounded by 2r and k block
/// projections bounded by q_j imply dim V <= sum q_j + 3r.
LemmaCheck check_projection_lemma(const std::vector<Vec>& direction,
                                  std::size_t m,
                                  const std::vector<std::size_t>& n_list,
                                  const std::vector<std::size_t>& q_list,
                                  std::size_t r, const Fp& f);

}  // namespace rankrange
