#pragma once

#include <cstdint>
#include <vector>

#include "rankrange/matrix.hpp"
#include "rankrange/vecspace.hpp"

namespace rankrange {

/// Quadratic form Q(x) = x^t B x with symmetric coefficient matrix B.
/// Requires characteristic != 2 (cross terms are split evenly).
class QuadraticForm {
  public:
    QuadraticForm(Mat coeffs);

    std::size_t dimension() const { return coeffs_.rows(); }
    const Mat& coeffs() const { return coeffs_; }
    bool nondegenerate() const { return nondegenerate_; }

    std::uint32_t evaluate(const Vec& x) const;
    /// Polar form B(u, w) = u^t B w; Q(u + w) = Q(u) + Q(w) + 2 B(u, w).
    std::uint32_t bilinear(const Vec& u, const Vec& w) const;

  private:
    Mat coeffs_;
    bool nondegenerate_;
};

/// The hyperbolic form sum_{i<=r} x_i x_{r+i} on K^{2r}.
QuadraticForm hyperbolic_form(std::size_t r, const Fp& f);

/// The form sum_l (1/d_l) (b_{2l-1,i} b_{2l,j} - b_{2l-1,j} b_{2l,i}) on
/// K^{2r}, r = 2 len(d), with variables ordered
/// (b_{1,i},...,b_{r,i}, b_{1,j},...,b_{r,j}).
QuadraticForm skew_block_form(const std::vector<std::uint32_t>& d,
                              const Fp& f);

/// True iff Q vanishes identically on span(direction). Decided by Q = 0 on
/// basis vectors plus vanishing polar form on basis pairs.
bool is_totally_isotropic(const std::vector<Vec>& direction,
                          const QuadraticForm& q, const Fp& f);

/// Congruence normal form of a skew matrix M:
/// H^t M H = diag(d_1, d_1, ..., d_{r/2}, d_{r/2}, 1, ..., 1) (Jbar_r + 0).
struct SkewNormalForm {
    Mat H;                        // invertible
    std::vector<std::uint32_t> d; // nonzero, length r/2
    std::size_t r;                // rank of M, even

    /// The target block matrix diag(d)-scaled Jbar_r padded with zeros.
    Mat normal_matrix(std::size_t n, const Fp& f) const;
};

/// Symplectic Gram-Schmidt; requires is_skew(M) and characteristic != 2.
SkewNormalForm skew_normal_form(const Mat& M);

}  // namespace rankrange
