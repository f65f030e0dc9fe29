#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rankrange/field.hpp"

namespace rankrange {

/// Dense m x n matrix over a prime field. Row/column indices are 1-based at
/// every public interface; storage is row-major.
class Mat {
  public:
    Mat(std::size_t rows, std::size_t cols, Fp field);

    static Mat zero(std::size_t rows, std::size_t cols, Fp field);
    static Mat identity(std::size_t n, Fp field);
    /// E_{i,j}: single 1 at (i, j).
    static Mat unit(std::size_t i, std::size_t j, std::size_t rows,
                    std::size_t cols, Fp field);
    static Mat diag(const std::vector<std::uint32_t>& d, Fp field);
    /// J = [[0, 1], [-1, 0]].
    static Mat j2(Fp field);
    /// Block diagonal with n/2 copies of J; n must be even.
    static Mat jbar(std::size_t n, Fp field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Fp& field() const { return field_; }

    std::uint32_t at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, std::uint32_t v);

    Mat transpose() const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(std::uint32_t c) const;

    std::size_t rank() const;
    Elem det() const;
    /// Inverse of a square matrix, or nullopt if singular.
    std::optional<Mat> inverse() const;

    /// Notation: A^{(j_1..j_s)}_{(i_1..i_k)}, indices 1-based and strictly
    /// increasing.
    Mat submatrix(const std::vector<std::size_t>& row_idx,
                  const std::vector<std::size_t>& col_idx) const;

    bool is_zero() const;
    /// Row echelon: zero rows at the bottom, leading-entry columns strictly
    /// increasing down the nonzero rows. Pivots need not be 1.
    bool is_row_echelon() const;
    /// Alternating: square, A^t = -A and zero diagonal.
    bool is_skew() const;

    /// Row-major vectorization, length rows*cols.
    std::vector<std::uint32_t> vectorize() const;
    static Mat from_vector(const std::vector<std::uint32_t>& v,
                           std::size_t rows, std::size_t cols, Fp field);

    friend bool operator==(const Mat&, const Mat&) = default;

  private:
    std::size_t rows_, cols_;
    Fp field_;
    std::vector<std::uint32_t> data_;

    std::uint32_t& cell(std::size_t i0, std::size_t j0) {
        return data_[i0 * cols_ + j0];
    }
    std::uint32_t cell(std::size_t i0, std::size_t j0) const {
        return data_[i0 * cols_ + j0];
    }
};

/// det [A B; C D] through the Schur complement, using whichever of A, D is
/// invertible (A preferred). Throws SchurNotApplicable when both are
/// singular.
Elem schur_det(const Mat& A, const Mat& B, const Mat& C, const Mat& D);

/// The assembled block matrix [A B; C D].
Mat assemble_block(const Mat& A, const Mat& B, const Mat& C, const Mat& D);

}  // namespace rankrange
