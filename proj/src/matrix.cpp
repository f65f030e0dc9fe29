#include "rankrange/matrix.hpp"

#include <string>

namespace rankrange {

Mat::Mat(std::size_t rows, std::size_t cols, Fp field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix must be nonempty");
}

Mat Mat::zero(std::size_t rows, std::size_t cols, Fp field) {
    return Mat(rows, cols, field);
}

Mat Mat::identity(std::size_t n, Fp field) {
    Mat m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.cell(i, i) = 1;
    return m;
}

Mat Mat::unit(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols,
              Fp field) {
    Mat m(rows, cols, field);
    m.set(i, j, 1);
    return m;
}

Mat Mat::diag(const std::vector<std::uint32_t>& d, Fp field) {
    Mat m(d.size(), d.size(), field);
    for (std::size_t i = 0; i < d.size(); ++i)
        m.cell(i, i) = d[i] % field.modulus();
    return m;
}

Mat Mat::j2(Fp field) {
    Mat m(2, 2, field);
    m.cell(0, 1) = 1;
    m.cell(1, 0) = field.neg(1);
    return m;
}

Mat Mat::jbar(std::size_t n, Fp field) {
    if (n == 0 || n % 2 != 0)
        throw ShapeError("jbar needs a positive even size");
    Mat m(n, n, field);
    for (std::size_t b = 0; b < n; b += 2) {
        m.cell(b, b + 1) = 1;
        m.cell(b + 1, b) = field.neg(1);
    }
    return m;
}

std::uint32_t Mat::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw IndexError("entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") out of range");
    return cell(i - 1, j - 1);
}

void Mat::set(std::size_t i, std::size_t j, std::uint32_t v) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw IndexError("entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") out of range");
    cell(i - 1, j - 1) = v % field_.modulus();
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.cell(j, i) = cell(i, j);
    return t;
}

Mat Mat::operator+(const Mat& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("addition across fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("shape mismatch in addition");
    Mat r(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] = field_.add(data_[k], o.data_[k]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("subtraction across fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("shape mismatch in subtraction");
    Mat r(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] = field_.sub(data_[k], o.data_[k]);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("product across fields");
    if (cols_ != o.rows_) throw ShapeError("shape mismatch in product");
    Mat r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t a = cell(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.cell(i, j) = field_.add(r.cell(i, j),
                                          field_.mul(a, o.cell(k, j)));
        }
    return r;
}

Mat Mat::scaled(std::uint32_t c) const {
    Mat r(rows_, cols_, field_);
    c %= field_.modulus();
    for (std::size_t k = 0; k < data_.size(); ++k)
        r.data_[k] = field_.mul(data_[k], c);
    return r;
}

namespace {

// Forward elimination with first-nonzero pivoting. Returns the pivot count;
// when det_out is nonnull accumulates the determinant of a square input.
std::size_t eliminate(Mat work, const Fp& f, std::uint32_t* det_out) {
    std::size_t m = work.rows(), n = work.cols();
    std::uint32_t det = 1;
    std::size_t row = 1;
    for (std::size_t col = 1; col <= n && row <= m; ++col) {
        std::size_t piv = 0;
        for (std::size_t i = row; i <= m; ++i)
            if (work.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == 0) continue;
        if (piv != row) {
            for (std::size_t j = col; j <= n; ++j) {
                std::uint32_t t = work.at(row, j);
                work.set(row, j, work.at(piv, j));
                work.set(piv, j, t);
            }
            det = f.neg(det);
        }
        std::uint32_t p = work.at(row, col);
        det = f.mul(det, p);
        std::uint32_t pinv = f.inv(p);
        for (std::size_t i = row + 1; i <= m; ++i) {
            std::uint32_t factor = f.mul(work.at(i, col), pinv);
            if (factor == 0) continue;
            for (std::size_t j = col; j <= n; ++j)
                work.set(i, j,
                         f.sub(work.at(i, j), f.mul(factor, work.at(row, j))));
        }
        ++row;
    }
    std::size_t rank = row - 1;
    if (det_out) *det_out = (rank == m && m == n) ? det : 0;
    return rank;
}

}  // namespace

std::size_t Mat::rank() const { return eliminate(*this, field_, nullptr); }

Elem Mat::det() const {
    if (rows_ != cols_) throw ShapeError("determinant of non-square matrix");
    std::uint32_t d = 0;
    eliminate(*this, field_, &d);
    return {d, field_};
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse of non-square matrix");
    std::size_t n = rows_;
    // Gauss-Jordan on [A | I].
    Mat aug(n, 2 * n, field_);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) aug.set(i, j, at(i, j));
        aug.set(i, n + i, 1);
    }
    for (std::size_t col = 1; col <= n; ++col) {
        std::size_t piv = 0;
        for (std::size_t i = col; i <= n; ++i)
            if (aug.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == 0) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 1; j <= 2 * n; ++j) {
                std::uint32_t t = aug.at(col, j);
                aug.set(col, j, aug.at(piv, j));
                aug.set(piv, j, t);
            }
        std::uint32_t pinv = field_.inv(aug.at(col, col));
        for (std::size_t j = 1; j <= 2 * n; ++j)
            aug.set(col, j, field_.mul(aug.at(col, j), pinv));
        for (std::size_t i = 1; i <= n; ++i) {
            if (i == col) continue;
            std::uint32_t factor = aug.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = 1; j <= 2 * n; ++j)
                aug.set(i, j, field_.sub(aug.at(i, j),
                                         field_.mul(factor, aug.at(col, j))));
        }
    }
    Mat inv(n, n, field_);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) inv.set(i, j, aug.at(i, n + j));
    return inv;
}

Mat Mat::submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    auto check = [](const std::vector<std::size_t>& idx, std::size_t limit) {
        if (idx.empty()) throw IndexError("empty index list");
        std::size_t prev = 0;
        for (std::size_t v : idx) {
            if (v <= prev) throw IndexError("indices not strictly increasing");
            if (v > limit) throw IndexError("index out of range");
            prev = v;
        }
    };
    check(row_idx, rows_);
    check(col_idx, cols_);
    Mat sub(row_idx.size(), col_idx.size(), field_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            sub.cell(i, j) = at(row_idx[i], col_idx[j]);
    return sub;
}

bool Mat::is_zero() const {
    for (std::uint32_t v : data_)
        if (v != 0) return false;
    return true;
}

bool Mat::is_row_echelon() const {
    std::size_t last_lead = 0;  // 0 = before any column
    bool seen_zero_row = false;
    for (std::size_t i = 1; i <= rows_; ++i) {
        std::size_t lead = 0;
        for (std::size_t j = 1; j <= cols_; ++j)
            if (at(i, j) != 0) {
                lead = j;
                break;
            }
        if (lead == 0) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (lead <= last_lead) return false;
        last_lead = lead;
    }
    return true;
}

bool Mat::is_skew() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 1; i <= rows_; ++i) {
        if (at(i, i) != 0) return false;
        for (std::size_t j = i + 1; j <= cols_; ++j)
            if (at(i, j) != field_.neg(at(j, i))) return false;
    }
    return true;
}

std::vector<std::uint32_t> Mat::vectorize() const { return data_; }

Mat Mat::from_vector(const std::vector<std::uint32_t>& v, std::size_t rows,
                     std::size_t cols, Fp field) {
    if (v.size() != rows * cols)
        throw ShapeError("vector length does not match shape");
    Mat m(rows, cols, field);
    for (std::size_t k = 0; k < v.size(); ++k)
        m.data_[k] = v[k] % field.modulus();
    return m;
}

Mat assemble_block(const Mat& A, const Mat& B, const Mat& C, const Mat& D) {
    if (A.rows() != B.rows() || C.rows() != D.rows() ||
        A.cols() != C.cols() || B.cols() != D.cols())
        throw ShapeError("incompatible block shapes");
    const Fp& f = A.field();
    Mat M(A.rows() + C.rows(), A.cols() + B.cols(), f);
    for (std::size_t i = 1; i <= A.rows(); ++i) {
        for (std::size_t j = 1; j <= A.cols(); ++j) M.set(i, j, A.at(i, j));
        for (std::size_t j = 1; j <= B.cols(); ++j)
            M.set(i, A.cols() + j, B.at(i, j));
    }
    for (std::size_t i = 1; i <= C.rows(); ++i) {
        for (std::size_t j = 1; j <= C.cols(); ++j)
            M.set(A.rows() + i, j, C.at(i, j));
        for (std::size_t j = 1; j <= D.cols(); ++j)
            M.set(A.rows() + i, A.cols() + j, D.at(i, j));
    }
    return M;
}

Elem schur_det(const Mat& A, const Mat& B, const Mat& C, const Mat& D) {
    if (A.rows() != A.cols() || D.rows() != D.cols())
        throw ShapeError("diagonal blocks must be square");
    if (B.rows() != A.rows() || B.cols() != D.cols() ||
        C.rows() != D.rows() || C.cols() != A.cols())
        throw ShapeError("incompatible block shapes");
    const Fp& f = A.field();
    if (auto ainv = A.inverse()) {
        Mat schur = D - C * (*ainv) * B;
        return {f.mul(A.det().value, schur.det().value), f};
    }
    if (auto dinv = D.inverse()) {
        Mat schur = A - B * (*dinv) * C;
        return {f.mul(D.det().value, schur.det().value), f};
    }
    throw SchurNotApplicable("both diagonal blocks are singular");
}

}  // namespace rankrange
