#pragma once

// Shared test utilities: independent oracles (kept separate from the
// library code paths they check) and random generators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "rankrange/affine.hpp"
#include "rankrange/constructions.hpp"
#include "rankrange/matrix.hpp"

namespace rrtest {

using namespace rankrange;

inline Mat random_mat(std::size_t m, std::size_t n, const Fp& f,
                      std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
    Mat A(m, n, f);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) A.set(i, j, d(rng));
    return A;
}

inline Mat random_skew(std::size_t n, const Fp& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
    Mat A(n, n, f);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            std::uint32_t v = d(rng);
            A.set(i, j, v);
            A.set(j, i, f.neg(v));
        }
    return A;
}

inline Mat random_invertible(std::size_t n, const Fp& f,
                             std::mt19937_64& rng) {
    for (;;) {
        Mat A = random_mat(n, n, f, rng);
        if (A.det().value != 0) return A;
    }
}

// Determinant by cofactor expansion along the first row, mod p; a code
// path independent of the library's elimination.
inline std::uint32_t laplace_det_mod(
    const std::vector<std::vector<std::uint32_t>>& a, std::uint32_t p) {
    std::size_t n = a.size();
    if (n == 1) return a[0][0] % p;
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] % p == 0) continue;
        std::vector<std::vector<std::uint32_t>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::uint32_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        std::uint64_t term =
            std::uint64_t(a[0][j] % p) * laplace_det_mod(minor, p) % p;
        acc = (acc + ((j % 2 == 0) ? term : p - term)) % p;
    }
    return static_cast<std::uint32_t>(acc);
}

inline std::uint32_t laplace_det(const Mat& A) {
    std::size_t n = A.rows();
    std::vector<std::vector<std::uint32_t>> a(n,
                                              std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = A.at(i + 1, j + 1);
    return laplace_det_mod(a, A.field().modulus());
}

// Rank as the size of the largest square submatrix with nonzero Laplace
// determinant.
inline std::size_t minor_rank(const Mat& A) {
    std::size_t m = A.rows(), n = A.cols();
    for (std::size_t k = std::min(m, n); k >= 1; --k) {
        // enumerate k-combinations of rows and columns
        std::vector<std::size_t> rsel(k), csel(k);
        for (std::size_t i = 0; i < k; ++i) rsel[i] = i + 1;
        for (;;) {
            for (std::size_t i = 0; i < k; ++i) csel[i] = i + 1;
            for (;;) {
                if (laplace_det(A.submatrix(rsel, csel)) != 0) return k;
                // next column combination
                std::size_t t = k;
                while (t > 0 && csel[t - 1] == n - k + t) --t;
                if (t == 0) break;
                ++csel[t - 1];
                for (std::size_t u = t; u < k; ++u) csel[u] = csel[u - 1] + 1;
            }
            std::size_t t = k;
            while (t > 0 && rsel[t - 1] == m - k + t) --t;
            if (t == 0) break;
            ++rsel[t - 1];
            for (std::size_t u = t; u < k; ++u) rsel[u] = rsel[u - 1] + 1;
        }
    }
    return 0;
}

// Independent reduced-row-echelon oracle for vector lists, written against
// signed arithmetic rather than the library's field helpers.
inline std::vector<std::vector<std::uint32_t>> oracle_rref(
    std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
    auto modinv = [p](std::int64_t a) {
        a %= p;
        if (a < 0) a += p;
        std::int64_t result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t h = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < h && r < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        std::int64_t inv = modinv(rows[r][c]);
        for (std::size_t j = 0; j < h; ++j)
            rows[r][j] = static_cast<std::uint32_t>(rows[r][j] * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            std::int64_t fac = rows[i][c];
            for (std::size_t j = 0; j < h; ++j) {
                std::int64_t v = rows[i][j] - fac * rows[r][j] % p;
                v %= p;
                if (v < 0) v += p;
                rows[i][j] = static_cast<std::uint32_t>(v);
            }
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// Right-multiplies every matrix of the space by I + c E_{a,b} (a < b):
// "add c times column a to column b", which preserves row echelon form.
inline AffineSpace column_op(const AffineSpace& S, std::size_t a,
                             std::size_t b, std::uint32_t c) {
    const Fp& f = S.field();
    Mat E = Mat::identity(S.mat_cols(), f);
    E.set(a, b, c);
    std::vector<Mat> basis;
    for (const Mat& v : S.basis()) basis.push_back(v * E);
    return AffineSpace(S.offset() * E, std::move(basis), S.ambient());
}

// All-echelon test spaces: a constructed echelon family, a few random
// echelon-preserving column operations, then a random sub-direction.
inline AffineSpace random_all_echelon_space(std::mt19937_64& rng,
                                            std::size_t max_dim = 6) {
    std::uniform_int_distribution<int> pick(0, 1);
    std::uniform_int_distribution<std::size_t> mdist(2, 4), ndist(2, 5);
    std::size_t m = mdist(rng), n = ndist(rng);
    std::uniform_int_distribution<std::size_t> rdist(1, std::min(m, n));
    std::size_t r = rdist(rng);
    std::uint32_t p = pick(rng) ? 5 : 7;
    Fp f(p);
    AffineSpace S = [&] {
        if (r >= 2 && pick(rng)) {
            std::uniform_int_distribution<std::size_t> sdist(0, r - 1);
            return construct_echelon_range(m, n, sdist(rng), r, f);
        }
        return construct_echelon_constant(m, n, r, f);
    }();
    std::uniform_int_distribution<std::size_t> ops(0, 4);
    std::uniform_int_distribution<std::uint32_t> cval(0, p - 1);
    for (std::size_t k = ops(rng); k > 0 && n >= 2; --k) {
        std::uniform_int_distribution<std::size_t> adist(1, n - 1);
        std::size_t a = adist(rng);
        std::uniform_int_distribution<std::size_t> bdist(a + 1, n);
        S = column_op(S, a, bdist(rng), cval(rng));
    }
    if (S.dim() > max_dim) {
        std::vector<Mat> all = S.basis();
        std::shuffle(all.begin(), all.end(), rng);
        all.erase(all.begin() + static_cast<std::ptrdiff_t>(max_dim),
                  all.end());
        S = AffineSpace(S.offset(), std::move(all), S.ambient());
    }
    return S;
}

// Exhaustive rank histogram of pairwise differences rk(A - B) over all
// ordered codeword pairs, divided by |S|.
inline std::map<std::size_t, std::uint64_t> pairwise_distance_histogram(
    const AffineSpace& S, std::uint64_t budget) {
    std::vector<Mat> codewords;
    S.for_each_element(budget, [&](const Mat& A) {
        codewords.push_back(A);
        return true;
    });
    std::map<std::size_t, std::uint64_t> hist;
    for (const Mat& A : codewords)
        for (const Mat& B : codewords) ++hist[(A - B).rank()];
    for (auto& [rk, cnt] : hist) cnt /= codewords.size();
    return hist;
}

// 1-based vectorized coordinates of the block projection used in the
// isotropy checks: column j of the upper-right block stacked on row i of the
// lower-left block, for an m x n space with m <= n and rank parameter r.
inline std::vector<std::size_t> pi_ij_coords(std::size_t m, std::size_t n,
                                             std::size_t r, std::size_t i,
                                             std::size_t j) {
    (void)m;
    std::vector<std::size_t> coords;
    for (std::size_t k = 1; k <= r; ++k)
        coords.push_back((k - 1) * n + (r + j));  // B entry (k, r+j)
    for (std::size_t k = 1; k <= r; ++k)
        coords.push_back((r + i - 1) * n + k);  // C entry (r+i, k)
    return coords;
}

}  // namespace rrtest
