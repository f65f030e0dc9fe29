#include "rankrange/forms.hpp"

#include <algorithm>

#include "rankrange/errors.hpp"

namespace rankrange {

QuadraticForm::QuadraticForm(Mat coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() != coeffs_.cols())
        throw ShapeError("coefficient matrix must be square");
    if (coeffs_.field().char_is_two())
        throw CharTwoUnsupported("quadratic forms require characteristic != 2");
    if (!(coeffs_ == coeffs_.transpose()))
        throw ShapeError("coefficient matrix must be symmetric");
    nondegenerate_ = coeffs_.rank() == coeffs_.rows();
}

std::uint32_t QuadraticForm::evaluate(const Vec& x) const {
    return bilinear(x, x);
}

std::uint32_t QuadraticForm::bilinear(const Vec& u, const Vec& w) const {
    std::size_t n = coeffs_.rows();
    if (u.size() != n || w.size() != n)
        throw ShapeError("vector length does not match form dimension");
    const Fp& f = coeffs_.field();
    std::uint32_t acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (u[i - 1] == 0) continue;
        std::uint32_t row = 0;
        for (std::size_t j = 1; j <= n; ++j)
            row = f.add(row, f.mul(coeffs_.at(i, j), w[j - 1]));
        acc = f.add(acc, f.mul(u[i - 1], row));
    }
    return acc;
}

QuadraticForm hyperbolic_form(std::size_t r, const Fp& f) {
    if (f.char_is_two())
        throw CharTwoUnsupported("hyperbolic form requires characteristic != 2");
    if (r == 0) throw InvalidParams("hyperbolic form needs r >= 1");
    Mat b(2 * r, 2 * r, f);
    std::uint32_t half = f.inv(2);
    for (std::size_t i = 1; i <= r; ++i) {
        b.set(i, r + i, half);
        b.set(r + i, i, half);
    }
    return QuadraticForm(std::move(b));
}

QuadraticForm skew_block_form(const std::vector<std::uint32_t>& d,
                              const Fp& f) {
    if (f.char_is_two())
        throw CharTwoUnsupported("skew block form requires characteristic != 2");
    if (d.empty()) throw InvalidParams("d must be nonempty");
    for (std::uint32_t dl : d)
        if (dl % f.modulus() == 0)
            throw InvalidParams("d entries must be nonzero");
    std::size_t r = 2 * d.size();
    // Variables: x_k = b_{k,i} for k = 1..r, x_{r+k} = b_{k,j}.
    Mat b(2 * r, 2 * r, f);
    std::uint32_t half = f.inv(2);
    for (std::size_t l = 1; l <= d.size(); ++l) {
        std::uint32_t w = f.mul(half, f.inv(d[l - 1] % f.modulus()));
        std::size_t a = 2 * l - 1;  // index of b_{2l-1,i}
        std::size_t c = 2 * l;      // index of b_{2l,i}
        // + (1/d_l) b_{2l-1,i} b_{2l,j}
        b.set(a, r + c, f.add(b.at(a, r + c), w));
        b.set(r + c, a, f.add(b.at(r + c, a), w));
        // - (1/d_l) b_{2l-1,j} b_{2l,i}
        b.set(r + a, c, f.sub(b.at(r + a, c), w));
        b.set(c, r + a, f.sub(b.at(c, r + a), w));
    }
    return QuadraticForm(std::move(b));
}

bool is_totally_isotropic(const std::vector<Vec>& direction,
                          const QuadraticForm& q, const Fp& f) {
    (void)f;
    for (std::size_t i = 0; i < direction.size(); ++i) {
        if (q.evaluate(direction[i]) != 0) return false;
        for (std::size_t j = i + 1; j < direction.size(); ++j)
            if (q.bilinear(direction[i], direction[j]) != 0) return false;
    }
    return true;
}

namespace {

Vec mat_vec(const Mat& M, const Vec& x) {
    const Fp& f = M.field();
    Vec y(M.rows(), 0);
    for (std::size_t i = 1; i <= M.rows(); ++i)
        for (std::size_t j = 1; j <= M.cols(); ++j)
            y[i - 1] = f.add(y[i - 1], f.mul(M.at(i, j), x[j - 1]));
    return y;
}

std::uint32_t dot(const Vec& a, const Vec& b, const Fp& f) {
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s = f.add(s, f.mul(a[k], b[k]));
    return s;
}

}  // namespace

Mat SkewNormalForm::normal_matrix(std::size_t n, const Fp& f) const {
    Mat g(n, n, f);
    for (std::size_t l = 0; l < d.size(); ++l) {
        std::size_t i = 2 * l + 1;
        g.set(i, i + 1, d[l]);
        g.set(i + 1, i, f.neg(d[l]));
    }
    return g;
}

SkewNormalForm skew_normal_form(const Mat& M) {
    if (!M.is_skew()) throw NotSkew("input is not skew-symmetric");
    const Fp& f = M.field();
    if (f.char_is_two())
        throw CharTwoUnsupported("normal form requires characteristic != 2");
    std::size_t n = M.rows();

    std::vector<Vec> remaining;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        remaining.push_back(std::move(e));
    }

    std::vector<Vec> paired;  // u_1, w_1, u_2, w_2, ...
    std::vector<std::uint32_t> d;
    for (;;) {
        // Find a hyperbolic pair among the remaining vectors.
        std::size_t ui = remaining.size(), wi = remaining.size();
        std::uint32_t c = 0;
        for (std::size_t a = 0; a < remaining.size() && ui == remaining.size();
             ++a) {
            Vec mu = mat_vec(M, remaining[a]);
            for (std::size_t b = 0; b < remaining.size(); ++b) {
                if (b == a) continue;
                std::uint32_t pairing = dot(remaining[b], mu, f);
                if (pairing != 0) {
                    // pairing = w^t M u = -(u^t M w)
                    ui = a;
                    wi = b;
                    c = f.neg(pairing);
                    break;
                }
            }
        }
        if (ui == remaining.size()) break;

        Vec u = remaining[ui], w = remaining[wi];
        remaining.erase(remaining.begin() + std::max(ui, wi));
        remaining.erase(remaining.begin() + std::min(ui, wi));

        // Deflate: make every remaining vector M-orthogonal to u and w.
        std::uint32_t cinv = f.inv(c);
        for (Vec& v : remaining) {
            Vec mv = mat_vec(M, v);
            std::uint32_t a1 = f.mul(dot(u, mv, f), cinv);
            std::uint32_t a2 = f.mul(dot(w, mv, f), cinv);
            for (std::size_t k = 0; k < n; ++k) {
                v[k] = f.sub(v[k], f.mul(a1, w[k]));
                v[k] = f.add(v[k], f.mul(a2, u[k]));
            }
        }
        paired.push_back(std::move(u));
        paired.push_back(std::move(w));
        d.push_back(c);
    }

    Mat H(n, n, f);
    std::size_t col = 1;
    for (const Vec& v : paired) {
        for (std::size_t i = 0; i < n; ++i) H.set(i + 1, col, v[i]);
        ++col;
    }
    for (const Vec& v : remaining) {
        for (std::size_t i = 0; i < n; ++i) H.set(i + 1, col, v[i]);
        ++col;
    }
    return SkewNormalForm{std::move(H), std::move(d), paired.size()};
}

}  // namespace rankrange
