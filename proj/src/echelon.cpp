#include "rankrange/echelon.hpp"

#include "rankrange/errors.hpp"

namespace rankrange {

PivotProfile pivot_profile(const AffineSpace& S) {
    PivotProfile prof;
    for (std::size_t i = 1; i <= S.mat_rows(); ++i) {
        std::set<std::size_t> zi;
        for (std::size_t j = 1; j <= S.mat_cols(); ++j) {
            bool hit = S.offset().at(i, j) != 0;
            for (const Mat& b : S.basis()) {
                if (hit) break;
                hit = b.at(i, j) != 0;
            }
            if (hit) zi.insert(j);
        }
        if (!zi.empty()) {
            prof.P.push_back(i);
            prof.j[i] = *zi.begin();
            prof.Z[i] = std::move(zi);
        }
    }
    return prof;
}

namespace {

// Some element of S with a nonzero entry at (i, j): the offset when its
// entry is nonzero, otherwise offset plus a basis matrix hitting the cell.
Mat member_with_nonzero(const AffineSpace& S, std::size_t i, std::size_t j) {
    if (S.offset().at(i, j) != 0) return S.offset();
    for (const Mat& b : S.basis())
        if (b.at(i, j) != 0) return S.offset() + b;
    throw EmptyInput("entry identically zero on S");
}

}  // namespace

Mat find_full_pivot_matrix(const AffineSpace& S) {
    PivotProfile prof = pivot_profile(S);
    const Fp& f = S.field();
    std::size_t r = prof.P.size();
    if (r == 0) return S.offset();  // the zero space: no pivot condition
    if (!f.has_cardinality_at_least(r + 1))
        throw FieldTooSmall("need |K| >= " + std::to_string(r + 1));

    Mat A = member_with_nonzero(S, prof.P[0], prof.j[prof.P[0]]);
    for (std::size_t k = 1; k < r; ++k) {
        std::size_t row = prof.P[k], col = prof.j[row];
        if (A.at(row, col) != 0) continue;
        Mat Ap = member_with_nonzero(S, row, col);
        // Pick lambda with (lambda A + (1-lambda) A') nonzero at every pivot
        // handled so far and at (row, col); scan residues in increasing
        // order.
        std::uint32_t chosen = f.modulus();
        for (std::uint32_t lam = 0; lam < f.modulus(); ++lam) {
            if (lam == 1) continue;  // (1-lambda) A' contributes the new pivot
            bool ok = true;
            for (std::size_t t = 0; t < k && ok; ++t) {
                std::size_t ri = prof.P[t], ci = prof.j[ri];
                std::uint32_t ai = A.at(ri, ci), api = Ap.at(ri, ci);
                if (ai == api) continue;  // nonzero for every lambda
                // forbidden when lambda (a - a') = -a'
                ok = f.mul(lam, f.sub(ai, api)) != f.neg(api);
            }
            if (ok) {
                chosen = lam;
                break;
            }
        }
        if (chosen == f.modulus())
            throw FieldTooSmall("no admissible lambda at step " +
                                std::to_string(k + 1));
        Mat next = A.scaled(chosen) + Ap.scaled(f.sub(1, chosen));
        A = std::move(next);
    }
    return A;
}

bool all_echelon(const AffineSpace& S, std::uint64_t budget) {
    bool ok = true;
    S.for_each_element(budget, [&](const Mat& M) {
        ok = M.is_row_echelon();
        return ok;
    });
    return ok;
}

}  // namespace rankrange
