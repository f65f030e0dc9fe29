#include "rankrange/search.hpp"

#include <random>

#include "rankrange/errors.hpp"

namespace rankrange {

BigInt gaussian_binomial(std::size_t N, std::size_t d, std::uint64_t q) {
    if (d > N || q < 2) throw InvalidParams("need 0 <= d <= N and q >= 2");
    // prod_{i<d} (q^{N-i} - 1) / (q^{d-i} - 1); exact at every step when the
    // numerator factors are folded in order.
    BigInt num = 1, den = 1;
    BigInt Q = q;
    for (std::size_t i = 0; i < d; ++i) {
        num *= boost::multiprecision::pow(Q, static_cast<unsigned>(N - i)) - 1;
        den *= boost::multiprecision::pow(Q, static_cast<unsigned>(d - i)) - 1;
    }
    return num / den;
}

SubspaceEnumerator::SubspaceEnumerator(std::size_t N, std::size_t d, Fp f)
    : N_(N), d_(d), f_(f), done_(d > N) {
    if (d > N) return;
    pivots_.resize(d);
    for (std::size_t i = 0; i < d; ++i) pivots_[i] = i;
    compute_free_cells();
}

void SubspaceEnumerator::compute_free_cells() {
    free_cells_.clear();
    std::vector<bool> is_pivot(N_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t col = pivots_[i] + 1; col < N_; ++col)
            if (!is_pivot[col]) free_cells_.emplace_back(i, col);
    free_vals_.assign(free_cells_.size(), 0);
}

std::vector<Vec> SubspaceEnumerator::current() const {
    std::vector<Vec> basis(d_, Vec(N_, 0));
    for (std::size_t i = 0; i < d_; ++i) basis[i][pivots_[i]] = 1;
    for (std::size_t k = 0; k < free_cells_.size(); ++k)
        basis[free_cells_[k].first][free_cells_[k].second] = free_vals_[k];
    return basis;
}

bool SubspaceEnumerator::advance() {
    // Free-entry odometer, rightmost fastest.
    std::uint32_t q = f_.modulus();
    for (std::size_t k = free_vals_.size(); k-- > 0;) {
        if (++free_vals_[k] < q) return true;
        free_vals_[k] = 0;
    }
    // Next pivot combination in lexicographic order.
    for (std::size_t i = d_; i-- > 0;) {
        if (pivots_[i] < N_ - d_ + i) {
            ++pivots_[i];
            for (std::size_t t = i + 1; t < d_; ++t)
                pivots_[t] = pivots_[t - 1] + 1;
            compute_free_cells();
            return true;
        }
    }
    return false;
}

std::optional<std::vector<Vec>> SubspaceEnumerator::next() {
    if (done_) return std::nullopt;
    std::vector<Vec> out = current();
    if (d_ == 0) {
        done_ = true;
        return out;
    }
    done_ = !advance();
    return out;
}

std::size_t ambient_dim(const SearchSpec& spec) {
    if (spec.ambient == Ambient::Skew) {
        if (spec.m != spec.n)
            throw InvalidParams("skew ambient requires m == n");
        return spec.n * (spec.n - 1) / 2;
    }
    return spec.m * spec.n;
}

Mat chart_to_mat(const Vec& v, const SearchSpec& spec) {
    const Fp& f = spec.field;
    if (spec.ambient == Ambient::Full)
        return Mat::from_vector(v, spec.m, spec.n, f);
    Mat A(spec.n, spec.n, f);
    std::size_t k = 0;
    for (std::size_t i = 1; i <= spec.n; ++i)
        for (std::size_t j = i + 1; j <= spec.n; ++j, ++k) {
            A.set(i, j, v[k]);
            A.set(j, i, f.neg(v[k]));
        }
    return A;
}

namespace {

void validate(const SearchSpec& spec) {
    std::size_t mn = std::min(spec.m, spec.n);
    if (spec.s > spec.r || spec.r > mn)
        throw InvalidParams("need s <= r <= min(m,n)");
    if (spec.ambient == Ambient::Skew &&
        (spec.m != spec.n || spec.s % 2 != 0 || spec.r % 2 != 0))
        throw InvalidParams("skew ambient needs m == n and even s, r");
}

// Scans a candidate (offset chart vector + direction basis) with pruning.
// Returns true iff the rank range is exactly [s, r] (and all elements
// echelon when required).
bool evaluate_candidate(const Vec& offset, const std::vector<Vec>& basis,
                        const SearchSpec& spec, std::uint64_t& elements) {
    const Fp& f = spec.field;
    std::uint32_t q = f.modulus();
    std::size_t min_seen = spec.r + 1, max_seen = 0;
    bool first = true;

    std::vector<std::uint32_t> digits(basis.size(), 0);
    Vec cur = offset;
    for (;;) {
        Mat A = chart_to_mat(cur, spec);
        ++elements;
        std::size_t rk = A.rank();
        if (rk < spec.s || rk > spec.r) return false;
        if (spec.echelon_required && !A.is_row_echelon()) return false;
        if (first || rk < min_seen) min_seen = rk;
        if (first || rk > max_seen) max_seen = rk;
        first = false;

        std::size_t k = digits.size();
        bool advanced = false;
        while (k > 0) {
            --k;
            const Vec& b = basis[k];
            for (std::size_t t = 0; t < cur.size(); ++t)
                cur[t] = f.add(cur[t], b[t]);
            if (++digits[k] < q) {
                advanced = true;
                break;
            }
            digits[k] = 0;
        }
        if (!advanced) break;
    }
    return min_seen == spec.s && max_seen == spec.r;
}

AffineSpace make_space(const Vec& offset, const std::vector<Vec>& basis,
                       const SearchSpec& spec) {
    std::vector<Mat> bmats;
    for (const Vec& b : basis) bmats.push_back(chart_to_mat(b, spec));
    return AffineSpace(chart_to_mat(offset, spec), std::move(bmats),
                       spec.ambient);
}

}  // namespace

SearchOutcome exists_affine_of_dim(const SearchSpec& spec,
                                   std::uint64_t budget) {
    validate(spec);
    std::size_t N = ambient_dim(spec);
    if (spec.target_dim > N)
        throw InvalidParams("target dimension exceeds the ambient dimension");
    const Fp& f = spec.field;
    std::uint32_t q = f.modulus();
    SearchOutcome out;

    if (spec.exhaustive) {
        BigInt cost = gaussian_binomial(N, spec.target_dim, q);
        BigInt Q = q;
        cost *= boost::multiprecision::pow(
            Q, static_cast<unsigned>(N - spec.target_dim));
        cost *= boost::multiprecision::pow(
            Q, static_cast<unsigned>(spec.target_dim));
        if (cost > budget)
            throw BudgetExceeded("exhaustive search needs " + cost.str() +
                                 " element scans, budget " +
                                 std::to_string(budget));

        SubspaceEnumerator dirs(N, spec.target_dim, f);
        while (auto basis = dirs.next()) {
            // Offsets range over canonical coset representatives: pivot
            // coordinates of the RREF direction zeroed, the rest free.
            std::vector<std::size_t> free_coords;
            {
                std::vector<bool> is_pivot(N, false);
                for (const Vec& row : *basis)
                    for (std::size_t j = 0; j < N; ++j)
                        if (row[j] != 0) {
                            is_pivot[j] = true;
                            break;
                        }
                for (std::size_t j = 0; j < N; ++j)
                    if (!is_pivot[j]) free_coords.push_back(j);
            }
            Vec offset(N, 0);
            std::vector<std::uint32_t> digits(free_coords.size(), 0);
            for (;;) {
                ++out.cost.candidates;
                if (evaluate_candidate(offset, *basis, spec,
                                       out.cost.elements_scanned)) {
                    out.witness = make_space(offset, *basis, spec);
                    return out;
                }
                std::size_t k = digits.size();
                bool advanced = false;
                while (k > 0) {
                    --k;
                    std::size_t c = free_coords[k];
                    offset[c] = f.add(offset[c], 1);
                    if (++digits[k] < q) {
                        advanced = true;
                        break;
                    }
                    digits[k] = 0;
                }
                if (!advanced) break;
            }
        }
        return out;
    }

    // Random mode: seeded, reproducible; a miss is evidence, not proof.
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::uint32_t> res(0, q - 1);
    for (std::uint64_t trial = 0; trial < spec.samples; ++trial) {
        std::vector<Vec> gens(spec.target_dim, Vec(N));
        for (Vec& g : gens)
            for (auto& x : g) x = res(rng);
        Rref dir = rref(std::move(gens), f);
        if (dir.dim() != spec.target_dim) continue;  // degenerate draw
        Vec offset(N);
        for (auto& x : offset) x = res(rng);
        offset = reduce_mod(dir, std::move(offset), f);
        ++out.cost.candidates;
        if (evaluate_candidate(offset, dir.basis, spec,
                               out.cost.elements_scanned)) {
            out.witness = make_space(offset, dir.basis, spec);
            return out;
        }
    }
    return out;
}

std::optional<MaxDimResult> max_affine_dim(SearchSpec spec,
                                           std::optional<std::size_t> start_dim,
                                           std::uint64_t budget) {
    validate(spec);
    std::size_t N = ambient_dim(spec);
    std::size_t start = std::min(start_dim.value_or(N), N);
    SearchCost cost;
    for (std::size_t d = start;; --d) {
        spec.target_dim = d;
        SearchOutcome out = exists_affine_of_dim(spec, budget);
        cost.candidates += out.cost.candidates;
        cost.elements_scanned += out.cost.elements_scanned;
        if (out.witness)
            return MaxDimResult{d, std::move(*out.witness), cost};
        if (d == 0) break;
    }
    return std::nullopt;
}

}  // namespace rankrange
