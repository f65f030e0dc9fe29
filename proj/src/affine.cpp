#include "rankrange/affine.hpp"

#include <numeric>
#include <thread>

#include "rankrange/errors.hpp"

namespace rankrange {

namespace {

// Pivot columns of a basis already in RREF (rows come out of rref()).
Rref rref_of_canonical(const std::vector<Mat>& basis) {
    Rref r;
    for (const Mat& b : basis) {
        Vec v = b.vectorize();
        std::size_t lead = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                lead = j;
                break;
            }
        r.pivots.push_back(lead);
        r.basis.push_back(std::move(v));
    }
    return r;
}

std::uint64_t pow_checked(std::uint64_t q, std::size_t e,
                          std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (v > limit / q)
            throw BudgetExceeded("q^" + std::to_string(e) +
                                 " elements exceed budget " +
                                 std::to_string(limit));
        v *= q;
    }
    return v;
}

}  // namespace

AffineSpace::AffineSpace(Mat offset, std::vector<Mat> basis, Ambient ambient)
    : offset_(std::move(offset)), ambient_(ambient) {
    for (const Mat& b : basis) {
        if (b.rows() != offset_.rows() || b.cols() != offset_.cols() ||
            !(b.field() == offset_.field()))
            throw ShapeError("offset and basis matrices must share shape and field");
    }
    if (ambient_ == Ambient::Skew) {
        if (!offset_.is_skew())
            throw ShapeError("offset is not skew-symmetric");
        for (const Mat& b : basis)
            if (!b.is_skew())
                throw ShapeError("basis matrix is not skew-symmetric");
    }
    // Canonicalize: RREF the vectorized generators, zero the offset's pivot
    // coordinates.
    const Fp& f = offset_.field();
    std::vector<Vec> gens;
    gens.reserve(basis.size());
    for (const Mat& b : basis) gens.push_back(b.vectorize());
    Rref space = rref(std::move(gens), f);
    Vec off = reduce_mod(space, offset_.vectorize(), f);
    offset_ = Mat::from_vector(off, offset_.rows(), offset_.cols(), f);
    basis_.clear();
    for (const Vec& row : space.basis)
        basis_.push_back(
            Mat::from_vector(row, offset_.rows(), offset_.cols(), f));
}

bool AffineSpace::contains(const Mat& A) const {
    if (A.rows() != offset_.rows() || A.cols() != offset_.cols())
        throw ShapeError("candidate has wrong shape");
    Rref space = rref_of_canonical(basis_);
    return in_span(space, (A - offset_).vectorize(), field());
}

Mat AffineSpace::element(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != basis_.size())
        throw ShapeError("coefficient count does not match dimension");
    Mat e = offset_;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] % field().modulus() != 0)
            e = e + basis_[i].scaled(coeffs[i]);
    return e;
}

std::uint64_t AffineSpace::size_or_throw(std::uint64_t budget) const {
    return pow_checked(field().modulus(), dim(), budget);
}

bool AffineSpace::for_each_element(
    std::uint64_t budget, const std::function<bool(const Mat&)>& visit) const {
    size_or_throw(budget);
    std::uint32_t q = field().modulus();
    std::vector<std::uint32_t> digits(dim(), 0);
    Mat cur = offset_;
    for (;;) {
        if (!visit(cur)) return false;
        // Odometer step, rightmost digit fastest; q*basis vanishes mod p so
        // the running sum wraps by itself.
        std::size_t k = digits.size();
        while (k > 0) {
            --k;
            cur = cur + basis_[k];
            if (++digits[k] < q) break;
            digits[k] = 0;
            if (k == 0) return true;
        }
        if (digits.empty()) return true;
    }
}

RankProfile AffineSpace::rank_profile(std::uint64_t budget,
                                      unsigned threads) const {
    std::uint64_t total = size_or_throw(budget);
    std::uint32_t q = field().modulus();

    auto scan = [](const AffineSpace& part, std::uint64_t part_budget) {
        std::map<std::size_t, std::uint64_t> hist;
        part.for_each_element(part_budget, [&](const Mat& A) {
            ++hist[A.rank()];
            return true;
        });
        return hist;
    };

    std::map<std::size_t, std::uint64_t> hist;
    if (threads <= 1 || dim() == 0) {
        hist = scan(*this, budget);
    } else {
        // Partition on the first coefficient: q independent sub-scans.
        std::vector<std::map<std::size_t, std::uint64_t>> parts(q);
        std::vector<AffineSpace> subs;
        std::vector<Mat> rest(basis_.begin() + 1, basis_.end());
        for (std::uint32_t c = 0; c < q; ++c)
            subs.emplace_back(offset_ + basis_[0].scaled(c), rest, ambient_);
        std::vector<std::thread> pool;
        unsigned active = std::min<unsigned>(threads, q);
        for (unsigned t = 0; t < active; ++t)
            pool.emplace_back([&, t]() {
                for (std::uint32_t c = t; c < q; c += active)
                    parts[c] = scan(subs[c], budget);
            });
        for (auto& th : pool) th.join();
        for (const auto& part : parts)
            for (const auto& [rk, cnt] : part) hist[rk] += cnt;
    }

    RankProfile prof;
    prof.histogram = std::move(hist);
    prof.total = total;
    prof.min_rank = prof.histogram.begin()->first;
    prof.max_rank = prof.histogram.rbegin()->first;
    return prof;
}

std::vector<Vec> AffineSpace::direction_vectors() const {
    std::vector<Vec> out;
    out.reserve(basis_.size());
    for (const Mat& b : basis_) out.push_back(b.vectorize());
    return out;
}

Rref project(const std::vector<Vec>& direction,
             const std::vector<std::size_t>& coords, const Fp& f) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(coords.size());
    for (std::size_t c : coords) {
        if (c == 0) throw IndexError("coordinates are 1-based");
        zero_based.push_back(c - 1);
    }
    return rref(project_coords(direction, zero_based), f);
}

LemmaCheck check_projection_lemma(const std::vector<Vec>& direction,
                                  std::size_t m,
                                  const std::vector<std::size_t>& n_list,
                                  const std::vector<std::size_t>& q_list,
                                  std::size_t r, const Fp& f) {
    if (n_list.size() != q_list.size())
        throw ShapeError("n_list and q_list must have equal length");
    std::size_t h = 3 * m;
    for (std::size_t nj : n_list) h += nj;
    for (const Vec& v : direction)
        if (v.size() != h)
            throw ShapeError("direction vectors must live in K^h");

    auto range = [](std::size_t lo, std::size_t hi) {  // 1-based inclusive
        std::vector<std::size_t> c;
        for (std::size_t i = lo; i <= hi; ++i) c.push_back(i);
        return c;
    };

    std::vector<std::size_t> pi3 = range(1, m);
    for (std::size_t i = 2 * m + 1; i <= 3 * m; ++i) pi3.push_back(i);

    bool hyp = project(direction, range(1, 2 * m), f).dim() <= 2 * r &&
               project(direction, range(m + 1, 3 * m), f).dim() <= 2 * r &&
               project(direction, pi3, f).dim() <= 2 * r;
    std::size_t start = 3 * m;
    for (std::size_t j = 0; j < n_list.size() && hyp; ++j) {
        hyp = project(direction, range(start + 1, start + n_list[j]), f).dim() <=
              q_list[j];
        start += n_list[j];
    }
    if (!hyp) return LemmaCheck::HypothesesNotMet;

    std::size_t bound =
        std::accumulate(q_list.begin(), q_list.end(), std::size_t{0}) + 3 * r;
    return rref(direction, f).dim() <= bound ? LemmaCheck::Holds
                                             : LemmaCheck::ConclusionFails;
}

}  // namespace rankrange
