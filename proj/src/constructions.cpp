#include "rankrange/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "rankrange/errors.hpp"

namespace rankrange {

namespace {

std::int64_t choose2(std::int64_t k) { return k * (k + 1) / 2; }

void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidParams(msg);
}

}  // namespace

std::int64_t bound(const BoundQuery& q) {
    const auto [family, m, n, s, r] = q;
    std::int64_t mn_min = std::min(m, n), mn_max = std::max(m, n);
    switch (family) {
        case BoundFamily::RangeMxn:
            require(m >= 1 && n >= 1 && 0 <= s && s <= r && r <= mn_min,
                    "range-mxn needs 0 <= s <= r <= min(m,n)");
            return r * mn_max - choose2(s);
        case BoundFamily::Flanders:
            require(m >= 1 && n >= 1 && 0 <= r && r <= mn_min,
                    "flanders needs 0 <= r <= min(m,n)");
            return r * mn_max;
        case BoundFamily::RankBelow:
            require(m >= 1 && n >= 1 && 0 <= s && s <= mn_min,
                    "rank-below needs 0 <= s <= min(m,n)");
            return m * n - choose2(s);
        case BoundFamily::AntBelow:
            require(n >= 1 && 0 <= s && s <= n && s % 2 == 0,
                    "ant-below needs even 0 <= s <= n");
            return n * (n - 1) / 2 - s * s / 4;
        case BoundFamily::AntRange:
            require(n >= 1 && 0 <= s && s <= r && r <= n && s % 2 == 0 &&
                        r % 2 == 0,
                    "ant-range needs even 0 <= s <= r <= n");
            return (n - 1) * r / 2 - s * s / 4;
        case BoundFamily::EchelonConstant:
            require(m >= 1 && n >= 1 && 0 <= r && r <= mn_min,
                    "echelon-constant needs 0 <= r <= min(m,n)");
            return r * n - choose2(r);
        case BoundFamily::EchelonRangeLower:
            require(m >= 1 && n >= 1 && 0 <= s && s < r && r <= mn_min,
                    "echelon-range needs 0 <= s < r <= min(m,n)");
            return s * n - choose2(s) + n - s;
        case BoundFamily::EchelonRangeUpper:
            require(m >= 1 && n >= 1 && 0 <= s && s < r && r <= mn_min,
                    "echelon-range needs 0 <= s < r <= min(m,n)");
            return r * n - choose2(r) + 1;
        case BoundFamily::SymReal:
            require(n >= 1 && 0 <= r && r <= n, "sym-real needs 0 <= r <= n");
            return (r / 2) * (n - r / 2);
        case BoundFamily::MxnRealConstant:
            require(m >= 1 && n >= 1 && 0 <= r && r <= mn_min,
                    "mxn-real-constant needs 0 <= r <= min(m,n)");
            return r * mn_max - choose2(r);
        case BoundFamily::AntReal: {
            require(n >= 1 && 0 <= r && r <= n && r % 2 == 0,
                    "ant-real needs even 0 <= r <= n");
            std::int64_t k = r / 2;
            if (n >= r + 2) return (n - k - 1) * k;
            if (n == r) return k * (k - 1);
            return k * (k + 1);  // n == r + 1
        }
        case BoundFamily::WestwickLower:
            require(2 <= r && r <= mn_min,
                    "westwick needs 2 <= r <= min(m,n)");
            return mn_max - r + 1;
        case BoundFamily::WestwickUpper:
            require(2 <= r && r <= mn_min,
                    "westwick needs 2 <= r <= min(m,n)");
            return m + n - 2 * r + 1;
        case BoundFamily::IlicLandsberg:
            require(n >= 1 && 2 <= r && r <= n && r % 2 == 0,
                    "ilic-landsberg needs even 2 <= r <= n");
            return n - r + 1;
        case BoundFamily::SymOdd:
            require(n >= 1 && 1 <= r && r <= n && r % 2 == 1,
                    "sym-odd needs odd 1 <= r <= n");
            return 1;
        case BoundFamily::WeakAnyField:
            require(m >= 1 && n >= 1 && 0 <= s && s <= r && r <= mn_min,
                    "weak-any-field needs 0 <= s <= r <= min(m,n)");
            return m * n - choose2(s);
        case BoundFamily::WeakCharNot2:
            require(m >= 1 && n >= 1 && 0 <= s && s <= r && r <= mn_min,
                    "weak-char-not-2 needs 0 <= s <= r <= min(m,n)");
            return m * n - (mn_min - r) * r;
    }
    throw InvalidParams("unknown bound family");
}

namespace {

const std::vector<std::pair<std::string, BoundFamily>> kBoundNames = {
    {"range-mxn", BoundFamily::RangeMxn},
    {"flanders", BoundFamily::Flanders},
    {"rank-below", BoundFamily::RankBelow},
    {"ant-below", BoundFamily::AntBelow},
    {"ant-range", BoundFamily::AntRange},
    {"echelon-constant", BoundFamily::EchelonConstant},
    {"echelon-range-lower", BoundFamily::EchelonRangeLower},
    {"echelon-range-upper", BoundFamily::EchelonRangeUpper},
    {"sym-real", BoundFamily::SymReal},
    {"mxn-real-constant", BoundFamily::MxnRealConstant},
    {"ant-real", BoundFamily::AntReal},
    {"westwick-lower", BoundFamily::WestwickLower},
    {"westwick-upper", BoundFamily::WestwickUpper},
    {"ilic-landsberg", BoundFamily::IlicLandsberg},
    {"sym-odd", BoundFamily::SymOdd},
    {"weak-any-field", BoundFamily::WeakAnyField},
    {"weak-char-not-2", BoundFamily::WeakCharNot2},
};

const std::vector<std::pair<std::string, ConstructFamily>> kConstructNames = {
    {"range-mxn", ConstructFamily::RangeMxn},
    {"echelon-constant", ConstructFamily::EchelonConstant},
    {"echelon-range", ConstructFamily::EchelonRange},
    {"counterexample-f3", ConstructFamily::CounterexampleF3},
};

}  // namespace

std::optional<BoundFamily> bound_family_from_name(const std::string& name) {
    for (const auto& [k, v] : kBoundNames)
        if (k == name) return v;
    return std::nullopt;
}

std::string bound_family_name(BoundFamily f) {
    for (const auto& [k, v] : kBoundNames)
        if (v == f) return k;
    return "?";
}

std::optional<ConstructFamily> construct_family_from_name(
    const std::string& name) {
    for (const auto& [k, v] : kConstructNames)
        if (k == name) return v;
    return std::nullopt;
}

std::string construct_family_name(ConstructFamily f) {
    for (const auto& [k, v] : kConstructNames)
        if (v == f) return k;
    return "?";
}

AffineSpace construct_range(std::size_t m, std::size_t n, std::size_t s,
                            std::size_t r, const Fp& f) {
    require(m >= 1 && n >= 1 && s <= r && r <= std::min(m, n),
            "construct_range needs 0 <= s <= r <= min(m,n)");
    if (m > n) {
        AffineSpace t = construct_range(n, m, s, r, f);
        std::vector<Mat> basis;
        for (const Mat& b : t.basis()) basis.push_back(b.transpose());
        return AffineSpace(t.offset().transpose(), std::move(basis));
    }
    Mat offset(m, n, f);
    for (std::size_t i = 1; i <= s; ++i) offset.set(i, i, 1);
    std::vector<Mat> basis;
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            bool corner_fixed = i <= s && j <= s && i >= j;
            if (!corner_fixed) basis.push_back(Mat::unit(i, j, m, n, f));
        }
    return AffineSpace(std::move(offset), std::move(basis));
}

AffineSpace construct_echelon_constant(std::size_t m, std::size_t n,
                                       std::size_t r, const Fp& f) {
    require(m >= 1 && n >= 1 && r <= std::min(m, n),
            "construct_echelon_constant needs 0 <= r <= min(m,n)");
    Mat offset(m, n, f);
    for (std::size_t i = 1; i <= r; ++i) offset.set(i, i, 1);
    std::vector<Mat> basis;
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            basis.push_back(Mat::unit(i, j, m, n, f));
    return AffineSpace(std::move(offset), std::move(basis));
}

AffineSpace construct_echelon_range(std::size_t m, std::size_t n,
                                    std::size_t s, std::size_t r,
                                    const Fp& f) {
    require(m >= 1 && n >= 1 && s < r && r <= std::min(m, n),
            "construct_echelon_range needs 0 <= s < r <= min(m,n)");
    Mat offset(m, n, f);
    for (std::size_t i = 1; i <= s; ++i) offset.set(i, i, 1);
    std::vector<Mat> basis;
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            basis.push_back(Mat::unit(i, j, m, n, f));
    // One free vector of length n-s, repeated right-shifted on rows s+1..r.
    for (std::size_t l = 1; l <= n - s; ++l) {
        Mat chain(m, n, f);
        for (std::size_t k = 0; k + s + 1 <= r; ++k) {
            std::size_t col = s + l + k;
            if (col > n) break;
            chain.set(s + 1 + k, col, 1);
        }
        basis.push_back(std::move(chain));
    }
    return AffineSpace(std::move(offset), std::move(basis));
}

AffineSpace construct_counterexample_f3() {
    Fp f3(3);
    Mat offset = Mat::diag({0, 1, 2}, f3);
    std::vector<Mat> basis;
    basis.push_back(Mat::identity(3, f3));  // shifts the whole diagonal
    basis.push_back(Mat::unit(1, 2, 3, 3, f3));
    basis.push_back(Mat::unit(1, 3, 3, 3, f3));
    basis.push_back(Mat::unit(2, 3, 3, 3, f3));
    return AffineSpace(std::move(offset), std::move(basis));
}

namespace {

// Explicit members of the constructed families with the extreme ranks,
// used when the exhaustive scan does not fit the budget.
Mat rank_witness(ConstructFamily family, std::size_t m, std::size_t n,
                 std::size_t s, std::size_t r, const Fp& f, bool want_max) {
    bool transposed = family == ConstructFamily::RangeMxn && m > n;
    if (transposed) std::swap(m, n);
    Mat w(m, n, f);
    std::size_t pivots = want_max ? r : s;
    for (std::size_t i = 1; i <= pivots; ++i) w.set(i, i, 1);
    return transposed ? w.transpose() : w;
}

}  // namespace

VerificationReport verify_family(ConstructFamily family, std::size_t m,
                                 std::size_t n, std::size_t s, std::size_t r,
                                 const Fp& f, std::uint64_t budget,
                                 std::uint64_t seed, unsigned threads) {
    VerificationReport report;
    auto add = [&](const std::string& name, bool pass,
                   const std::string& details) {
        report.checks.push_back({name, pass, details});
    };

    std::optional<AffineSpace> space;
    std::int64_t expected_dim = 0;
    bool echelon_expected = false;
    switch (family) {
        case ConstructFamily::RangeMxn:
            space = construct_range(m, n, s, r, f);
            expected_dim = bound({BoundFamily::RangeMxn, std::int64_t(m),
                                  std::int64_t(n), std::int64_t(s),
                                  std::int64_t(r)});
            break;
        case ConstructFamily::EchelonConstant:
            s = r;
            space = construct_echelon_constant(m, n, r, f);
            expected_dim = bound({BoundFamily::EchelonConstant,
                                  std::int64_t(m), std::int64_t(n),
                                  std::int64_t(r), std::int64_t(r)});
            echelon_expected = true;
            break;
        case ConstructFamily::EchelonRange:
            space = construct_echelon_range(m, n, s, r, f);
            expected_dim = bound({BoundFamily::EchelonRangeLower,
                                  std::int64_t(m), std::int64_t(n),
                                  std::int64_t(s), std::int64_t(r)});
            echelon_expected = true;
            break;
        case ConstructFamily::CounterexampleF3:
            m = n = 3;
            s = r = 2;
            space = construct_counterexample_f3();
            // The family exceeds the range-mxn formula on purpose: |F_3| is
            // below the r+2 cardinality hypothesis.
            expected_dim = bound({BoundFamily::RangeMxn, 3, 3, 2, 2}) + 1;
            break;
    }

    add("dimension",
        std::int64_t(space->dim()) == expected_dim,
        "dim = " + std::to_string(space->dim()) + ", expected " +
            std::to_string(expected_dim));
    if (family == ConstructFamily::CounterexampleF3)
        add("field-size-violation",
            std::int64_t(space->dim()) >
                bound({BoundFamily::RangeMxn, 3, 3, 2, 2}),
            "dimension exceeds the range-mxn formula, as the small field "
            "allows");

    bool exhaustive = true;
    try {
        space->size_or_throw(budget);
    } catch (const BudgetExceeded&) {
        exhaustive = false;
    }

    if (exhaustive) {
        RankProfile prof = space->rank_profile(budget, threads);
        add("min-rank", prof.min_rank == s,
            "min rank " + std::to_string(prof.min_rank) + ", expected " +
                std::to_string(s));
        add("max-rank", prof.max_rank == r,
            "max rank " + std::to_string(prof.max_rank) + ", expected " +
                std::to_string(r));
        if (echelon_expected) {
            bool all_ech = true;
            space->for_each_element(budget, [&](const Mat& A) {
                all_ech = A.is_row_echelon();
                return all_ech;
            });
            add("all-echelon", all_ech,
                all_ech ? "every element is in row echelon form"
                        : "found an element not in row echelon form");
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> coeff(
            0, f.modulus() - 1);
        const std::size_t samples = 100'000;
        bool in_range = true, all_ech = true;
        std::vector<std::uint32_t> c(space->dim());
        for (std::size_t k = 0; k < samples && in_range; ++k) {
            for (auto& x : c) x = coeff(rng);
            Mat A = space->element(c);
            std::size_t rk = A.rank();
            in_range = rk >= s && rk <= r;
            if (echelon_expected && all_ech) all_ech = A.is_row_echelon();
        }
        add("sampled-rank-range", in_range,
            "ranks of " + std::to_string(samples) + " samples lie in [s,r]");
        Mat wmin = rank_witness(family, m, n, s, r, f, false);
        Mat wmax = rank_witness(family, m, n, s, r, f, true);
        add("min-rank-witness",
            space->contains(wmin) && wmin.rank() == s,
            "explicit member of rank s");
        add("max-rank-witness",
            space->contains(wmax) && wmax.rank() == r,
            "explicit member of rank r");
        if (echelon_expected)
            add("all-echelon-sampled", all_ech, "sampled elements echelon");
    }

    return report;
}

}  // namespace rankrange
