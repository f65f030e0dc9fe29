#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankrange/affine.hpp"

namespace rankrange {

/// Catalog of dimension bounds. Formulas are field-free integers; field
/// hypotheses are not checked here.
enum class BoundFamily {
    RangeMxn,          // r max(m,n) - C(s+1,2)
    Flanders,          // r max(m,n)
    RankBelow,         // mn - C(s+1,2)
    AntBelow,          // n(n-1)/2 - s^2/4
    AntRange,          // (n-1) r/2 - s^2/4
    EchelonConstant,   // rn - r(r+1)/2
    EchelonRangeLower, // sn - s(s+1)/2 + n - s
    EchelonRangeUpper, // rn - r(r+1)/2 + 1
    SymReal,           // floor(r/2)(n - floor(r/2))
    MxnRealConstant,   // r max(m,n) - r(r+1)/2
    AntReal,           // piecewise in n vs rank
    WestwickLower,     // max(m,n) - r + 1
    WestwickUpper,     // m + n - 2r + 1
    IlicLandsberg,     // n - r + 1
    SymOdd,            // 1
    WeakAnyField,      // mn - C(s+1,2)
    WeakCharNot2,      // mn - (min(m,n) - r) r
};

struct BoundQuery {
    BoundFamily family;
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t s = 0;
    std::int64_t r = 0;
};

std::int64_t bound(const BoundQuery& q);

std::optional<BoundFamily> bound_family_from_name(const std::string& name);
std::string bound_family_name(BoundFamily f);

/// Families realized as explicit affine spaces.
enum class ConstructFamily {
    RangeMxn,
    EchelonConstant,
    EchelonRange,
    CounterexampleF3,
};

std::optional<ConstructFamily> construct_family_from_name(
    const std::string& name);
std::string construct_family_name(ConstructFamily f);

/// Rows 1..s carry a unit diagonal with zeros below it inside the s x s
/// corner, rows s+1..r are fully free, rows past r are zero; when m > n the
/// construction is built for the transposed shape and transposed back.
/// Dimension r max(m,n) - s(s+1)/2, rank range exactly [s, r] for
/// |K| >= r+2 and characteristic != 2.
AffineSpace construct_range(std::size_t m, std::size_t n, std::size_t s,
                            std::size_t r, const Fp& f);

/// Unit pivots on the diagonal of rows 1..r, free entries above, zero rows
/// below. All elements in row echelon form with rank exactly r; dimension
/// rn - r(r+1)/2.
AffineSpace construct_echelon_constant(std::size_t m, std::size_t n,
                                       std::size_t r, const Fp& f);

/// Rows 1..s as in the constant case; rows s+1..r are successive right
/// shifts of one free length-(n-s) vector; dimension
/// sn - s(s+1)/2 + n - s, rank range exactly [s, r].
AffineSpace construct_echelon_range(std::size_t m, std::size_t n,
                                    std::size_t s, std::size_t r, const Fp& f);

/// The 3x3 family over F_3 with diagonal (a, a+1, a+2) and free upper
/// triangle: every element has rank 2 while the dimension is 4, one more
/// than the range-mxn formula allows for larger fields.
AffineSpace construct_counterexample_f3();

struct CheckResult {
    std::string name;
    bool pass;
    std::string details;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Builds the family and checks its dimension against the catalog formula
/// and its rank profile against the attainment claims. Exhaustive within
/// the element budget, sampled (with explicit rank witnesses) above it.
/// For CounterexampleF3 the dimension excess over the catalog formula is
/// the expected outcome and reported as a passing check.
VerificationReport verify_family(ConstructFamily family, std::size_t m,
                                 std::size_t n, std::size_t s, std::size_t r,
                                 const Fp& f,
                                 std::uint64_t budget = kDefaultElementBudget,
                                 std::uint64_t seed = 0, unsigned threads = 1);

}  // namespace rankrange
