#pragma once

#include <cstdint>
#include <string>

#include "rankrange/errors.hpp"

namespace rankrange {

/// Prime field F_p with residues stored as plain machine integers in
/// {0,...,p-1}. Immutable value type; arithmetic works on raw residues.
class Fp {
  public:
    /// Largest accepted modulus; p^2 then fits comfortably in 64 bits.
    static constexpr std::uint64_t kMaxModulus = 1u << 20;

    explicit Fp(std::uint64_t p);

    std::uint32_t modulus() const { return p_; }
    bool has_cardinality_at_least(std::uint64_t k) const { return p_ >= k; }
    bool char_is_two() const { return p_ == 2; }

    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }
    /// Multiplicative inverse by extended Euclid.
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
        return mul(a, inv(b));
    }

    friend bool operator==(const Fp&, const Fp&) = default;

  private:
    std::uint32_t p_;
};

/// A residue tagged with its field. Mixed-field arithmetic throws
/// FieldMismatch.
struct Elem {
    std::uint32_t value;
    Fp field;

    Elem(std::uint32_t v, Fp f) : value(v), field(f) {
        if (v >= f.modulus()) value = v % f.modulus();
    }

    friend bool operator==(const Elem&, const Elem&) = default;
};

Elem operator+(const Elem& a, const Elem& b);
Elem operator-(const Elem& a, const Elem& b);
Elem operator*(const Elem& a, const Elem& b);
Elem operator/(const Elem& a, const Elem& b);
Elem operator-(const Elem& a);
Elem inv(const Elem& a);

}  // namespace rankrange
