#include "rankrange/field.hpp"

namespace rankrange {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_same_field(const Elem& a, const Elem& b) {
    if (!(a.field == b.field))
        throw FieldMismatch("elements belong to different fields");
}

}  // namespace

Fp::Fp(std::uint64_t p) {
    if (p > kMaxModulus)
        throw ModulusTooLarge("modulus " + std::to_string(p) + " exceeds " +
                              std::to_string(kMaxModulus));
    if (!is_prime(p))
        throw CompositeModulus("modulus " + std::to_string(p) +
                               " is not prime");
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t Fp::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of 0");
    std::int64_t r0 = p_, r1 = a;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    return reduce(t0);
}

Elem operator+(const Elem& a, const Elem& b) {
    require_same_field(a, b);
    return {a.field.add(a.value, b.value), a.field};
}

Elem operator-(const Elem& a, const Elem& b) {
    require_same_field(a, b);
    return {a.field.sub(a.value, b.value), a.field};
}

Elem operator*(const Elem& a, const Elem& b) {
    require_same_field(a, b);
    return {a.field.mul(a.value, b.value), a.field};
}

Elem operator/(const Elem& a, const Elem& b) {
    require_same_field(a, b);
    return {a.field.div(a.value, b.value), a.field};
}

Elem operator-(const Elem& a) { return {a.field.neg(a.value), a.field}; }

Elem inv(const Elem& a) { return {a.field.inv(a.value), a.field}; }

}  // namespace rankrange
