#pragma once

#include <cstdint>
#include <vector>

#include "rankrange/field.hpp"

namespace rankrange {

using Vec = std::vector<std::uint32_t>;

/// Canonical (RREF) description of a linear subspace of K^h given by row
/// vectors: unit pivots, zeros above and below each pivot, pivot columns
/// strictly increasing. Two generating sets span the same space iff their
/// Rref values are equal.
struct Rref {
    std::vector<Vec> basis;          // nonzero RREF rows
    std::vector<std::size_t> pivots; // 0-based pivot column per basis row

    std::size_t dim() const { return basis.size(); }

    friend bool operator==(const Rref&, const Rref&) = default;
};

Rref rref(std::vector<Vec> gens, const Fp& f);

/// Reduces v modulo the span: subtracts pivot rows so every pivot coordinate
/// of the result is zero. The result is zero iff v is in the span.
Vec reduce_mod(const Rref& space, Vec v, const Fp& f);

bool in_span(const Rref& space, const Vec& v, const Fp& f);

/// Coordinate projection of a set of vectors; coords are 0-based indices
/// into the source space.
std::vector<Vec> project_coords(const std::vector<Vec>& vecs,
                                const std::vector<std::size_t>& coords);

}  // namespace rankrange
