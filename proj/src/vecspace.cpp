#include "rankrange/vecspace.hpp"

#include "rankrange/errors.hpp"

namespace rankrange {

Rref rref(std::vector<Vec> gens, const Fp& f) {
    Rref out;
    if (gens.empty()) return out;
    std::size_t h = gens[0].size();
    for (const Vec& g : gens)
        if (g.size() != h) throw ShapeError("generators of unequal length");

    std::size_t rows = gens.size();
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < h && row < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (gens[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(gens[row], gens[piv]);
        std::uint32_t pinv = f.inv(gens[row][col]);
        for (std::size_t j = col; j < h; ++j)
            gens[row][j] = f.mul(gens[row][j], pinv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || gens[i][col] == 0) continue;
            std::uint32_t factor = gens[i][col];
            for (std::size_t j = col; j < h; ++j)
                gens[i][j] = f.sub(gens[i][j], f.mul(factor, gens[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    out.basis.assign(gens.begin(), gens.begin() + row);
    out.pivots = std::move(pivots);
    return out;
}

Vec reduce_mod(const Rref& space, Vec v, const Fp& f) {
    for (std::size_t i = 0; i < space.basis.size(); ++i) {
        std::uint32_t c = v[space.pivots[i]];
        if (c == 0) continue;
        const Vec& b = space.basis[i];
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = f.sub(v[j], f.mul(c, b[j]));
    }
    return v;
}

bool in_span(const Rref& space, const Vec& v, const Fp& f) {
    Vec r = reduce_mod(space, v, f);
    for (std::uint32_t x : r)
        if (x != 0) return false;
    return true;
}

std::vector<Vec> project_coords(const std::vector<Vec>& vecs,
                                const std::vector<std::size_t>& coords) {
    std::vector<Vec> out;
    out.reserve(vecs.size());
    for (const Vec& v : vecs) {
        Vec w(coords.size());
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (coords[k] >= v.size())
                throw IndexError("projection coordinate out of range");
            w[k] = v[coords[k]];
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace rankrange
