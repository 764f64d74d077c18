#include "weitz/matrix.hpp"

#include <algorithm>

namespace weitz {

std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.a[p][c] == 0) ++p;
        if (p == m.rows) continue;
        std::swap(m.a[p], m.a[r]);
        Rat inv = 1 / m.a[r][c];
        for (std::size_t j = c; j < m.cols; ++j) m.a[r][j] *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.a[i][c] == 0) continue;
            Rat f = m.a[i][c];
            for (std::size_t j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::vector<std::vector<Rat>> kernel_basis(RatMat m) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace weitz
