#pragma once

#include <cstddef>
#include <vector>

#include "weitz/rational.hpp"

namespace weitz {

// Dense matrix over Q.  Elimination is exact: mpq_class keeps every entry in
// lowest terms, so no pivoting strategy beyond first-nonzero is needed and the
// result is deterministic.
struct RatMat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<Rat>> a;

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, std::vector<Rat>(c, Rat(0))) {}
};

// Reduced row echelon form in place; returns pivot column indices, ascending.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

// Basis of the right nullspace {x : M x = 0}, one vector per free column,
// monic at its free column, reduced against the pivot columns.  Vectors are
// ordered by free column index; the result is canonical for a fixed column
// order.
std::vector<std::vector<Rat>> kernel_basis(RatMat m);

}  // namespace weitz
