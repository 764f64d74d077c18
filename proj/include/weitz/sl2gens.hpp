#pragma once

#include <map>
#include <vector>

#include "weitz/ncpoly.hpp"

namespace weitz {

// One free generator of the invariants of the rank-2 free algebra under the
// unimodular group, produced by the inductive doubling procedure: from every
// product omega of already-built generators with total degree 2n, the new
// generator x*omega*y - y*omega*x of degree 2n + 2 (the empty product gives
// the first generator, the commutator of x and y).
struct Sl2Generator {
    int id = 0;                // 1-based, in construction order
    int degree = 0;            // even
    std::vector<int> factors;  // ids of the product it was built from
    NCPoly poly{2};
};

// All generators of degree <= maxdeg, in construction order.  Per even
// degree 2k the procedure adds one generator per product, Catalan-many.
std::vector<Sl2Generator> sl2_generators(int maxdeg);

// Products of generators with the given total degree, ordered
// lexicographically by their index tuples; degree 0 yields the unit.
std::vector<NCPoly> sl2_products(const std::vector<Sl2Generator>& gens, int degree);
std::vector<std::vector<int>> sl2_product_tuples(const std::vector<Sl2Generator>& gens,
                                                 int degree);

std::map<int, long> sl2_generator_counts(const std::vector<Sl2Generator>& gens);

// Smallest monomial of a nonzero element in the term order (degree, then
// letters left to right with x before y).
Word minimal_monomial(const NCPoly& f);

// Prefix-balanced words: every prefix has at least as many x's as y's and
// the totals are equal.
bool is_dyck(const Word& w);
std::vector<Word> dyck_words(int half);  // all of length 2 * half, sorted

}  // namespace weitz
