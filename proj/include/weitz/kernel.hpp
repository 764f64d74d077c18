#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "weitz/context.hpp"
#include "weitz/derivation.hpp"
#include "weitz/matrix.hpp"

namespace weitz {

// Thrown when a requested graded component is larger than the configured
// dense-elimination cap (default 4096 basis elements; override with the
// WEITZ_MAX_LAYER environment variable).
struct LayerCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long layer_cap();

// Exact kernel of the derivation restricted to one graded component of the
// context.  Result vectors are monic at their earliest basis key and sorted
// by it; the computation splits into connected blocks of the coefficient
// matrix first, which recovers the finest compatible grading automatically.
std::vector<CtxElem> kernel_at(const AlgebraContext& ctx, const LinearDerivation& d,
                               const std::vector<int>& multidegree);
std::vector<CtxElem> kernel_layer(const AlgebraContext& ctx, const LinearDerivation& d,
                                  int degree);

bool is_constant(const AlgebraContext& ctx, const LinearDerivation& d, const CtxElem& x);
bool is_constant(const LinearDerivation& d, const NCPoly& f);
bool is_constant(const LinearDerivation& d, const CPoly& f);

// Free-algebra element carried by a free-context coordinate vector.
NCPoly nc_from_ctx(const CtxElem& x, int arity);

// Sum over the occurrences of x_j of replacing that occurrence by a fresh
// last variable (arity grows by one).
NCPoly partial_linearization(const NCPoly& f, int j);

// A multihomogeneous element generates an irreducible covariant iff every
// substitution x_new -> x_i (i < j) of its partial linearization in x_j
// vanishes; checks all j.
bool highest_weight_test(const NCPoly& f);

// Rank of the span of a family, by exact elimination on their coordinates.
long span_rank(const std::vector<CtxElem>& xs);
long span_rank(const std::vector<NCPoly>& fs);
long span_rank(const std::vector<CPoly>& fs);

// n-fold application of e -> g1*e*g2 - g2*e*g1, where g1 and g2 are the
// context images of the first two generators.
CtxElem lr_operator(const AlgebraContext& ctx, const CtxElem& e, int n);
NCPoly lr_operator(const NCPoly& f, int n);

// Comparison of the constants of one multidegree component of the free
// algebra with those of a quotient context of the same rank: dimensions on
// both sides, and whether reduction maps the free constants onto the
// quotient's (it always maps into them).
struct LiftingReport {
    long free_dim = 0;
    long quotient_dim = 0;
    bool surjective = false;
};

LiftingReport lifting_check(const LinearDerivation& d, const AlgebraContext& quotient,
                            const std::vector<int>& multidegree);

}  // namespace weitz
