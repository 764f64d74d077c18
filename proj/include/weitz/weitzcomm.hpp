#pragma once

#include <vector>

#include "weitz/cpoly.hpp"
#include "weitz/derivation.hpp"

namespace weitz {

// Localized-constant generators of a nonzero triangular linear derivation in
// Jordan form (first block of size >= 2, so d(x2) = x1, d(x1) = 0):
// z_j = sum_{k=0..p_j} d^k(x_j)/k! * (-x2)^k * x1^{p_j - k}, j = 3..m, where
// p_j is the nilpotency index of x_j.  Returns {x1, z_3, ..., z_m}; every
// entry is a polynomial constant, and together they generate all constants
// after inverting x1.
std::vector<CPoly> z_generators(const JordanType& jt);

// Products of the generators with total degree d span the full degree-d
// space of constants, for every d <= maxdeg.  Checks first that each
// generator is itself a homogeneous constant.
bool generates_constants(const std::vector<CPoly>& gens, const LinearDerivation& d,
                         int maxdeg);

// Localized variant: for each degree-d kernel element f (d <= maxdeg) some
// x1^N * f with N <= shift_cap lies in the span of the generator products.
bool generates_constants_localized(const std::vector<CPoly>& gens,
                                   const LinearDerivation& d, int maxdeg, int shift_cap);

// Maximal number of algebraically independent elements among the given
// polynomials: exact Jacobian rank (evaluation probes, then symbolic minors).
long transcendence_rank(const std::vector<CPoly>& gens);

// Classical generating sets of the full constant algebras (not localized).
std::vector<CPoly> nowicki_basic3();  // blocks (3)
std::vector<CPoly> nowicki_basic4();  // blocks (4)
std::vector<CPoly> nowicki_basic5();  // blocks (5)
std::vector<CPoly> nowicki_22();      // blocks (2,2)
std::vector<CPoly> nowicki_32();      // blocks (3,2)

// The triangular derivation d(x) = -2y, d(y) = z, d(z) = 0 on K[x,y,z], its
// quadratic constant w = xz + y^2, the scaled derivation w*d, and the
// automorphism exp(w*d) with images x - 2wy - w^2 z, y + wz, z.
LinearDerivation nagata_linear();
CPoly nagata_w();
CDerivation nagata_delta();
CEndo nagata_automorphism();

// The scaled derivation w*d has the same constants as d: degreewise equality
// of the kernels up to maxdeg.
bool nagata_kernel_match(int maxdeg);

}  // namespace weitz
