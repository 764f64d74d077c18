#pragma once

#include <map>
#include <utility>
#include <vector>

#include "weitz/context.hpp"
#include "weitz/rational.hpp"

namespace weitz {

// Bivariate power series truncated by total degree, with exact rational
// coefficients.  Arithmetic keeps the smaller truncation of the operands.
class TruncSeries2 {
  public:
    using Coeffs = std::map<std::pair<int, int>, Rat>;

    explicit TruncSeries2(int trunc) : trunc_(trunc) {}
    static TruncSeries2 one(int trunc);
    static TruncSeries2 monomial(int trunc, int i, int j, const Rat& c = Rat(1));

    int trunc() const { return trunc_; }
    const Coeffs& coeffs() const { return c_; }
    Rat coefficient(int i, int j) const;
    void add(int i, int j, const Rat& v);  // accumulates; drops beyond trunc

    TruncSeries2& operator+=(const TruncSeries2& o);
    TruncSeries2& operator-=(const TruncSeries2& o);
    friend TruncSeries2 operator+(TruncSeries2 a, const TruncSeries2& b) { return a += b; }
    friend TruncSeries2 operator-(TruncSeries2 a, const TruncSeries2& b) { return a -= b; }
    friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b);
    friend TruncSeries2 operator*(const Rat& s, const TruncSeries2& a);

    // Multiplicative inverse; requires a nonzero constant term.
    TruncSeries2 inverse() const;

    bool operator==(const TruncSeries2&) const = default;

  private:
    int trunc_;
    Coeffs c_;
};

// Two-variable Schur polynomial: sum of t1^{l1-k} t2^{l2+k}, k = 0..l1-l2.
TruncSeries2 schur2(int l1, int l2, int trunc);

// Hilbert series of a rank-2 context with respect to its multidegree:
// coefficient at (i, j) is the dimension of the (i, j) component.
TruncSeries2 hilbert_of_context(const AlgebraContext& ctx, int trunc);

// Multiplicities of Schur polynomials per partition (l1 >= l2 >= 0).
using MultTable = std::map<std::pair<int, int>, long>;

// Greedy decomposition degree by degree; throws if the series is not an
// integral combination of Schur polynomials up to its truncation.
MultTable schur_decompose(const TruncSeries2& f);

// M(t, u): multiplicity at t^{l1} u^{l2}.  M'(t, v): at t^{l1-l2} v^{l2}.
TruncSeries2 mult_series_M(const MultTable& m, int trunc);
TruncSeries2 mult_series_Mprime(const MultTable& m, int trunc);

// Reconstruction of the symmetric series from its multiplicities through the
// exact division of t1 M'(t1, t1 t2) - t2 M'(t2, t1 t2) by t1 - t2.
TruncSeries2 mult_inverse(const MultTable& m, int trunc);

// Round trip f -> multiplicities -> f.
bool inverse_multiplicity_check(const TruncSeries2& f);

// Substitute t1 -> t^w1, t2 -> t^w2; index d of the result is the coefficient
// of t^d, for d up to the truncation order.
std::vector<Rat> specialize(const TruncSeries2& s, int w1, int w2);

// Catalan numbers 1, 1, 2, 5, 14, ... through the quadratic recurrence of
// their generating series c(v) = 1 + v c(v)^2.
std::vector<Rat> catalan_coefficients(int nmax);

// Hilbert series, in (t, v), of the constants of the rank-2 free algebra
// under the basic derivation: the multiplicity series of 1/(1-t1-t2), with
// the hook-difference multiplicity at each partition.
TruncSeries2 constants_hilbert_free2(int trunc);

// Generating series a(t, v) = t + v c(v) of a bihomogeneous system of free
// generators of the same algebra of constants; 1/(1-a) is its Hilbert series.
TruncSeries2 free_generators_series(int trunc);

}  // namespace weitz
