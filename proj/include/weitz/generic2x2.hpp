#pragma once

#include <array>
#include <string>
#include <vector>

#include "weitz/cpoly.hpp"
#include "weitz/derivation.hpp"

namespace weitz {

// Pure trace algebra of two generic 2x2 matrices.  Scalars live in
// Cbar = Q[p,q,u,t,v] with p = tr(x), q = tr(y), u = tr(x0^2), t = tr(x0 y0),
// v = tr(y0^2), where x0, y0 are the traceless parts of the generic matrices.
inline constexpr int kCbarVars = 5;
enum CbarVar { VP = 0, VQ = 1, VU = 2, VT = 3, VV = 4 };

std::vector<std::string> cbar_names();    // p,q,u,t,v
std::vector<int> cbar_weights();          // degrees 1,1,2,2,2 in the matrix grading
CPoly cbar_var(CbarVar v);
CPoly cbar_disc();                        // t^2 - u*v = [x0,y0]^2 = -4*det-ish discriminant

// The mixed trace algebra T = Cbar + Cbar*x0 + Cbar*y0 + Cbar*[x0,y0],
// a free Cbar-module of rank 4; comp[k] is the coordinate at 1, x0, y0,
// [x0,y0] respectively.
struct TraceElem {
    std::array<CPoly, 4> comp{CPoly(kCbarVars), CPoly(kCbarVars), CPoly(kCbarVars),
                              CPoly(kCbarVars)};

    static TraceElem zero() { return {}; }
    static TraceElem from_cbar(const CPoly& c);
    static TraceElem basis(int tag);  // 1, x0, y0, [x0,y0]
    static TraceElem gen_x();         // x = p/2 + x0
    static TraceElem gen_y();         // y = q/2 + y0

    bool is_zero() const;
    TraceElem& operator+=(const TraceElem& o);
    TraceElem& operator-=(const TraceElem& o);
    friend TraceElem operator+(TraceElem a, const TraceElem& b) { return a += b; }
    friend TraceElem operator-(TraceElem a, const TraceElem& b) { return a -= b; }
    bool operator==(const TraceElem& o) const { return comp == o.comp; }
};

TraceElem operator*(const Rat& s, const TraceElem& e);
TraceElem operator*(const CPoly& c, const TraceElem& e);
TraceElem trace_mul(const TraceElem& a, const TraceElem& b);
CPoly trace_of(const TraceElem& e);  // 2 * comp[0]

// Bidegrees in (x, y) of the Cbar variables and of the module tags.
std::array<int, 2> cbar_var_bidegree(int v);
std::array<int, 2> tag_bidegree(int tag);

// Derivation of T determined by delta(p), delta(q) in Cbar and
// delta(x0), delta(y0) in Cbar*x0 + Cbar*y0 + Cbar*[x0,y0]; the action on
// u, t, v is induced through the traces of products.
struct TraceDerivation {
    CPoly dp{kCbarVars}, dq{kCbarVars};
    TraceElem dx0, dy0;
    CDerivation cbar;  // induced images of p,q,u,t,v
};

TraceDerivation make_trace_derivation(CPoly dp, CPoly dq, TraceElem dx0, TraceElem dy0);

// Derivation induced on T by a linear derivation of span{x, y}.
TraceDerivation trace_derivation_from_matrix(const LinearDerivation& d);

// delta(x) = 0, delta(y) = x: the derivation induced by the basic rank-2 one.
TraceDerivation weitzenbock_trace_derivation();
// delta(x) = v/2, delta(y) = x: basic on the chain q/2 -> p/2 -> v/2 -> t -> u.
TraceDerivation chain5_trace_derivation();

TraceElem apply(const TraceDerivation& d, const TraceElem& e);

// Generating sets of the constants of the two derivations above, in Cbar.
std::vector<CPoly> cbar_constants_weitzenbock();
std::vector<CPoly> cbar_constants_chain5();

// --- independent oracle: honest 2x2 matrices over Omega = Q[x11..y22] ---

inline constexpr int kOmegaVars = 8;
std::vector<std::string> omega_names();

// Row-major 2x2 matrix with entries in Omega.
struct GenericMatrix {
    std::array<CPoly, 4> a{CPoly(kOmegaVars), CPoly(kOmegaVars), CPoly(kOmegaVars),
                           CPoly(kOmegaVars)};
    bool operator==(const GenericMatrix& o) const { return a == o.a; }
};

GenericMatrix gm_generic_x();
GenericMatrix gm_generic_y();
GenericMatrix gm_add(const GenericMatrix& m, const GenericMatrix& n);
GenericMatrix gm_sub(const GenericMatrix& m, const GenericMatrix& n);
GenericMatrix gm_mul(const GenericMatrix& m, const GenericMatrix& n);
GenericMatrix gm_scale(const CPoly& c, const GenericMatrix& m);
CPoly gm_trace(const GenericMatrix& m);

// Images of p,q,u,t,v as polynomials in the 8 matrix entries.
std::vector<CPoly> cbar_realization();

// Evaluate a TraceElem as an honest 2x2 matrix of polynomials.
GenericMatrix matrix_realization(const TraceElem& e);

struct ExpTraceResult {
    TraceElem x_image, y_image;
    bool r_membership = false;  // (t^2-uv) | w certifies images lie in R
    CPoly w_quotient{kCbarVars};
};

// exp(w * delta) on the generators x, y, for w a constant of the derivation.
ExpTraceResult exp_w_delta(const CPoly& w, const TraceDerivation& d);

}  // namespace weitz
