#include "weitz/generic2x2.hpp"

#include <stdexcept>

#include "weitz/io.hpp"

namespace weitz {

std::vector<std::string> cbar_names() { return {"p", "q", "u", "t", "v"}; }
std::vector<int> cbar_weights() { return {1, 1, 2, 2, 2}; }

CPoly cbar_var(CbarVar v) { return CPoly::var(kCbarVars, v); }

CPoly cbar_disc() { return parse_c("t^2-u*v", cbar_names()); }

TraceElem TraceElem::from_cbar(const CPoly& c) {
    TraceElem e;
    e.comp[0] = c;
    return e;
}

TraceElem TraceElem::basis(int tag) {
    TraceElem e;
    e.comp.at(tag) = CPoly::unit(kCbarVars);
    return e;
}

TraceElem TraceElem::gen_x() {
    TraceElem e = basis(1);
    e.comp[0] = Rat(1, 2) * cbar_var(VP);
    return e;
}

TraceElem TraceElem::gen_y() {
    TraceElem e = basis(2);
    e.comp[0] = Rat(1, 2) * cbar_var(VQ);
    return e;
}

bool TraceElem::is_zero() const {
    for (const auto& c : comp)
        if (!c.is_zero()) return false;
    return true;
}

TraceElem& TraceElem::operator+=(const TraceElem& o) {
    for (int i = 0; i < 4; ++i) comp[i] += o.comp[i];
    return *this;
}

TraceElem& TraceElem::operator-=(const TraceElem& o) {
    for (int i = 0; i < 4; ++i) comp[i] -= o.comp[i];
    return *this;
}

TraceElem operator*(const Rat& s, const TraceElem& e) {
    TraceElem r;
    for (int i = 0; i < 4; ++i) r.comp[i] = s * e.comp[i];
    return r;
}

TraceElem operator*(const CPoly& c, const TraceElem& e) {
    TraceElem r;
    for (int i = 0; i < 4; ++i) r.comp[i] = c * e.comp[i];
    return r;
}

namespace {

// Multiplication table of the module tags 1, x0, y0, [x0,y0] over Cbar.
// Derived from x0^2 = u/2, y0^2 = v/2, x0 y0 + y0 x0 = t (central) and
// verified against the honest matrix realization in the tests.
const std::vector<std::pair<int, CPoly>>& tag_product(int i, int j) {
    static const auto* table = [] {
        auto nm = cbar_names();
        auto P = [&](const char* s) { return parse_c(s, nm); };
        auto one = CPoly::unit(kCbarVars);
        auto* tb = new std::array<std::array<std::vector<std::pair<int, CPoly>>, 4>, 4>{};
        for (int k = 0; k < 4; ++k) {
            (*tb)[0][k] = {{k, one}};
            if (k) (*tb)[k][0] = {{k, one}};
        }
        (*tb)[1][1] = {{0, P("1/2*u")}};
        (*tb)[2][2] = {{0, P("1/2*v")}};
        (*tb)[1][2] = {{0, P("1/2*t")}, {3, P("1/2")}};
        (*tb)[2][1] = {{0, P("1/2*t")}, {3, P("-1/2")}};
        (*tb)[1][3] = {{1, P("-t")}, {2, P("u")}};
        (*tb)[3][1] = {{1, P("t")}, {2, P("-u")}};
        (*tb)[2][3] = {{1, P("-v")}, {2, P("t")}};
        (*tb)[3][2] = {{1, P("v")}, {2, P("-t")}};
        (*tb)[3][3] = {{0, P("t^2-u*v")}};
        return tb;
    }();
    return (*table)[i][j];
}

}  // namespace

TraceElem trace_mul(const TraceElem& a, const TraceElem& b) {
    TraceElem r;
    for (int i = 0; i < 4; ++i) {
        if (a.comp[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.comp[j].is_zero()) continue;
            CPoly cc = a.comp[i] * b.comp[j];
            for (const auto& [tag, coef] : tag_product(i, j)) r.comp[tag] += cc * coef;
        }
    }
    return r;
}

CPoly trace_of(const TraceElem& e) { return Rat(2) * e.comp[0]; }

std::array<int, 2> cbar_var_bidegree(int v) {
    switch (v) {
        case VP: return {1, 0};
        case VQ: return {0, 1};
        case VU: return {2, 0};
        case VT: return {1, 1};
        case VV: return {0, 2};
    }
    throw std::out_of_range("cbar variable");
}

std::array<int, 2> tag_bidegree(int tag) {
    switch (tag) {
        case 0: return {0, 0};
        case 1: return {1, 0};
        case 2: return {0, 1};
        case 3: return {1, 1};
    }
    throw std::out_of_range("trace tag");
}

TraceDerivation make_trace_derivation(CPoly dp, CPoly dq, TraceElem dx0, TraceElem dy0) {
    if (!dx0.comp[0].is_zero() || !dy0.comp[0].is_zero())
        throw std::invalid_argument("images of x0, y0 must have no scalar part");
    TraceDerivation d;
    d.dp = std::move(dp);
    d.dq = std::move(dq);
    d.dx0 = std::move(dx0);
    d.dy0 = std::move(dy0);
    TraceElem x0 = TraceElem::basis(1), y0 = TraceElem::basis(2);
    CPoly du = trace_of(trace_mul(d.dx0, x0) + trace_mul(x0, d.dx0));
    CPoly dt = trace_of(trace_mul(d.dx0, y0) + trace_mul(x0, d.dy0));
    CPoly dv = trace_of(trace_mul(d.dy0, y0) + trace_mul(y0, d.dy0));
    d.cbar.images = {d.dp, d.dq, du, dt, dv};
    return d;
}

TraceDerivation trace_derivation_from_matrix(const LinearDerivation& d) {
    if (d.m() != 2) throw std::invalid_argument("trace derivation needs a rank-2 matrix");
    const auto& a = d.matrix();
    CPoly p = cbar_var(VP), q = cbar_var(VQ);
    TraceElem x0 = TraceElem::basis(1), y0 = TraceElem::basis(2);
    auto comb_c = [&](const Rat& cx, const Rat& cy) { return cx * p + cy * q; };
    auto comb_m = [&](const Rat& cx, const Rat& cy) { return cx * x0 + cy * y0; };
    return make_trace_derivation(comb_c(a[0][0], a[1][0]), comb_c(a[0][1], a[1][1]),
                                 comb_m(a[0][0], a[1][0]), comb_m(a[0][1], a[1][1]));
}

TraceDerivation weitzenbock_trace_derivation() {
    return trace_derivation_from_matrix(LinearDerivation::basic(2));
}

TraceDerivation chain5_trace_derivation() {
    return make_trace_derivation(cbar_var(VV), cbar_var(VP), TraceElem::zero(),
                                 TraceElem::basis(1));
}

TraceElem apply(const TraceDerivation& d, const TraceElem& e) {
    TraceElem x0 = TraceElem::basis(1), y0 = TraceElem::basis(2);
    TraceElem dcomm = trace_mul(d.dx0, y0) - trace_mul(y0, d.dx0) + trace_mul(x0, d.dy0) -
                      trace_mul(d.dy0, x0);
    TraceElem out;
    for (int tag = 0; tag < 4; ++tag)
        out += apply(d.cbar, e.comp[tag]) * TraceElem::basis(tag);
    out += e.comp[1] * d.dx0;
    out += e.comp[2] * d.dy0;
    out += e.comp[3] * dcomm;
    return out;
}

std::vector<CPoly> cbar_constants_weitzenbock() {
    auto nm = cbar_names();
    return {parse_c("p", nm), parse_c("u", nm), parse_c("p*t-q*u", nm),
            parse_c("t^2-u*v", nm), parse_c("q^2*u-2*p*q*t+p^2*v", nm)};
}

std::vector<CPoly> cbar_constants_chain5() {
    auto nm = cbar_names();
    return {parse_c("u", nm), parse_c("t^2-u*v", nm), parse_c("t*p-q*u-1/4*v^2", nm),
            parse_c("t^3-3/2*u*t*v+3/2*u^2*p", nm),
            parse_c("3*t^2*q-3/2*t*v*p+1/4*v^3-3*u*v*q+9/4*u*p^2", nm)};
}

std::vector<std::string> omega_names() {
    return {"x11", "x12", "x21", "x22", "y11", "y12", "y21", "y22"};
}

namespace {
CPoly ov(int i) { return CPoly::var(kOmegaVars, i); }
}  // namespace

GenericMatrix gm_generic_x() {
    GenericMatrix m;
    for (int i = 0; i < 4; ++i) m.a[i] = ov(i);
    return m;
}

GenericMatrix gm_generic_y() {
    GenericMatrix m;
    for (int i = 0; i < 4; ++i) m.a[i] = ov(4 + i);
    return m;
}

GenericMatrix gm_add(const GenericMatrix& m, const GenericMatrix& n) {
    GenericMatrix r;
    for (int i = 0; i < 4; ++i) r.a[i] = m.a[i] + n.a[i];
    return r;
}

GenericMatrix gm_sub(const GenericMatrix& m, const GenericMatrix& n) {
    GenericMatrix r;
    for (int i = 0; i < 4; ++i) r.a[i] = m.a[i] - n.a[i];
    return r;
}

GenericMatrix gm_mul(const GenericMatrix& m, const GenericMatrix& n) {
    GenericMatrix r;
    r.a[0] = m.a[0] * n.a[0] + m.a[1] * n.a[2];
    r.a[1] = m.a[0] * n.a[1] + m.a[1] * n.a[3];
    r.a[2] = m.a[2] * n.a[0] + m.a[3] * n.a[2];
    r.a[3] = m.a[2] * n.a[1] + m.a[3] * n.a[3];
    return r;
}

GenericMatrix gm_scale(const CPoly& c, const GenericMatrix& m) {
    GenericMatrix r;
    for (int i = 0; i < 4; ++i) r.a[i] = c * m.a[i];
    return r;
}

CPoly gm_trace(const GenericMatrix& m) { return m.a[0] + m.a[3]; }

namespace {

GenericMatrix gm_identity() {
    GenericMatrix m;
    m.a[0] = CPoly::unit(kOmegaVars);
    m.a[3] = CPoly::unit(kOmegaVars);
    return m;
}

GenericMatrix gm_traceless(const GenericMatrix& m) {
    return gm_sub(m, gm_scale(Rat(1, 2) * gm_trace(m), gm_identity()));
}

}  // namespace

std::vector<CPoly> cbar_realization() {
    GenericMatrix x = gm_generic_x(), y = gm_generic_y();
    GenericMatrix x0 = gm_traceless(x), y0 = gm_traceless(y);
    return {gm_trace(x), gm_trace(y), gm_trace(gm_mul(x0, x0)), gm_trace(gm_mul(x0, y0)),
            gm_trace(gm_mul(y0, y0))};
}

GenericMatrix matrix_realization(const TraceElem& e) {
    static const std::vector<CPoly> images = cbar_realization();
    GenericMatrix x0 = gm_traceless(gm_generic_x()), y0 = gm_traceless(gm_generic_y());
    std::array<GenericMatrix, 4> tags = {gm_identity(), x0, y0,
                                         gm_sub(gm_mul(x0, y0), gm_mul(y0, x0))};
    GenericMatrix out;
    for (int tag = 0; tag < 4; ++tag) {
        if (e.comp[tag].is_zero()) continue;
        out = gm_add(out, gm_scale(e.comp[tag].substitute(images), tags[tag]));
    }
    return out;
}

ExpTraceResult exp_w_delta(const CPoly& w, const TraceDerivation& d) {
    if (!apply(d.cbar, w).is_zero())
        throw std::invalid_argument("exp_w_delta: w is not a constant of the derivation");
    ExpTraceResult res;
    auto exp_gen = [&](const TraceElem& gen) {
        TraceElem sum, chain = gen;
        CPoly wpow = CPoly::unit(kCbarVars);
        Rat fact = 1;
        long k = 0;
        while (!chain.is_zero()) {
            sum += Rat(1 / fact) * (wpow * chain);
            chain = apply(d, chain);
            wpow = wpow * w;
            ++k;
            fact *= k;
            if (k > 500) throw NotLocallyNilpotent("trace exp series did not terminate");
        }
        return sum;
    };
    res.x_image = exp_gen(TraceElem::gen_x());
    res.y_image = exp_gen(TraceElem::gen_y());
    auto quot = w.divide_exact(cbar_disc());
    if (quot) {
        res.r_membership = true;
        res.w_quotient = *quot;
    }
    return res;
}

}  // namespace weitz
