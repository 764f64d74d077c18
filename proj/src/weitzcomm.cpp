#include "weitz/weitzcomm.hpp"

#include <algorithm>
#include <stdexcept>

#include "weitz/context.hpp"
#include "weitz/io.hpp"
#include "weitz/kernel.hpp"
#include "weitz/matrix.hpp"

namespace weitz {

std::vector<CPoly> z_generators(const JordanType& jt) {
    const int m = jt.total();
    if (jt.blocks.empty() || jt.blocks[0] < 2)
        throw std::invalid_argument("z_generators: needs a nonzero derivation (first block >= 2)");
    LinearDerivation d = LinearDerivation::from_jordan(jt);
    std::vector<CPoly> gens;
    gens.push_back(CPoly::var(m, 0));
    const CPoly minus_x2 = Rat(-1) * CPoly::var(m, 1);
    const CPoly x1 = CPoly::var(m, 0);
    for (int j = 2; j < m; ++j) {
        CPoly z = CPoly::zero(m);
        CPoly dk = CPoly::var(m, j);  // d^k(x_j)
        std::vector<CPoly> powers;    // d^0(x_j), d^1(x_j), ...
        while (!dk.is_zero()) {
            powers.push_back(dk);
            dk = apply(d, dk);
        }
        const int pj = static_cast<int>(powers.size()) - 1;
        Rat fact(1);
        for (int k = 0; k <= pj; ++k) {
            if (k > 0) fact *= k;
            z += (1 / fact) * (powers[static_cast<std::size_t>(k)] * minus_x2.pow(static_cast<unsigned>(k)) *
                               x1.pow(static_cast<unsigned>(pj - k)));
        }
        gens.push_back(z);
    }
    return gens;
}

namespace {

// All products of gens (by nondecreasing generator index) of total degree
// exactly d; degrees of gens must be positive.
void enumerate_products(const std::vector<CPoly>& gens, const std::vector<int>& degs,
                        std::size_t first, int remaining, const CPoly& acc,
                        std::vector<CPoly>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = first; i < gens.size(); ++i) {
        if (degs[i] > remaining) continue;
        enumerate_products(gens, degs, i, remaining - degs[i], acc * gens[i], out);
    }
}

std::vector<CPoly> products_of_degree(const std::vector<CPoly>& gens,
                                      const std::vector<int>& degs, int d) {
    std::vector<CPoly> out;
    CPoly one = CPoly::constant(gens.empty() ? 1 : gens[0].arity(), 1);
    enumerate_products(gens, degs, 0, d, one, out);
    return out;
}

std::vector<int> homogeneous_degrees(const std::vector<CPoly>& gens) {
    std::vector<int> degs;
    for (const auto& g : gens) {
        const std::vector<int> ones(static_cast<std::size_t>(g.arity()), 1);
        long d = 0;
        if (!g.is_homogeneous(ones, &d) || d <= 0) return {};
        degs.push_back(static_cast<int>(d));
    }
    return degs;
}

}  // namespace

bool generates_constants(const std::vector<CPoly>& gens, const LinearDerivation& d,
                         int maxdeg) {
    if (gens.empty()) return false;
    const int m = gens[0].arity();
    if (m != d.m()) return false;
    std::vector<int> degs = homogeneous_degrees(gens);
    if (degs.empty()) return false;
    for (const auto& g : gens)
        if (!is_constant(d, g)) return false;
    AlgebraContext ctx = AlgebraContext::commutative(m);
    for (int deg = 1; deg <= maxdeg; ++deg) {
        long dim = static_cast<long>(kernel_layer(ctx, d, deg).size());
        long got = span_rank(products_of_degree(gens, degs, deg));
        if (got != dim) return false;
    }
    return true;
}

bool generates_constants_localized(const std::vector<CPoly>& gens,
                                   const LinearDerivation& d, int maxdeg, int shift_cap) {
    if (gens.empty()) return false;
    const int m = gens[0].arity();
    if (m != d.m()) return false;
    std::vector<int> degs = homogeneous_degrees(gens);
    if (degs.empty()) return false;
    for (const auto& g : gens)
        if (!is_constant(d, g)) return false;
    AlgebraContext ctx = AlgebraContext::commutative(m);
    const CPoly x1 = CPoly::var(m, 0);
    for (int deg = 1; deg <= maxdeg; ++deg) {
        for (const auto& k : kernel_layer(ctx, d, deg)) {
            CPoly f = CPoly::zero(m);
            for (const auto& [key, v] : k.c) f.add_term(key.e, v);
            bool hit = false;
            for (int n = 0; n <= shift_cap && !hit; ++n) {
                std::vector<CPoly> prods = products_of_degree(gens, degs, deg + n);
                long base = span_rank(prods);
                prods.push_back(x1.pow(static_cast<unsigned>(n)) * f);
                hit = span_rank(prods) == base;
            }
            if (!hit) return false;
        }
    }
    return true;
}

namespace {

CPoly det_poly(const std::vector<std::vector<CPoly>>& a, std::vector<int> rows,
               std::vector<int> cols) {
    const int m = a.empty() ? 1 : a[0][0].arity();
    if (rows.empty()) return CPoly::constant(m, 1);
    CPoly det = CPoly::zero(m);
    int r = rows[0];
    std::vector<int> rest(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const CPoly& entry = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols[j])];
        if (entry.is_zero()) continue;
        std::vector<int> sub;
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != j) sub.push_back(cols[l]);
        CPoly minor = det_poly(a, rest, sub);
        det += ((j % 2 == 0) ? Rat(1) : Rat(-1)) * (entry * minor);
    }
    return det;
}

void subsets(int n, int k, int first, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = first; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

long transcendence_rank(const std::vector<CPoly>& gens) {
    if (gens.empty()) return 0;
    const int m = gens[0].arity();
    const int n = static_cast<int>(gens.size());
    std::vector<std::vector<CPoly>> jac(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) jac[static_cast<std::size_t>(i)].push_back(gens[static_cast<std::size_t>(i)].partial(j));

    const long rmax = std::min(n, m);
    // Evaluation probes give lower bounds cheaply; fixed points keep the
    // computation deterministic.
    static const long probes[3][8] = {{2, 3, 5, 7, 11, 13, 17, 19},
                                      {1, -2, 3, -5, 7, -11, 13, -17},
                                      {4, 9, 25, 49, 121, 169, 289, 361}};
    long best = 0;
    for (const auto& probe : probes) {
        std::vector<Rat> point;
        for (int j = 0; j < m; ++j) point.emplace_back(probe[j]);
        RatMat mat(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                mat.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(point);
        best = std::max(best, static_cast<long>(rank(mat)));
        if (best == rmax) return best;
    }
    // Exact rank through symbolic minors from the largest size down.
    for (long r = rmax; r > best; --r) {
        std::vector<std::vector<int>> rsets, csets;
        std::vector<int> cur;
        subsets(n, static_cast<int>(r), 0, cur, rsets);
        subsets(m, static_cast<int>(r), 0, cur, csets);
        for (const auto& rs : rsets)
            for (const auto& cs : csets)
                if (!det_poly(jac, rs, cs).is_zero()) return r;
    }
    return best;
}

namespace {

std::vector<CPoly> parse_all(int m, const std::vector<const char*>& texts) {
    std::vector<std::string> names = default_names(m);
    std::vector<CPoly> out;
    for (const char* t : texts) out.push_back(parse_c(t, names));
    return out;
}

}  // namespace

std::vector<CPoly> nowicki_basic3() {
    return parse_all(3, {"x1", "x2^2 - 2*x1*x3"});
}

std::vector<CPoly> nowicki_basic4() {
    return parse_all(4, {"x1", "x2^2 - 2*x1*x3", "x2^3 - 3*x1*x2*x3 + 3*x1^2*x4",
                         "x2^2*x3^2 - 2*x2^3*x4 + 6*x1*x2*x3*x4 - 8/3*x1*x3^3 - 3*x1^2*x4^2"});
}

std::vector<CPoly> nowicki_basic5() {
    return parse_all(
        5, {"x1", "x2^2 - 2*x1*x3", "2*x2*x4 - x3^2 - 2*x1*x5",
            "x2^3 - 3*x1*x2*x3 + 3*x1^2*x4",
            "6*x2^2*x5 - 6*x2*x3*x4 + 2*x3^3 - 12*x1*x3*x5 + 9*x1*x4^2"});
}

std::vector<CPoly> nowicki_22() {
    return parse_all(4, {"x1", "x3", "x1*x4 - x2*x3"});
}

std::vector<CPoly> nowicki_32() {
    return parse_all(5, {"x1", "x4", "x1*x5 - x2*x4", "x2^2 - 2*x1*x3",
                         "2*x3*x4^2 - 2*x2*x4*x5 + x1*x5^2"});
}

LinearDerivation nagata_linear() {
    std::vector<std::vector<Rat>> a(3, std::vector<Rat>(3, Rat(0)));
    a[1][0] = -2;  // d(x) = -2y
    a[2][1] = 1;   // d(y) = z
    return LinearDerivation::from_matrix(a);
}

CPoly nagata_w() { return parse_c("x*z + y^2", default_names(3)); }

CDerivation nagata_delta() { return scaled_derivation(nagata_w(), nagata_linear()); }

CEndo nagata_automorphism() { return exp_scaled(nagata_w(), nagata_linear()); }

bool nagata_kernel_match(int maxdeg) {
    const LinearDerivation lin = nagata_linear();
    const CDerivation delta = nagata_delta();
    AlgebraContext ctx = AlgebraContext::commutative(3);
    for (int deg = 0; deg <= maxdeg; ++deg) {
        std::vector<CtxElem> lin_kernel = kernel_layer(ctx, lin, deg);
        // Dense kernel of the scaled derivation on the same layer.
        std::vector<BKey> keys = ctx.basis_layer(deg);
        std::map<Monomial, int> rows;
        std::vector<CPoly> images;
        for (const auto& k : keys) {
            CPoly mono = CPoly::zero(3);
            mono.add_term(k.e, 1);
            CPoly im = apply(delta, mono);
            for (const auto& [e, c] : im.terms()) rows.emplace(e, static_cast<int>(rows.size()));
            images.push_back(std::move(im));
        }
        RatMat mat(rows.size(), keys.size());
        for (std::size_t j = 0; j < images.size(); ++j)
            for (const auto& [e, c] : images[j].terms())
                mat.a[static_cast<std::size_t>(rows[e])][j] = c;
        std::size_t scaled_dim = kernel_basis(mat).size();
        if (scaled_dim != lin_kernel.size()) return false;
        // Every linear-kernel element must be killed by the scaled derivation.
        for (const auto& k : lin_kernel) {
            CPoly f = CPoly::zero(3);
            for (const auto& [key, v] : k.c) f.add_term(key.e, v);
            if (!apply(delta, f).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace weitz
