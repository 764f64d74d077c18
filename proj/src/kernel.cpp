#include "weitz/kernel.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace weitz {

long layer_cap() {
    if (const char* s = std::getenv("WEITZ_MAX_LAYER")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 4096;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Kernel of the map sending domain basis element j to images[j], expressed in
// coordinates on the domain.  Elimination runs per connected block of the
// sparse coefficient matrix; union over blocks equals the whole-matrix kernel
// because distinct blocks share no codomain key.
std::vector<std::vector<Rat>> kernel_coordinates(const std::vector<CtxElem>& images) {
    const int n = static_cast<int>(images.size());
    std::map<BKey, std::vector<int>> rows;  // codomain key -> domain columns hitting it
    for (int j = 0; j < n; ++j)
        for (const auto& [k, v] : images[j].c) rows[k].push_back(j);

    UnionFind uf(n);
    for (const auto& [k, cols] : rows)
        for (std::size_t i = 1; i < cols.size(); ++i) uf.unite(cols[0], cols[i]);

    std::map<int, std::vector<int>> components;  // root -> sorted domain columns
    for (int j = 0; j < n; ++j) components[uf.find(j)].push_back(j);

    std::vector<std::vector<Rat>> kernel;
    for (const auto& [root, cols] : components) {
        std::map<BKey, int> row_index;
        for (int j : cols)
            for (const auto& [k, v] : images[j].c)
                row_index.emplace(k, static_cast<int>(row_index.size()));
        if (row_index.empty()) {
            // zero block: every column is in the kernel
            for (int j : cols) {
                std::vector<Rat> v(n, Rat(0));
                v[j] = 1;
                kernel.push_back(std::move(v));
            }
            continue;
        }
        RatMat m(static_cast<int>(row_index.size()), static_cast<int>(cols.size()));
        for (std::size_t cj = 0; cj < cols.size(); ++cj)
            for (const auto& [k, v] : images[cols[cj]].c) m.a[row_index[k]][cj] = v;
        for (auto& kv : kernel_basis(m)) {
            std::vector<Rat> v(n, Rat(0));
            for (std::size_t cj = 0; cj < cols.size(); ++cj) v[cols[cj]] = kv[cj];
            kernel.push_back(std::move(v));
        }
    }

    // Canonical form: monic at the earliest nonzero coordinate, sorted by it.
    for (auto& v : kernel) {
        for (auto& x : v)
            if (x != 0) {
                Rat lead = x;
                for (auto& y : v) y /= lead;
                break;
            }
    }
    std::sort(kernel.begin(), kernel.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0 && b[i] == 0) continue;
            if ((a[i] == 0) != (b[i] == 0)) return b[i] == 0;
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
    return kernel;
}

std::vector<CtxElem> kernel_on_basis(const AlgebraContext& ctx, const LinearDerivation& d,
                                     const std::vector<BKey>& keys) {
    if (static_cast<long>(keys.size()) > layer_cap())
        throw LayerCapExceeded("graded component has " + std::to_string(keys.size()) +
                               " basis elements, above the cap of " +
                               std::to_string(layer_cap()) +
                               " (set WEITZ_MAX_LAYER to raise it)");
    std::vector<CtxElem> images;
    images.reserve(keys.size());
    for (const auto& k : keys) {
        CtxElem e;
        e.add(k, 1);
        images.push_back(ctx.apply_linear(d, e));
    }
    std::vector<CtxElem> out;
    for (const auto& v : kernel_coordinates(images)) {
        CtxElem e;
        for (std::size_t j = 0; j < keys.size(); ++j) e.add(keys[j], v[j]);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<CtxElem> kernel_at(const AlgebraContext& ctx, const LinearDerivation& d,
                               const std::vector<int>& multidegree) {
    return kernel_on_basis(ctx, d, ctx.basis(multidegree));
}

std::vector<CtxElem> kernel_layer(const AlgebraContext& ctx, const LinearDerivation& d,
                                  int degree) {
    return kernel_on_basis(ctx, d, ctx.basis_layer(degree));
}

bool is_constant(const AlgebraContext& ctx, const LinearDerivation& d, const CtxElem& x) {
    return ctx.apply_linear(d, x).is_zero();
}

bool is_constant(const LinearDerivation& d, const NCPoly& f) {
    return apply(d, f).is_zero();
}

bool is_constant(const LinearDerivation& d, const CPoly& f) {
    return apply(d, f).is_zero();
}

NCPoly nc_from_ctx(const CtxElem& x, int arity) {
    NCPoly f = NCPoly::zero(arity);
    for (const auto& [k, v] : x.c) {
        if (k.tag != 0 || !k.word_seq)
            throw std::invalid_argument("nc_from_ctx: not a free-context element");
        f.add_term(k.e, v);
    }
    return f;
}

NCPoly partial_linearization(const NCPoly& f, int j) {
    const int m = f.arity();
    NCPoly out = NCPoly::zero(m + 1);
    for (const auto& [w, c] : f.terms())
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            if (w[pos] != j) continue;
            Word t = w;
            t[pos] = m;
            out.add_term(t, c);
        }
    return out;
}

bool highest_weight_test(const NCPoly& f) {
    const int m = f.arity();
    for (int j = 1; j < m; ++j) {
        NCPoly lin = partial_linearization(f, j);
        for (int i = 0; i < j; ++i) {
            std::vector<NCPoly> images;
            for (int k = 0; k < m; ++k) images.push_back(NCPoly::var(m, k));
            images.push_back(NCPoly::var(m, i));
            if (!lin.substitute(images).is_zero()) return false;
        }
    }
    return true;
}

namespace {

template <typename KeyT, typename TermsF>
long rank_of_family(const std::vector<TermsF>& fams) {
    std::map<KeyT, int> cols;
    for (const auto& f : fams)
        for (const auto& [k, v] : f) cols.emplace(k, static_cast<int>(cols.size()));
    if (cols.empty()) return 0;
    RatMat m(static_cast<int>(fams.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < fams.size(); ++i)
        for (const auto& [k, v] : fams[i]) m.a[i][cols[k]] = v;
    return rank(m);
}

}  // namespace

long span_rank(const std::vector<CtxElem>& xs) {
    std::vector<std::map<BKey, Rat>> t;
    for (const auto& x : xs) t.push_back(x.c);
    return rank_of_family<BKey>(t);
}

long span_rank(const std::vector<NCPoly>& fs) {
    std::vector<std::map<Word, Rat, WordDegLex>> t;
    for (const auto& f : fs) t.push_back(f.terms());
    return rank_of_family<Word>(t);
}

long span_rank(const std::vector<CPoly>& fs) {
    std::vector<std::map<Monomial, Rat, MonoDegLex>> t;
    for (const auto& f : fs) t.push_back(f.terms());
    return rank_of_family<Monomial>(t);
}

CtxElem lr_operator(const AlgebraContext& ctx, const CtxElem& e, int n) {
    CtxElem g1 = ctx.gen(0);
    CtxElem g2 = ctx.gen(1);
    CtxElem out = e;
    for (int k = 0; k < n; ++k) out = ctx.mul(g1, ctx.mul(out, g2)) - ctx.mul(g2, ctx.mul(out, g1));
    return out;
}

NCPoly lr_operator(const NCPoly& f, int n) {
    NCPoly g1 = NCPoly::var(f.arity(), 0);
    NCPoly g2 = NCPoly::var(f.arity(), 1);
    NCPoly out = f;
    for (int k = 0; k < n; ++k) out = g1 * out * g2 - g2 * out * g1;
    return out;
}

LiftingReport lifting_check(const LinearDerivation& d, const AlgebraContext& quotient,
                            const std::vector<int>& multidegree) {
    AlgebraContext free_ctx = AlgebraContext::free_assoc(quotient.rank());
    std::vector<CtxElem> free_kernel = kernel_at(free_ctx, d, multidegree);
    std::vector<CtxElem> quot_kernel = kernel_at(quotient, d, multidegree);

    std::vector<CtxElem> projected;
    for (const auto& x : free_kernel)
        projected.push_back(quotient.reduce(nc_from_ctx(x, quotient.rank())));

    LiftingReport r;
    r.free_dim = static_cast<long>(free_kernel.size());
    r.quotient_dim = static_cast<long>(quot_kernel.size());
    r.surjective = span_rank(projected) == r.quotient_dim;
    return r;
}

}  // namespace weitz
