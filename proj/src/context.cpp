#include "weitz/context.hpp"

#include <algorithm>
#include <stdexcept>

#include "weitz/generic2x2.hpp"
#include "weitz/io.hpp"

namespace weitz {

bool operator<(const BKey& a, const BKey& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    if (a.word_seq != b.word_seq) return b.word_seq;
    if (a.word_seq) {
        if (a.e.size() != b.e.size()) return a.e.size() < b.e.size();
        return a.e < b.e;
    }
    long da = 0, db = 0;
    for (int x : a.e) da += x;
    for (int x : b.e) db += x;
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.e.size() && i < b.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return a.e.size() < b.e.size();
}

void CtxElem::add(const BKey& k, const Rat& v) {
    if (v == 0) return;
    auto [it, fresh] = c.emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c.erase(it);
    }
}

CtxElem& CtxElem::operator+=(const CtxElem& o) {
    for (const auto& [k, v] : o.c) add(k, v);
    return *this;
}

CtxElem& CtxElem::operator-=(const CtxElem& o) {
    for (const auto& [k, v] : o.c) add(k, -v);
    return *this;
}

CtxElem operator*(const Rat& s, const CtxElem& x) {
    CtxElem r;
    if (s == 0) return r;
    for (const auto& [k, v] : x.c) r.c[k] = s * v;
    return r;
}

namespace {

std::vector<int> zeros(int n) { return std::vector<int>(n, 0); }

std::vector<int> vsum(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// --- metabelian word reduction -------------------------------------------
// Normal basis: x^a y^b and [x,y] x1^p y1^q x2^r y2^s.  One adjacent swap
// y x -> x y - [x,y] at a time; the commutator coefficient lives in the
// commutative bimodule, so prefix/suffix letter counts suffice, and products
// of two commutators vanish.
void reduce_word_metab(Word w, const Rat& coef, CtxElem& out) {
    for (;;) {
        std::size_t k = 0;
        bool found = false;
        for (; k + 1 < w.size(); ++k)
            if (w[k] == 1 && w[k + 1] == 0) {
                found = true;
                break;
            }
        if (!found) break;
        int px = 0, py = 0, sx = 0, sy = 0;
        for (std::size_t i = 0; i < k; ++i) (w[i] == 0 ? px : py)++;
        for (std::size_t i = k + 2; i < w.size(); ++i) (w[i] == 0 ? sx : sy)++;
        out.add(BKey{1, false, {px, py, sx, sy}}, -coef);
        std::swap(w[k], w[k + 1]);
    }
    int a = 0, b = 0;
    for (int letter : w) (letter == 0 ? a : b)++;
    out.add(BKey{0, false, {a, b}}, coef);
}

// --- Grassmann-central word reduction ------------------------------------
// Commutators [x_i,x_j], i<j, are central and pairwise products vanish at
// rank <= 3, so one swap x_i x_j -> x_j x_i + [x_i,x_j] (i > j) contributes
// the letter counts of the remaining word on the commutator tag.
int pair_tag(int i, int j, int m) {  // i < j
    int tag = 1;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (a == i && b == j) return tag;
            ++tag;
        }
    throw std::logic_error("bad commutator pair");
}

std::pair<int, int> tag_pair(int tag, int m) {
    int t = 1;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (t == tag) return {a, b};
            ++t;
        }
    throw std::logic_error("bad commutator tag");
}

void reduce_word_grassmann(Word w, const Rat& coef, int m, CtxElem& out) {
    for (;;) {
        std::size_t k = 0;
        bool found = false;
        for (; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) {
                found = true;
                break;
            }
        if (!found) break;
        int i = w[k], j = w[k + 1];  // i > j
        std::vector<int> rest(m, 0);
        for (std::size_t p = 0; p < w.size(); ++p)
            if (p != k && p != k + 1) ++rest[w[p]];
        out.add(BKey{pair_tag(j, i, m), false, rest}, -coef);
        std::swap(w[k], w[k + 1]);
    }
    std::vector<int> e(m, 0);
    for (int letter : w) ++e[letter];
    out.add(BKey{0, false, e}, coef);
}

Word sorted_word_of_exponents(const std::vector<int>& e) {
    Word w;
    for (std::size_t j = 0; j < e.size(); ++j)
        for (int k = 0; k < e[j]; ++k) w.push_back(static_cast<int>(j));
    return w;
}

// --- trace context conversion --------------------------------------------

CtxElem ctx_from_trace(const TraceElem& t) {
    CtxElem out;
    for (int tag = 0; tag < 4; ++tag)
        for (const auto& [e, c] : t.comp[tag].terms()) out.add(BKey{tag, false, e}, c);
    return out;
}

TraceElem trace_from_ctx(const CtxElem& x) {
    TraceElem t;
    for (const auto& [k, v] : x.c) t.comp.at(k.tag).add_term(k.e, v);
    return t;
}

}  // namespace

AlgebraContext AlgebraContext::free_assoc(int m) {
    AlgebraContext c;
    c.kind_ = CtxKind::FreeAssoc;
    c.rank_ = m;
    c.names_ = default_names(m);
    c.weights_.assign(m, 1);
    return c;
}

AlgebraContext AlgebraContext::commutative(int m) {
    AlgebraContext c;
    c.kind_ = CtxKind::Commutative;
    c.rank_ = m;
    c.names_ = default_names(m);
    c.weights_.assign(m, 1);
    return c;
}

AlgebraContext AlgebraContext::commutative_weighted(int m, std::vector<int> weights,
                                                    std::vector<std::string> names) {
    if (static_cast<int>(weights.size()) != m || static_cast<int>(names.size()) != m)
        throw std::invalid_argument("weights/names size mismatch");
    AlgebraContext c;
    c.kind_ = CtxKind::Commutative;
    c.rank_ = m;
    c.names_ = std::move(names);
    c.weights_ = std::move(weights);
    return c;
}

AlgebraContext AlgebraContext::metabelian2() {
    AlgebraContext c;
    c.kind_ = CtxKind::Metabelian2;
    c.rank_ = 2;
    c.names_ = default_names(2);
    c.weights_ = {1, 1};
    return c;
}

AlgebraContext AlgebraContext::grassmann_l2(int m) {
    if (m != 2 && m != 3)
        throw std::invalid_argument("Grassmann-central context supports rank 2 or 3 only");
    AlgebraContext c;
    c.kind_ = CtxKind::GrassmannL2;
    c.rank_ = m;
    c.names_ = default_names(m);
    c.weights_.assign(m, 1);
    return c;
}

AlgebraContext AlgebraContext::wreath(int m) {
    if (m < 1) throw std::invalid_argument("wreath rank must be positive");
    AlgebraContext c;
    c.kind_ = CtxKind::Wreath;
    c.rank_ = m;
    c.names_ = default_names(m);
    c.weights_.assign(m, 1);
    return c;
}

AlgebraContext AlgebraContext::trace2x2() {
    AlgebraContext c;
    c.kind_ = CtxKind::Trace2x2;
    c.rank_ = 2;
    c.names_ = default_names(2);
    c.weights_ = {1, 1};
    return c;
}

CtxElem AlgebraContext::unit() const {
    CtxElem e;
    switch (kind_) {
        case CtxKind::FreeAssoc: e.add(BKey{0, true, {}}, 1); break;
        case CtxKind::Commutative: e.add(BKey{0, false, zeros(rank_)}, 1); break;
        case CtxKind::Metabelian2: e.add(BKey{0, false, {0, 0}}, 1); break;
        case CtxKind::GrassmannL2: e.add(BKey{0, false, zeros(rank_)}, 1); break;
        case CtxKind::Wreath: e.add(BKey{0, false, zeros(rank_)}, 1); break;
        case CtxKind::Trace2x2: e.add(BKey{0, false, zeros(kCbarVars)}, 1); break;
    }
    return e;
}

CtxElem AlgebraContext::gen(int j) const {
    if (j < 0 || j >= rank_) throw std::out_of_range("generator index");
    CtxElem e;
    switch (kind_) {
        case CtxKind::FreeAssoc: e.add(BKey{0, true, {j}}, 1); break;
        case CtxKind::Commutative:
        case CtxKind::GrassmannL2: {
            std::vector<int> v = zeros(rank_);
            v[j] = 1;
            e.add(BKey{0, false, v}, 1);
            break;
        }
        case CtxKind::Metabelian2: {
            e.add(BKey{0, false, {j == 0 ? 1 : 0, j == 1 ? 1 : 0}}, 1);
            break;
        }
        case CtxKind::Wreath: {
            std::vector<int> v = zeros(rank_);
            v[j] = 1;
            e.add(BKey{0, false, v}, 1);           // y_j
            e.add(BKey{1 + j, false, zeros(2 * rank_)}, 1);  // a_j
            break;
        }
        case CtxKind::Trace2x2:
            e = ctx_from_trace(j == 0 ? TraceElem::gen_x() : TraceElem::gen_y());
            break;
    }
    return e;
}

CtxElem AlgebraContext::reduce(const NCPoly& f) const {
    if (f.arity() != rank_) throw std::invalid_argument("reduce: arity mismatch");
    CtxElem out;
    switch (kind_) {
        case CtxKind::FreeAssoc:
            for (const auto& [w, c] : f.terms()) out.add(BKey{0, true, w}, c);
            break;
        case CtxKind::Commutative: {
            CPoly ab = abelianize(f);
            for (const auto& [e, c] : ab.terms()) out.add(BKey{0, false, e}, c);
            break;
        }
        case CtxKind::Metabelian2:
            for (const auto& [w, c] : f.terms()) reduce_word_metab(w, c, out);
            break;
        case CtxKind::GrassmannL2:
            for (const auto& [w, c] : f.terms()) reduce_word_grassmann(w, c, rank_, out);
            break;
        case CtxKind::Wreath:
        case CtxKind::Trace2x2:
            for (const auto& [w, c] : f.terms()) {
                CtxElem acc = unit();
                for (int letter : w) acc = mul(acc, gen(letter));
                out += c * acc;
            }
            break;
    }
    return out;
}

CtxElem AlgebraContext::mul(const CtxElem& a, const CtxElem& b) const {
    CtxElem out;
    if (kind_ == CtxKind::Trace2x2) {
        return ctx_from_trace(trace_mul(trace_from_ctx(a), trace_from_ctx(b)));
    }
    for (const auto& [ka, ca] : a.c)
        for (const auto& [kb, cb] : b.c) {
            Rat cc = ca * cb;
            switch (kind_) {
                case CtxKind::FreeAssoc: {
                    Word w = ka.e;
                    w.insert(w.end(), kb.e.begin(), kb.e.end());
                    out.add(BKey{0, true, w}, cc);
                    break;
                }
                case CtxKind::Commutative:
                    out.add(BKey{0, false, vsum(ka.e, kb.e)}, cc);
                    break;
                case CtxKind::Metabelian2: {
                    if (ka.tag == 1 && kb.tag == 1) break;
                    if (ka.tag == 0 && kb.tag == 0) {
                        if (ka.e[1] == 0 || kb.e[0] == 0) {
                            out.add(BKey{0, false, {ka.e[0] + kb.e[0], ka.e[1] + kb.e[1]}}, cc);
                        } else {
                            Word w;
                            w.insert(w.end(), ka.e[0], 0);
                            w.insert(w.end(), ka.e[1], 1);
                            w.insert(w.end(), kb.e[0], 0);
                            w.insert(w.end(), kb.e[1], 1);
                            reduce_word_metab(w, cc, out);
                        }
                    } else if (ka.tag == 0) {
                        out.add(BKey{1, false,
                                     {kb.e[0] + ka.e[0], kb.e[1] + ka.e[1], kb.e[2], kb.e[3]}},
                                cc);
                    } else {
                        out.add(BKey{1, false,
                                     {ka.e[0], ka.e[1], ka.e[2] + kb.e[0], ka.e[3] + kb.e[1]}},
                                cc);
                    }
                    break;
                }
                case CtxKind::GrassmannL2: {
                    if (ka.tag != 0 && kb.tag != 0) break;
                    if (ka.tag == 0 && kb.tag == 0) {
                        out.add(BKey{0, false, vsum(ka.e, kb.e)}, cc);
                        // swap corrections: alpha_i beta_j pairs with i > j
                        for (int i = 0; i < rank_; ++i) {
                            if (ka.e[i] == 0) continue;
                            for (int j = 0; j < i; ++j) {
                                if (kb.e[j] == 0) continue;
                                std::vector<int> e = vsum(ka.e, kb.e);
                                --e[i];
                                --e[j];
                                out.add(BKey{pair_tag(j, i, rank_), false, e},
                                        -cc * ka.e[i] * kb.e[j]);
                            }
                        }
                    } else {
                        out.add(BKey{std::max(ka.tag, kb.tag), false, vsum(ka.e, kb.e)}, cc);
                    }
                    break;
                }
                case CtxKind::Wreath: {
                    if (ka.tag != 0 && kb.tag != 0) break;
                    if (ka.tag == 0 && kb.tag == 0) {
                        out.add(BKey{0, false, vsum(ka.e, kb.e)}, cc);
                    } else if (ka.tag == 0) {
                        // y^d * a_i h(U,V) = a_i u^d h
                        std::vector<int> e = kb.e;
                        for (int k = 0; k < rank_; ++k) e[k] += ka.e[k];
                        out.add(BKey{kb.tag, false, e}, cc);
                    } else {
                        // a_i h * y^d = a_i h v^d
                        std::vector<int> e = ka.e;
                        for (int k = 0; k < rank_; ++k) e[rank_ + k] += kb.e[k];
                        out.add(BKey{ka.tag, false, e}, cc);
                    }
                    break;
                }
                case CtxKind::Trace2x2: break;  // handled above
            }
        }
    return out;
}

std::vector<int> AlgebraContext::key_multidegree(const BKey& k) const {
    switch (kind_) {
        case CtxKind::FreeAssoc: {
            std::vector<int> d = zeros(rank_);
            for (int letter : k.e) ++d[letter];
            return d;
        }
        case CtxKind::Commutative: return k.e;
        case CtxKind::Metabelian2:
            if (k.tag == 0) return k.e;
            return {1 + k.e[0] + k.e[2], 1 + k.e[1] + k.e[3]};
        case CtxKind::GrassmannL2: {
            if (k.tag == 0) return k.e;
            auto [i, j] = tag_pair(k.tag, rank_);
            std::vector<int> d = k.e;
            ++d[i];
            ++d[j];
            return d;
        }
        case CtxKind::Wreath: {
            if (k.tag == 0) return k.e;
            std::vector<int> d = zeros(rank_);
            for (int a = 0; a < rank_; ++a) d[a] = k.e[a] + k.e[rank_ + a];
            ++d[k.tag - 1];
            return d;
        }
        case CtxKind::Trace2x2: {
            auto tb = tag_bidegree(k.tag);
            std::vector<int> d = {tb[0], tb[1]};
            for (int v = 0; v < kCbarVars; ++v) {
                auto vb = cbar_var_bidegree(v);
                d[0] += k.e[v] * vb[0];
                d[1] += k.e[v] * vb[1];
            }
            return d;
        }
    }
    throw std::logic_error("unreachable");
}

long AlgebraContext::key_degree(const BKey& k) const {
    std::vector<int> d = key_multidegree(k);
    long t = 0;
    for (int j = 0; j < rank_; ++j) t += static_cast<long>(weights_[j]) * d[j];
    return t;
}

namespace {

void enumerate_words(const std::vector<int>& remaining, Word& cur, std::vector<BKey>& out) {
    bool done = true;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
        if (remaining[j] == 0) continue;
        done = false;
        std::vector<int> rem = remaining;
        --rem[j];
        cur.push_back(static_cast<int>(j));
        enumerate_words(rem, cur, out);
        cur.pop_back();
    }
    if (done) out.push_back(BKey{0, true, cur});
}

void enumerate_exponents_weighted(int m, const std::vector<int>& w, long degree, int pos,
                                  std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (pos == m) {
        if (degree == 0) out.push_back(cur);
        return;
    }
    if (pos == m - 1) {
        if (degree % w[pos] == 0) {
            cur[pos] = static_cast<int>(degree / w[pos]);
            out.push_back(cur);
            cur[pos] = 0;
        }
        return;
    }
    for (long e = 0; e * w[pos] <= degree; ++e) {
        cur[pos] = static_cast<int>(e);
        enumerate_exponents_weighted(m, w, degree - e * w[pos], pos + 1, cur, out);
        cur[pos] = 0;
    }
}

// All componentwise splits d = alpha + beta.
void enumerate_splits(const std::vector<int>& d, int pos, std::vector<int>& alpha,
                      std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    if (pos == static_cast<int>(d.size())) {
        std::vector<int> beta(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) beta[i] = d[i] - alpha[i];
        out.emplace_back(alpha, beta);
        return;
    }
    for (int e = 0; e <= d[pos]; ++e) {
        alpha[pos] = e;
        enumerate_splits(d, pos + 1, alpha, out);
        alpha[pos] = 0;
    }
}

}  // namespace

std::vector<BKey> AlgebraContext::basis(const std::vector<int>& d) const {
    if (static_cast<int>(d.size()) != rank_) throw std::invalid_argument("multidegree size");
    for (int x : d)
        if (x < 0) throw std::invalid_argument("negative multidegree");
    std::vector<BKey> out;
    switch (kind_) {
        case CtxKind::FreeAssoc: {
            Word cur;
            enumerate_words(d, cur, out);
            break;
        }
        case CtxKind::Commutative: out.push_back(BKey{0, false, d}); break;
        case CtxKind::Metabelian2: {
            out.push_back(BKey{0, false, d});
            for (int p = 0; p < d[0]; ++p)
                for (int q = 0; q < d[1]; ++q)
                    out.push_back(BKey{1, false, {p, q, d[0] - 1 - p, d[1] - 1 - q}});
            break;
        }
        case CtxKind::GrassmannL2: {
            out.push_back(BKey{0, false, d});
            int tag = 1;
            for (int i = 0; i < rank_; ++i)
                for (int j = i + 1; j < rank_; ++j, ++tag) {
                    if (d[i] >= 1 && d[j] >= 1) {
                        std::vector<int> e = d;
                        --e[i];
                        --e[j];
                        out.push_back(BKey{tag, false, e});
                    }
                }
            break;
        }
        case CtxKind::Wreath: {
            out.push_back(BKey{0, false, d});
            for (int i = 0; i < rank_; ++i) {
                if (d[i] < 1) continue;
                std::vector<int> rem = d;
                --rem[i];
                std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
                std::vector<int> alpha(rank_, 0);
                enumerate_splits(rem, 0, alpha, splits);
                for (auto& [al, be] : splits) {
                    std::vector<int> e = al;
                    e.insert(e.end(), be.begin(), be.end());
                    out.push_back(BKey{1 + i, false, e});
                }
            }
            break;
        }
        case CtxKind::Trace2x2: {
            for (int tag = 0; tag < 4; ++tag) {
                auto tb = tag_bidegree(tag);
                int ra = d[0] - tb[0], rb = d[1] - tb[1];
                if (ra < 0 || rb < 0) continue;
                for (int eu = 0; 2 * eu <= ra; ++eu)
                    for (int et = 0; 2 * eu + et <= ra && et <= rb; ++et)
                        for (int ev = 0; et + 2 * ev <= rb; ++ev) {
                            int ep = ra - 2 * eu - et;
                            int eq = rb - et - 2 * ev;
                            out.push_back(BKey{tag, false, {ep, eq, eu, et, ev}});
                        }
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BKey> AlgebraContext::basis_layer(int degree) const {
    std::vector<BKey> out;
    switch (kind_) {
        case CtxKind::FreeAssoc:
        case CtxKind::Metabelian2:
        case CtxKind::GrassmannL2:
        case CtxKind::Wreath:
        case CtxKind::Trace2x2: {
            std::vector<std::vector<int>> degs;
            std::vector<int> cur(rank_, 0);
            std::vector<int> ones(rank_, 1);
            enumerate_exponents_weighted(rank_, ones, degree, 0, cur, degs);
            for (const auto& d : degs) {
                auto part = basis(d);
                out.insert(out.end(), part.begin(), part.end());
            }
            break;
        }
        case CtxKind::Commutative: {
            std::vector<std::vector<int>> degs;
            std::vector<int> cur(rank_, 0);
            enumerate_exponents_weighted(rank_, weights_, degree, 0, cur, degs);
            for (const auto& d : degs) out.push_back(BKey{0, false, d});
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CtxElem AlgebraContext::apply_linear(const LinearDerivation& d, const CtxElem& x) const {
    if (d.m() != rank_) throw std::invalid_argument("derivation rank mismatch");
    CtxElem out;
    if (kind_ == CtxKind::Trace2x2) {
        TraceDerivation td = trace_derivation_from_matrix(d);
        return ctx_from_trace(apply(td, trace_from_ctx(x)));
    }
    Rat trace_a = 0;
    for (int i = 0; i < rank_; ++i) trace_a += d.matrix()[i][i];
    for (const auto& [k, c] : x.c) {
        switch (kind_) {
            case CtxKind::FreeAssoc: {
                for (std::size_t pos = 0; pos < k.e.size(); ++pos)
                    for (const auto& [i, a] : d.column(k.e[pos])) {
                        Word w = k.e;
                        w[pos] = i;
                        out.add(BKey{0, true, w}, c * a);
                    }
                break;
            }
            case CtxKind::Commutative: {
                for (int j = 0; j < rank_; ++j) {
                    if (k.e[j] == 0) continue;
                    for (const auto& [i, a] : d.column(j)) {
                        std::vector<int> e = k.e;
                        --e[j];
                        ++e[i];
                        out.add(BKey{0, false, e}, c * a * k.e[j]);
                    }
                }
                break;
            }
            case CtxKind::Metabelian2: {
                if (k.tag == 0) {
                    Word w = sorted_word_of_exponents(k.e);
                    for (std::size_t pos = 0; pos < w.size(); ++pos)
                        for (const auto& [i, a] : d.column(w[pos])) {
                            Word im = w;
                            im[pos] = i;
                            reduce_word_metab(im, c * a, out);
                        }
                } else {
                    // [x,y] scales by tr(A); the bimodule variables transform
                    // like the generators, first pair then second pair.
                    out.add(k, c * trace_a);
                    for (int idx = 0; idx < 4; ++idx) {
                        if (k.e[idx] == 0) continue;
                        int blk = idx / 2, loc = idx % 2;
                        for (const auto& [i, a] : d.column(loc)) {
                            std::vector<int> e = k.e;
                            --e[idx];
                            ++e[blk * 2 + i];
                            out.add(BKey{1, false, e}, c * a * k.e[idx]);
                        }
                    }
                }
                break;
            }
            case CtxKind::GrassmannL2: {
                if (k.tag == 0) {
                    Word w = sorted_word_of_exponents(k.e);
                    for (std::size_t pos = 0; pos < w.size(); ++pos)
                        for (const auto& [i, a] : d.column(w[pos])) {
                            Word im = w;
                            im[pos] = i;
                            reduce_word_grassmann(im, c * a, rank_, out);
                        }
                } else {
                    auto [ci, cj] = tag_pair(k.tag, rank_);
                    // d[x_ci, x_cj] expanded by antisymmetry
                    for (const auto& [i, a] : d.column(ci)) {
                        if (i == cj) continue;
                        if (i < cj)
                            out.add(BKey{pair_tag(i, cj, rank_), false, k.e}, c * a);
                        else
                            out.add(BKey{pair_tag(cj, i, rank_), false, k.e}, -c * a);
                    }
                    for (const auto& [i, a] : d.column(cj)) {
                        if (i == ci) continue;
                        if (ci < i)
                            out.add(BKey{pair_tag(ci, i, rank_), false, k.e}, c * a);
                        else
                            out.add(BKey{pair_tag(i, ci, rank_), false, k.e}, -c * a);
                    }
                    // coefficient monomial moves as a commutative polynomial
                    for (int j = 0; j < rank_; ++j) {
                        if (k.e[j] == 0) continue;
                        for (const auto& [i, a] : d.column(j)) {
                            std::vector<int> e = k.e;
                            --e[j];
                            ++e[i];
                            out.add(BKey{k.tag, false, e}, c * a * k.e[j]);
                        }
                    }
                }
                break;
            }
            case CtxKind::Wreath: {
                if (k.tag == 0) {
                    for (int j = 0; j < rank_; ++j) {
                        if (k.e[j] == 0) continue;
                        for (const auto& [i, a] : d.column(j)) {
                            std::vector<int> e = k.e;
                            --e[j];
                            ++e[i];
                            out.add(BKey{0, false, e}, c * a * k.e[j]);
                        }
                    }
                } else {
                    for (const auto& [i, a] : d.column(k.tag - 1))
                        out.add(BKey{1 + i, false, k.e}, c * a);
                    for (int idx = 0; idx < 2 * rank_; ++idx) {
                        if (k.e[idx] == 0) continue;
                        int blk = idx / rank_, loc = idx % rank_;
                        for (const auto& [i, a] : d.column(loc)) {
                            std::vector<int> e = k.e;
                            --e[idx];
                            ++e[blk * rank_ + i];
                            out.add(BKey{k.tag, false, e}, c * a * k.e[idx]);
                        }
                    }
                }
                break;
            }
            case CtxKind::Trace2x2: break;  // handled above
        }
    }
    return out;
}

std::string AlgebraContext::render_key(const BKey& k) const {
    auto mono = [](const std::vector<std::string>& nm, const std::vector<int>& e) {
        std::string s;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (int c = 0; c < e[j]; ++c) {
                if (!s.empty()) s += "*";
                s += nm[j];
            }
        return s;
    };
    auto joined = [](std::string a, const std::string& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        return a + "*" + b;
    };
    switch (kind_) {
        case CtxKind::FreeAssoc: {
            std::string s;
            for (int letter : k.e) {
                if (!s.empty()) s += "*";
                s += names_[letter];
            }
            return s;
        }
        case CtxKind::Commutative: return mono(names_, k.e);
        case CtxKind::Metabelian2: {
            if (k.tag == 0) return mono(names_, k.e);
            static const std::vector<std::string> bim = {"x1", "y1", "x2", "y2"};
            return joined("[x,y]", mono(bim, k.e));
        }
        case CtxKind::GrassmannL2: {
            if (k.tag == 0) return mono(names_, k.e);
            auto [i, j] = tag_pair(k.tag, rank_);
            return joined("[" + names_[i] + "," + names_[j] + "]", mono(names_, k.e));
        }
        case CtxKind::Wreath: {
            std::vector<std::string> ys, uvs;
            for (int i = 1; i <= rank_; ++i) ys.push_back("y" + std::to_string(i));
            for (int i = 1; i <= rank_; ++i) uvs.push_back("u" + std::to_string(i));
            for (int i = 1; i <= rank_; ++i) uvs.push_back("v" + std::to_string(i));
            if (k.tag == 0) return mono(ys, k.e);
            return joined("a" + std::to_string(k.tag), mono(uvs, k.e));
        }
        case CtxKind::Trace2x2: {
            static const std::vector<std::string> tags = {"", "x0", "y0", "[x0,y0]"};
            return joined(mono(cbar_names(), k.e), tags[k.tag]);
        }
    }
    throw std::logic_error("unreachable");
}

std::string AlgebraContext::render(const CtxElem& x) const {
    std::vector<std::pair<std::string, Rat>> terms;
    for (const auto& [k, v] : x.c) terms.emplace_back(render_key(k), v);
    return render_combination(terms);
}

}  // namespace weitz
