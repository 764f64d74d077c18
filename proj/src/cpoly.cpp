#include "weitz/cpoly.hpp"

#include <stdexcept>

namespace weitz {

CPoly CPoly::unit(int arity) { return constant(arity, 1); }

CPoly CPoly::constant(int arity, Rat c) {
    CPoly p(arity);
    p.add_term(Monomial(arity, 0), c);
    return p;
}

CPoly CPoly::var(int arity, int j) {
    if (j < 0 || j >= arity) throw std::out_of_range("variable index");
    Monomial e(arity, 0);
    e[j] = 1;
    CPoly p(arity);
    p.terms_[e] = 1;
    return p;
}

CPoly CPoly::term(int arity, Monomial e, Rat c) {
    if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("monomial arity");
    CPoly p(arity);
    p.add_term(e, c);
    return p;
}

Rat CPoly::coeff(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void CPoly::add_term(const Monomial& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CPoly CPoly::operator-() const {
    CPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
    CPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Monomial e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

CPoly operator*(const Rat& c, const CPoly& p) {
    CPoly r(p.arity_);
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
    return r;
}

CPoly CPoly::pow(unsigned n) const {
    CPoly r = CPoly::unit(arity_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

int CPoly::degree() const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (int e : terms_.rbegin()->first) d += e;
    return static_cast<int>(d);
}

long CPoly::weighted_degree(const std::vector<int>& weights) const {
    long best = -1;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(weights[i]) * e[i];
        if (d > best) best = d;
    }
    return best;
}

bool CPoly::is_homogeneous(const std::vector<int>& weights, long* deg_out) const {
    bool first = true;
    long d0 = 0;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(weights[i]) * e[i];
        if (first) {
            d0 = d;
            first = false;
        } else if (d != d0) {
            return false;
        }
    }
    if (deg_out) *deg_out = d0;
    return true;
}

CPoly CPoly::homogeneous_component(int n) const {
    CPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int x : e) d += x;
        if (d == n) r.terms_[e] = c;
    }
    return r;
}

CPoly CPoly::partial(int j) const {
    if (j < 0 || j >= arity_) throw std::out_of_range("variable index");
    CPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[j] == 0) continue;
        Monomial d = e;
        --d[j];
        r.add_term(d, c * e[j]);
    }
    return r;
}

CPoly CPoly::substitute(const std::vector<CPoly>& images) const {
    if (static_cast<int>(images.size()) != arity_)
        throw std::invalid_argument("substitute: wrong image count");
    int target = images.empty() ? arity_ : images[0].arity();
    for (const auto& img : images)
        if (img.arity() != target) throw std::invalid_argument("substitute: mixed image arity");
    CPoly r(target);
    for (const auto& [e, c] : terms_) {
        CPoly prod = CPoly::constant(target, c);
        for (int j = 0; j < arity_; ++j)
            if (e[j] > 0) prod = prod * images[j].pow(static_cast<unsigned>(e[j]));
        r += prod;
    }
    return r;
}

Rat CPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("eval: wrong point dimension");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        for (int j = 0; j < arity_; ++j)
            for (int k = 0; k < e[j]; ++k) v *= point[j];
        total += v;
    }
    return total;
}

std::optional<CPoly> CPoly::divide_exact(const CPoly& g) const {
    if (g.is_zero()) return std::nullopt;
    CPoly q(arity_), r = *this;
    const auto& glead = *g.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        Monomial e = rlead.first;
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= glead.first[i];
            if (e[i] < 0) ok = false;
        }
        if (!ok) return std::nullopt;
        Rat c = rlead.second / glead.second;
        CPoly t = CPoly::term(arity_, e, c);
        q += t;
        r -= t * g;
    }
    return q;
}

CPoly abelianize(const NCPoly& p) {
    CPoly r(p.arity());
    for (const auto& [w, c] : p.terms()) r.add_term(word_multidegree(w, p.arity()), c);
    return r;
}

}  // namespace weitz
