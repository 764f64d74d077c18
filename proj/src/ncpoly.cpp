#include "weitz/ncpoly.hpp"

#include <stdexcept>

namespace weitz {

std::vector<int> word_multidegree(const Word& w, int arity) {
    std::vector<int> d(arity, 0);
    for (int letter : w) {
        if (letter < 0 || letter >= arity) throw std::out_of_range("letter outside alphabet");
        ++d[letter];
    }
    return d;
}

NCPoly NCPoly::unit(int arity) {
    NCPoly p(arity);
    p.terms_[Word{}] = 1;
    return p;
}

NCPoly NCPoly::var(int arity, int j) {
    if (j < 0 || j >= arity) throw std::out_of_range("variable index");
    NCPoly p(arity);
    p.terms_[Word{j}] = 1;
    return p;
}

NCPoly NCPoly::term(int arity, Word w, Rat c) {
    NCPoly p(arity);
    p.add_term(w, c);
    return p;
}

Rat NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r(arity_);
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
    NCPoly r(a.arity_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

NCPoly operator*(const Rat& c, const NCPoly& p) {
    NCPoly r(p.arity_);
    if (c == 0) return r;
    for (const auto& [w, pc] : p.terms_) r.terms_[w] = c * pc;
    return r;
}

int NCPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

std::optional<std::vector<int>> NCPoly::multidegree() const {
    if (terms_.empty()) return std::nullopt;
    auto d = multidegree_of(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (multidegree_of(w) != d) return std::nullopt;
    return d;
}

NCPoly NCPoly::component(const std::vector<int>& multideg) const {
    NCPoly r(arity_);
    for (const auto& [w, c] : terms_)
        if (multidegree_of(w) == multideg) r.terms_[w] = c;
    return r;
}

NCPoly NCPoly::homogeneous_component(int n) const {
    NCPoly r(arity_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == n) r.terms_[w] = c;
    return r;
}

NCPoly NCPoly::substitute(const std::vector<NCPoly>& images) const {
    if (static_cast<int>(images.size()) != arity_)
        throw std::invalid_argument("substitute: wrong image count");
    int target = images.empty() ? arity_ : images[0].arity();
    for (const auto& img : images)
        if (img.arity() != target) throw std::invalid_argument("substitute: mixed image arity");
    NCPoly r(target);
    for (const auto& [w, c] : terms_) {
        NCPoly prod = NCPoly::unit(target);
        for (int letter : w) prod = prod * images[letter];
        r += c * prod;
    }
    return r;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly left_normed_commutator(const std::vector<NCPoly>& args) {
    if (args.size() < 2) throw std::invalid_argument("left-normed commutator needs >= 2 arguments");
    NCPoly acc = commutator(args[0], args[1]);
    for (std::size_t i = 2; i < args.size(); ++i) acc = commutator(acc, args[i]);
    return acc;
}

}  // namespace weitz
