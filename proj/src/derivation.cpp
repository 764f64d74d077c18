#include "weitz/derivation.hpp"

#include <sstream>

namespace weitz {

JordanType JordanType::parse(const std::string& s) {
    JordanType jt;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw std::invalid_argument("bad Jordan type: " + s);
        int v = std::stoi(part);
        if (v < 1) throw std::invalid_argument("Jordan block sizes must be positive");
        jt.blocks.push_back(v);
    }
    if (jt.blocks.empty()) throw std::invalid_argument("empty Jordan type");
    for (std::size_t i = 1; i < jt.blocks.size(); ++i)
        if (jt.blocks[i] > jt.blocks[i - 1])
            throw std::invalid_argument("Jordan type must be a partition (non-increasing)");
    return jt;
}

int JordanType::total() const {
    int t = 0;
    for (int b : blocks) t += b;
    return t;
}

LinearDerivation::LinearDerivation(int m, std::vector<std::vector<Rat>> a,
                                   std::optional<JordanType> jt)
    : m_(m), a_(std::move(a)), jordan_(std::move(jt)) {
    cols_.resize(m_);
    for (int j = 0; j < m_; ++j)
        for (int i = 0; i < m_; ++i)
            if (a_[i][j] != 0) cols_[j].emplace_back(i, a_[i][j]);
}

LinearDerivation LinearDerivation::basic(int m) { return from_jordan(JordanType{{m}}); }

LinearDerivation LinearDerivation::from_jordan(const JordanType& jt) {
    int m = jt.total();
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m, Rat(0)));
    int base = 0;
    for (int b : jt.blocks) {
        for (int j = 1; j < b; ++j) a[base + j - 1][base + j] = 1;
        base += b;
    }
    return LinearDerivation(m, std::move(a), jt);
}

namespace {
std::vector<std::vector<Rat>> mat_mul(const std::vector<std::vector<Rat>>& x,
                                      const std::vector<std::vector<Rat>>& y) {
    std::size_t n = x.size();
    std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (x[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
        }
    return r;
}

bool mat_is_zero(const std::vector<std::vector<Rat>>& x) {
    for (const auto& row : x)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}
}  // namespace

LinearDerivation LinearDerivation::from_matrix(std::vector<std::vector<Rat>> mat) {
    int m = static_cast<int>(mat.size());
    for (const auto& row : mat)
        if (static_cast<int>(row.size()) != m) throw std::invalid_argument("matrix must be square");
    std::vector<std::vector<Rat>> p = mat;
    bool nilpotent = mat_is_zero(p);
    for (int k = 1; k < m && !nilpotent; ++k) {
        p = mat_mul(p, mat);
        nilpotent = mat_is_zero(p);
    }
    if (!nilpotent && m > 0)
        throw std::invalid_argument("matrix is not nilpotent (not a Weitzenboeck derivation)");
    return LinearDerivation(m, std::move(mat), std::nullopt);
}

bool LinearDerivation::is_zero() const {
    for (const auto& col : cols_)
        if (!col.empty()) return false;
    return true;
}

NCPoly apply(const LinearDerivation& d, const NCPoly& f) {
    NCPoly r(f.arity());
    for (const auto& [w, c] : f.terms())
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            for (const auto& [i, a] : d.column(w[pos])) {
                Word im = w;
                im[pos] = i;
                r.add_term(im, c * a);
            }
    return r;
}

CPoly apply(const LinearDerivation& d, const CPoly& f) {
    CPoly r(f.arity());
    for (const auto& [e, c] : f.terms())
        for (int j = 0; j < f.arity(); ++j) {
            if (e[j] == 0) continue;
            for (const auto& [i, a] : d.column(j)) {
                Monomial im = e;
                --im[j];
                ++im[i];
                r.add_term(im, c * a * e[j]);
            }
        }
    return r;
}

CPoly apply(const CDerivation& d, const CPoly& f) {
    CPoly r(f.arity());
    for (int j = 0; j < f.arity(); ++j) {
        CPoly pj = f.partial(j);
        if (!pj.is_zero()) r += pj * d.images[j];
    }
    return r;
}

NCPoly apply(const NCDerivation& d, const NCPoly& f) {
    NCPoly r(f.arity());
    for (const auto& [w, c] : f.terms())
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            NCPoly pre = NCPoly::term(f.arity(), Word(w.begin(), w.begin() + pos), c);
            NCPoly suf = NCPoly::term(f.arity(), Word(w.begin() + pos + 1, w.end()), Rat(1));
            r += pre * d.images[w[pos]] * suf;
        }
    return r;
}

bool triangular_up_to_permutation(const std::vector<CPoly>& images) {
    int m = static_cast<int>(images.size());
    std::vector<std::vector<bool>> uses(m, std::vector<bool>(m, false));
    for (int j = 0; j < m; ++j)
        for (const auto& [e, c] : images[j].terms())
            for (int i = 0; i < m; ++i)
                if (e[i] > 0) uses[j][i] = true;
    std::vector<bool> placed(m, false);
    for (int round = 0; round < m; ++round) {
        int found = -1;
        for (int j = 0; j < m && found < 0; ++j) {
            if (placed[j]) continue;
            bool ok = true;
            for (int i = 0; i < m; ++i)
                if (uses[j][i] && !placed[i]) ok = false;
            if (ok) found = j;
        }
        if (found < 0) return false;
        placed[found] = true;
    }
    return true;
}

std::vector<std::vector<Rat>> exp_matrix(const LinearDerivation& d) {
    int m = d.m();
    std::vector<std::vector<Rat>> e(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < m; ++i) e[i][i] = 1;
    std::vector<std::vector<Rat>> p = e;
    Rat fact = 1;
    for (int k = 1; k <= m; ++k) {
        p = mat_mul(p, d.matrix());
        fact *= k;
        bool zero = true;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (p[i][j] == 0) continue;
                e[i][j] += p[i][j] / fact;
                zero = false;
            }
        if (zero) break;
    }
    return e;
}

CEndo exp_linear_c(const LinearDerivation& d) {
    auto e = exp_matrix(d);
    CEndo phi;
    for (int j = 0; j < d.m(); ++j) {
        CPoly img(d.m());
        for (int i = 0; i < d.m(); ++i)
            if (e[i][j] != 0) img += e[i][j] * CPoly::var(d.m(), i);
        phi.images.push_back(img);
    }
    return phi;
}

NCEndo exp_linear_nc(const LinearDerivation& d) {
    auto e = exp_matrix(d);
    NCEndo phi;
    for (int j = 0; j < d.m(); ++j) {
        NCPoly img(d.m());
        for (int i = 0; i < d.m(); ++i)
            if (e[i][j] != 0) img += e[i][j] * NCPoly::var(d.m(), i);
        phi.images.push_back(img);
    }
    return phi;
}

CEndo exp_poly(const CDerivation& d) {
    if (!triangular_up_to_permutation(d.images))
        throw NotLocallyNilpotent(
            "polynomial derivation is not triangular up to a variable permutation");
    int m = static_cast<int>(d.images.size());
    CEndo phi;
    for (int j = 0; j < m; ++j) {
        CPoly sum(m), chain = CPoly::var(m, j);
        Rat fact = 1;
        long k = 0;
        while (!chain.is_zero()) {
            sum += Rat(1 / fact) * chain;
            chain = apply(d, chain);
            ++k;
            fact *= k;
            if (k > 100000) throw NotLocallyNilpotent("exp series did not terminate");
        }
        phi.images.push_back(sum);
    }
    return phi;
}

CDerivation scaled_derivation(const CPoly& w, const LinearDerivation& d) {
    CDerivation sd;
    for (int j = 0; j < d.m(); ++j) {
        CPoly img(d.m());
        for (const auto& [i, a] : d.column(j)) img += a * CPoly::var(d.m(), i);
        sd.images.push_back(w * img);
    }
    return sd;
}

CEndo exp_scaled(const CPoly& w, const LinearDerivation& d) {
    if (!apply(d, w).is_zero())
        throw std::invalid_argument("exp_scaled: w is not a constant of the base derivation");
    int m = d.m();
    CEndo phi;
    for (int j = 0; j < m; ++j) {
        // (w d)^k x_j = w^k d^k x_j because d(w) = 0.
        CPoly sum(m), chain = CPoly::var(m, j), wpow = CPoly::unit(m);
        Rat fact = 1;
        long k = 0;
        while (!chain.is_zero()) {
            sum += Rat(1 / fact) * (wpow * chain);
            chain = apply(d, chain);
            wpow = wpow * w;
            ++k;
            fact *= k;
        }
        phi.images.push_back(sum);
    }
    return phi;
}

namespace {

template <class P, class Endo>
std::vector<P> log_images(const Endo& phi, int m) {
    std::vector<P> diffs;
    for (int j = 0; j < m; ++j) diffs.push_back(phi.images[j] - P::var(m, j));
    std::vector<CPoly> shape;
    for (const auto& f : diffs)
        if constexpr (std::is_same_v<P, CPoly>)
            shape.push_back(f);
        else {
            // Occurrence projection, not abelianization: one positive
            // monomial per word, so cancellation cannot hide a variable
            // dependency (x*y - y*x must not certify as a zero shape).
            CPoly s(m);
            for (const auto& [w, c] : f.terms()) {
                Monomial e(m, 0);
                for (int letter : w) ++e[letter];
                s.add_term(e, Rat(1));
            }
            shape.push_back(s);
        }
    // A triangular shape certifies termination.  Without it the series still
    // runs, under tight iteration and size budgets, and only a terminating
    // run is accepted; unipotence in general is not decided here.
    const bool certified = triangular_up_to_permutation(shape);
    const long max_iter = certified ? 100000 : 512;
    const std::size_t max_terms = certified ? SIZE_MAX : (std::size_t{1} << 20);
    const long max_deg = certified ? -1 : 256;
    // Cumulative substitution work (terms times degree, summed over
    // iterations); keeps a diverging series from burning minutes before the
    // per-state caps trip.
    const long max_work = certified ? -1 : (1L << 18);
    long work = 0;
    auto total_degree = [](const P& f) {
        long d = 0;
        for (const auto& [key, coef] : f.terms()) {
            long t = 0;
            if constexpr (std::is_same_v<P, CPoly>)
                for (int e : key) t += e;
            else
                t = static_cast<long>(key.size());
            d = std::max(d, t);
        }
        return d;
    };
    std::vector<P> out;
    for (int j = 0; j < m; ++j) {
        P sum(m), chain = diffs[j];
        long k = 1;
        while (!chain.is_zero()) {
            Rat coef((k % 2 == 1) ? 1 : -1, k);
            coef.canonicalize();
            sum += coef * chain;
            long deg = total_degree(chain);
            if (max_deg >= 0 && deg > max_deg)
                throw NotLocallyNilpotent(
                    "log series did not terminate within budget; no unipotence certificate");
            work += static_cast<long>(chain.terms().size()) * (deg + 1);
            if (max_work >= 0 && work > max_work)
                throw NotLocallyNilpotent(
                    "log series did not terminate within budget; no unipotence certificate");
            chain = phi(chain) - chain;
            ++k;
            if (k > max_iter || chain.terms().size() > max_terms)
                throw NotLocallyNilpotent(
                    "log series did not terminate within budget; no unipotence certificate");
        }
        out.push_back(sum);
    }
    return out;
}

}  // namespace

CDerivation log_endo(const CEndo& phi) {
    return CDerivation{log_images<CPoly>(phi, static_cast<int>(phi.images.size()))};
}

NCDerivation log_endo(const NCEndo& phi) {
    return NCDerivation{log_images<NCPoly>(phi, static_cast<int>(phi.images.size()))};
}

bool fixed_point_check(const CEndo& phi, const CPoly& f) { return phi(f) == f; }
bool fixed_point_check(const NCEndo& phi, const NCPoly& f) { return phi(f) == f; }

}  // namespace weitz
