#include "weitz/series.hpp"

#include <stdexcept>
#include <string>

namespace weitz {

TruncSeries2 TruncSeries2::one(int trunc) { return monomial(trunc, 0, 0); }

TruncSeries2 TruncSeries2::monomial(int trunc, int i, int j, const Rat& c) {
    TruncSeries2 s(trunc);
    s.add(i, j, c);
    return s;
}

Rat TruncSeries2::coefficient(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Rat(0) : it->second;
}

void TruncSeries2::add(int i, int j, const Rat& v) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    if (i + j > trunc_ || v == 0) return;
    auto [it, fresh] = c_.emplace(std::pair{i, j}, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

TruncSeries2& TruncSeries2::operator+=(const TruncSeries2& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    std::erase_if(c_, [&](const auto& kv) { return kv.first.first + kv.first.second > trunc_; });
    for (const auto& [k, v] : o.c_) add(k.first, k.second, v);
    return *this;
}

TruncSeries2& TruncSeries2::operator-=(const TruncSeries2& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    std::erase_if(c_, [&](const auto& kv) { return kv.first.first + kv.first.second > trunc_; });
    for (const auto& [k, v] : o.c_) add(k.first, k.second, -v);
    return *this;
}

TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) {
    TruncSeries2 r(std::min(a.trunc_, b.trunc_));
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_)
            r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

TruncSeries2 operator*(const Rat& s, const TruncSeries2& a) {
    TruncSeries2 r(a.trunc_);
    if (s == 0) return r;
    for (const auto& [k, v] : a.c_) r.c_[k] = s * v;
    return r;
}

TruncSeries2 TruncSeries2::inverse() const {
    Rat c0 = coefficient(0, 0);
    if (c0 == 0) throw std::invalid_argument("inverse: constant term is zero");
    // g_0 = 1/c0; then degreewise g_n = -1/c0 * sum_{k=1..n} f_k g_{n-k}.
    TruncSeries2 g(trunc_);
    g.add(0, 0, 1 / c0);
    for (int n = 1; n <= trunc_; ++n) {
        TruncSeries2 acc(trunc_);
        for (const auto& [kf, vf] : c_) {
            int df = kf.first + kf.second;
            if (df == 0 || df > n) continue;
            for (const auto& [kg, vg] : g.c_) {
                if (kg.first + kg.second != n - df) continue;
                acc.add(kf.first + kg.first, kf.second + kg.second, vf * vg);
            }
        }
        for (const auto& [k, v] : acc.c_)
            if (k.first + k.second == n) g.add(k.first, k.second, -v / c0);
    }
    return g;
}

TruncSeries2 schur2(int l1, int l2, int trunc) {
    if (l1 < l2 || l2 < 0) throw std::invalid_argument("not a partition");
    TruncSeries2 s(trunc);
    for (int k = 0; k <= l1 - l2; ++k) s.add(l1 - k, l2 + k, 1);
    return s;
}

TruncSeries2 hilbert_of_context(const AlgebraContext& ctx, int trunc) {
    if (ctx.rank() != 2) throw std::invalid_argument("hilbert_of_context needs a rank-2 context");
    TruncSeries2 h(trunc);
    for (int i = 0; i <= trunc; ++i)
        for (int j = 0; i + j <= trunc; ++j)
            h.add(i, j, Rat(static_cast<long>(ctx.basis({i, j}).size())));
    return h;
}

MultTable schur_decompose(const TruncSeries2& f) {
    TruncSeries2 rem = f;
    MultTable table;
    for (int n = 0; n <= f.trunc(); ++n)
        for (int l1 = n; 2 * l1 >= n; --l1) {
            int l2 = n - l1;
            Rat c = rem.coefficient(l1, l2);
            if (c == 0) continue;
            if (c.get_den() != 1)
                throw std::invalid_argument("schur_decompose: non-integral multiplicity at (" +
                                            std::to_string(l1) + "," + std::to_string(l2) + ")");
            table[{l1, l2}] = static_cast<long>(c.get_num().get_si());
            rem -= c * schur2(l1, l2, f.trunc());
        }
    if (!rem.coeffs().empty())
        throw std::invalid_argument("schur_decompose: series is not symmetric");
    return table;
}

TruncSeries2 mult_series_M(const MultTable& m, int trunc) {
    TruncSeries2 s(trunc);
    for (const auto& [l, c] : m) s.add(l.first, l.second, Rat(c));
    return s;
}

TruncSeries2 mult_series_Mprime(const MultTable& m, int trunc) {
    TruncSeries2 s(trunc);
    for (const auto& [l, c] : m)
        if (l.first + l.second <= trunc) s.add(l.first - l.second, l.second, Rat(c));
    return s;
}

TruncSeries2 mult_inverse(const MultTable& m, int trunc) {
    // Numerator t1 M'(t1, t1 t2) - t2 M'(t2, t1 t2): the partition (l1, l2)
    // contributes +- at t1^{1+l1} t2^{l2} and t1^{l2} t2^{1+l1}.
    std::map<std::pair<int, int>, Rat> num;
    for (const auto& [l, c] : m) {
        if (l.first + l.second > trunc) continue;
        num[{1 + l.first, l.second}] += Rat(c);
        num[{l.second, 1 + l.first}] -= Rat(c);
    }
    TruncSeries2 q(trunc);
    for (int n = 0; n <= trunc; ++n) {
        // Division of the degree n+1 component by t1 - t2: prefix sums.
        Rat run(0);
        for (int j = 0; j <= n; ++j) {
            auto it = num.find({n + 1 - j, j});
            if (it != num.end()) run += it->second;
            q.add(n - j, j, run);
        }
        Rat boundary(0);
        auto it = num.find({0, n + 1});
        if (it != num.end()) boundary = it->second;
        if (run != -boundary)
            throw std::logic_error("mult_inverse: numerator not divisible by t1 - t2");
    }
    return q;
}

bool inverse_multiplicity_check(const TruncSeries2& f) {
    return mult_inverse(schur_decompose(f), f.trunc()) == f;
}

std::vector<Rat> specialize(const TruncSeries2& s, int w1, int w2) {
    if (w1 < 1 || w2 < 1) throw std::invalid_argument("weights must be positive");
    std::vector<Rat> out(static_cast<std::size_t>(s.trunc()) + 1, Rat(0));
    for (const auto& [k, v] : s.coeffs()) {
        long d = static_cast<long>(k.first) * w1 + static_cast<long>(k.second) * w2;
        if (d <= s.trunc()) out[static_cast<std::size_t>(d)] += v;
    }
    return out;
}

std::vector<Rat> catalan_coefficients(int nmax) {
    if (nmax < 0) throw std::invalid_argument("negative order");
    std::vector<Rat> c(static_cast<std::size_t>(nmax) + 1, Rat(0));
    c[0] = 1;
    for (int n = 1; n <= nmax; ++n)
        for (int i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
    return c;
}

TruncSeries2 constants_hilbert_free2(int trunc) {
    // The term of the partition (l1, l2) lands at t^{l1-l2} v^{l2}, total
    // displayed degree l1; partitions with l1 <= trunc cover the truncation.
    TruncSeries2 h(trunc);
    for (int l1 = 0; l1 <= trunc; ++l1)
        for (int l2 = 0; l2 <= l1; ++l2) {
            unsigned n = static_cast<unsigned>(l1 + l2);
            Rat mult = rat_binomial(n, static_cast<unsigned>(l2));
            if (l2 >= 1) mult -= rat_binomial(n, static_cast<unsigned>(l2 - 1));
            h.add(l1 - l2, l2, mult);
        }
    return h;
}

TruncSeries2 free_generators_series(int trunc) {
    std::vector<Rat> cat = catalan_coefficients(trunc);
    TruncSeries2 a(trunc);
    a.add(1, 0, 1);
    for (int n = 0; n + 1 <= trunc; ++n) a.add(0, n + 1, cat[static_cast<std::size_t>(n)]);
    return a;
}

}  // namespace weitz
