#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weitz/ncpoly.hpp"
#include "weitz/rational.hpp"

namespace weitz {

// Exponent vector of a commutative monomial; index i is the exponent of x_{i+1}.
using Monomial = std::vector<int>;

// Degree-lexicographic order matching WordDegLex on sorted words: total degree
// first, then more weight on earlier variables means smaller (x1^2 < x1*x2 < x2^2).
struct MonoDegLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// Polynomial in K[x_1,...,x_m] with exact rational coefficients.
class CPoly {
  public:
    using Terms = std::map<Monomial, Rat, MonoDegLex>;

    explicit CPoly(int arity = 0) : arity_(arity) {}

    static CPoly zero(int arity) { return CPoly(arity); }
    static CPoly unit(int arity);
    static CPoly constant(int arity, Rat c);
    static CPoly var(int arity, int j);
    static CPoly term(int arity, Monomial e, Rat c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    Rat coeff(const Monomial& e) const;
    void add_term(const Monomial& e, const Rat& c);

    CPoly operator-() const;
    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    friend CPoly operator*(const Rat& c, const CPoly& p);
    bool operator==(const CPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    CPoly pow(unsigned n) const;

    // Total degree; -1 for zero.  Weighted variant sums weights[j]*e_j.
    int degree() const;
    long weighted_degree(const std::vector<int>& weights) const;
    bool is_homogeneous(const std::vector<int>& weights, long* deg_out = nullptr) const;

    CPoly homogeneous_component(int n) const;

    // Formal partial derivative d/dx_j.
    CPoly partial(int j) const;

    CPoly substitute(const std::vector<CPoly>& images) const;
    Rat eval(const std::vector<Rat>& point) const;

    // Exact division: returns f/g when g divides f, nullopt otherwise.
    std::optional<CPoly> divide_exact(const CPoly& g) const;

  private:
    int arity_;
    Terms terms_;
};

// Image of a free-algebra element under the natural map onto K[x_1,...,x_m].
CPoly abelianize(const NCPoly& p);

}  // namespace weitz
