#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weitz/rational.hpp"

namespace weitz {

// A word over the indexed alphabet x_1 < x_2 < ... stored as 0-based letter
// indices.  The empty word is the multiplicative unit.
using Word = std::vector<int>;

// Degree-lexicographic order: shorter words first, ties broken letter by
// letter with x_1 smallest.  This is the canonical term order used for
// rendering, echelonization and minimal-monomial extraction.
struct WordDegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

std::vector<int> word_multidegree(const Word& w, int arity);

// Polynomial in the free associative algebra K<x_1,...,x_m> with exact
// rational coefficients.  Terms with zero coefficient are never stored.
class NCPoly {
  public:
    using Terms = std::map<Word, Rat, WordDegLex>;

    explicit NCPoly(int arity = 0) : arity_(arity) {}

    static NCPoly zero(int arity) { return NCPoly(arity); }
    static NCPoly unit(int arity);
    static NCPoly var(int arity, int j);
    static NCPoly term(int arity, Word w, Rat c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const Word& w) const;
    void add_term(const Word& w, const Rat& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const Rat& c, const NCPoly& p);
    bool operator==(const NCPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    // Maximum word length; -1 for the zero polynomial.
    int degree() const;

    // Letter-count vector of one term.
    std::vector<int> multidegree_of(const Word& w) const { return word_multidegree(w, arity_); }

    // Multidegree shared by all terms, if there is one.
    std::optional<std::vector<int>> multidegree() const;

    // Sum of the terms with the given letter counts.
    NCPoly component(const std::vector<int>& multideg) const;

    // Sum of the terms of the given total degree.
    NCPoly homogeneous_component(int n) const;

    // Image under the algebra endomorphism x_j |-> images[j].  All images
    // must share one arity, which becomes the arity of the result.
    NCPoly substitute(const std::vector<NCPoly>& images) const;

  private:
    int arity_;
    Terms terms_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);

// Left-normed commutator [a_1,a_2,...,a_k] = [...[[a_1,a_2],a_3],...,a_k].
NCPoly left_normed_commutator(const std::vector<NCPoly>& args);

}  // namespace weitz
