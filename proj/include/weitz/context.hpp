#pragma once

#include <map>
#include <string>
#include <vector>

#include "weitz/derivation.hpp"
#include "weitz/ncpoly.hpp"

namespace weitz {

// Basis key of a context's normal basis.  tag selects the structural part
// (0 = plain monomial or word; higher tags name a commutator or module
// generator, context-specific).  e is a word when word_seq is set (free
// context) and an exponent vector otherwise.  The ordering is the canonical
// deg-lex order on each part: degree first, then x_1-heavy elements first,
// with tag 0 before the structural tags.
struct BKey {
    int tag = 0;
    bool word_seq = false;
    std::vector<int> e;

    bool operator==(const BKey&) const = default;
};

bool operator<(const BKey& a, const BKey& b);

// Element of a quotient context: exact rational coordinates on normal basis
// keys.  All structure (product, derivation action) lives on AlgebraContext.
struct CtxElem {
    std::map<BKey, Rat> c;

    bool is_zero() const { return c.empty(); }
    void add(const BKey& k, const Rat& v);
    CtxElem& operator+=(const CtxElem& o);
    CtxElem& operator-=(const CtxElem& o);
    friend CtxElem operator+(CtxElem a, const CtxElem& b) { return a += b; }
    friend CtxElem operator-(CtxElem a, const CtxElem& b) { return a -= b; }
    friend CtxElem operator*(const Rat& s, const CtxElem& x);
    bool operator==(const CtxElem&) const = default;
};

enum class CtxKind { FreeAssoc, Commutative, Metabelian2, GrassmannL2, Wreath, Trace2x2 };

// A unital algebra presented through an explicit normal basis: the free
// algebra itself, the polynomial algebra, and the relatively free quotients
// the toolkit computes in.  Reduction maps free elements onto the normal
// basis; gradings are by multidegree in the algebra generators.
class AlgebraContext {
  public:
    static AlgebraContext free_assoc(int m);
    static AlgebraContext commutative(int m);
    static AlgebraContext commutative_weighted(int m, std::vector<int> weights,
                                               std::vector<std::string> names);
    static AlgebraContext metabelian2();
    static AlgebraContext grassmann_l2(int m);  // rank 2 or 3
    static AlgebraContext wreath(int m);
    static AlgebraContext trace2x2();

    CtxKind kind() const { return kind_; }
    int rank() const { return rank_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }

    CtxElem zero() const { return {}; }
    CtxElem unit() const;
    CtxElem gen(int j) const;

    // Image of a free-algebra element (arity = rank()) in the context.
    CtxElem reduce(const NCPoly& f) const;

    CtxElem mul(const CtxElem& a, const CtxElem& b) const;

    std::vector<int> key_multidegree(const BKey& k) const;
    long key_degree(const BKey& k) const;

    // Normal basis of one multidegree component / one total-degree layer.
    std::vector<BKey> basis(const std::vector<int>& multidegree) const;
    std::vector<BKey> basis_layer(int degree) const;

    // Action of a linear derivation on the generators, extended to the
    // context by the Leibniz rule.  The derivation's rank must equal rank().
    CtxElem apply_linear(const LinearDerivation& d, const CtxElem& x) const;

    std::string render_key(const BKey& k) const;
    std::string render(const CtxElem& x) const;

  private:
    AlgebraContext() = default;

    CtxKind kind_ = CtxKind::FreeAssoc;
    int rank_ = 0;
    std::vector<std::string> names_;
    std::vector<int> weights_;  // generator degree weights (grading)
};

}  // namespace weitz
