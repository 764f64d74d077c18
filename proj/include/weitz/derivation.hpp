#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weitz/cpoly.hpp"
#include "weitz/ncpoly.hpp"

namespace weitz {

// Thrown when exp/log is asked for a derivation or endomorphism that carries
// no certificate of local nilpotence / unipotence.
struct NotLocallyNilpotent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Jordan type of a nilpotent linear derivation: a partition p_1 >= p_2 >= ...
// Block i acts on its variables by x_first -> 0, x_j -> x_{j-1}.
struct JordanType {
    std::vector<int> blocks;

    static JordanType parse(const std::string& s);  // "3,2"
    int total() const;
    bool operator==(const JordanType&) const = default;
};

// Linear derivation d(x_j) = sum_i A[i][j] * x_i with nilpotent matrix A.
class LinearDerivation {
  public:
    static LinearDerivation basic(int m);
    static LinearDerivation from_jordan(const JordanType& jt);
    static LinearDerivation from_matrix(std::vector<std::vector<Rat>> mat);

    int m() const { return m_; }
    const std::vector<std::vector<Rat>>& matrix() const { return a_; }
    const std::optional<JordanType>& jordan() const { return jordan_; }

    // Sparse image of x_j: list of (i, coefficient of x_i).
    const std::vector<std::pair<int, Rat>>& column(int j) const { return cols_[j]; }

    bool is_zero() const;

  private:
    LinearDerivation(int m, std::vector<std::vector<Rat>> a, std::optional<JordanType> jt);
    int m_;
    std::vector<std::vector<Rat>> a_;
    std::vector<std::vector<std::pair<int, Rat>>> cols_;
    std::optional<JordanType> jordan_;
};

NCPoly apply(const LinearDerivation& d, const NCPoly& f);
CPoly apply(const LinearDerivation& d, const CPoly& f);

// Derivations given by polynomial images of the generators, extended by the
// Leibniz rule (positionwise in the free algebra, via partials commutatively).
struct CDerivation {
    std::vector<CPoly> images;
};
struct NCDerivation {
    std::vector<NCPoly> images;
};

CPoly apply(const CDerivation& d, const CPoly& f);
NCPoly apply(const NCDerivation& d, const NCPoly& f);

// Algebra endomorphism by generator images; applying means substitution.
struct CEndo {
    std::vector<CPoly> images;
    CPoly operator()(const CPoly& f) const { return f.substitute(images); }
};
struct NCEndo {
    std::vector<NCPoly> images;
    NCPoly operator()(const NCPoly& f) const { return f.substitute(images); }
};

// True when some reordering of the variables makes every image depend only on
// strictly earlier variables (the image of x_j may not involve x_j itself).
bool triangular_up_to_permutation(const std::vector<CPoly>& images);

// exp(d) of a nilpotent linear derivation, as the matrix sum_k A^k / k!.
std::vector<std::vector<Rat>> exp_matrix(const LinearDerivation& d);
CEndo exp_linear_c(const LinearDerivation& d);
NCEndo exp_linear_nc(const LinearDerivation& d);

// exp of a polynomial derivation.  Accepted certificates of local nilpotence:
// images triangular up to a permutation of the variables.  Everything else is
// refused (local nilpotence is not decided in general).
CEndo exp_poly(const CDerivation& d);

// exp(w*d) for a nilpotent linear d and a polynomial constant w of d; then
// (w*d)^k = w^k d^k and the series terminates generator by generator.
CEndo exp_scaled(const CPoly& w, const LinearDerivation& d);

// Scaled derivation w*d itself (images w*d(x_j)); useful to apply directly.
CDerivation scaled_derivation(const CPoly& w, const LinearDerivation& d);

// log of a unipotent automorphism: sum_k (-1)^{k+1} (phi-1)^k / k applied to
// each generator.  Triangularity up to permutation certifies termination; an
// uncertified input is accepted only if the series terminates within a tight
// budget (this covers exp(w*d)-shaped automorphisms), otherwise refused.
CDerivation log_endo(const CEndo& phi);
NCDerivation log_endo(const NCEndo& phi);

bool fixed_point_check(const CEndo& phi, const CPoly& f);
bool fixed_point_check(const NCEndo& phi, const NCPoly& f);

}  // namespace weitz
