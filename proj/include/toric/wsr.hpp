#ifndef TORIC_WSR_HPP
#define TORIC_WSR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/charpair.hpp"
#include "toric/retraction.hpp"

namespace toric {

using Exponent = std::vector<int>;

/**
 * Sparse polynomial with rational coefficients in a fixed number of
 * variables. Zero coefficients are never stored.
 */
class Polynomial
{
public:
    explicit Polynomial(int variables = 0) : variables_(variables) {}

    static Polynomial constant(int variables, const Rational& c);
    static Polynomial variable(int variables, int index, const Rational& c = 1);
    static Polynomial monomial(const Exponent& e, const Rational& c = 1);
    /// sum_k coefficients(k) * x_k.
    static Polynomial linear(const RatVector& coefficients);
    static Polynomial linear(const IntVector& coefficients);

    int variables() const { return variables_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Exponent& e) const;
    /// All coefficients are integers.
    bool is_integral() const;

    void add_term(const Exponent& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(int k) const;

    /**
     * Substitutes x_j -> forms.row(j), a linear form in forms.cols()
     * variables. forms.rows() must equal variables().
     */
    Polynomial substitute(const RatMatrix& forms) const;

private:
    int variables_ = 0;
    std::map<Exponent, Rational> terms_;
};

/// Human-readable form; names default to x1, x2, ...
std::string to_string(const Polynomial& p, const std::vector<std::string>& names = {});
std::string to_string(const Rational& r);

/**
 * z^v as an m x n rational matrix: row j holds the coefficients of z^v_j in
 * u_1, ..., u_n. Rows of facets not at v are zero; the others stack to
 * Lambda_v^{-1}.
 */
RatMatrix z_vector(const CharacteristicPair& pair, int vertex);

struct MembershipWitness
{
    int vertex = 0;
    /// Monomial in the u-variables and its non-integral coefficient.
    Exponent monomial;
    Rational coefficient;
};

struct MembershipResult
{
    bool member = true;
    std::optional<MembershipWitness> witness;
};

/// f(z^v) has integer coefficients at every vertex; otherwise the first failure.
MembershipResult int_membership(const CharacteristicPair& pair, const Polynomial& f);

/// Degree-d monomials in `variables` variables, lexicographically decreasing.
std::vector<Exponent> monomials(int variables, int degree);

/**
 * Basis of the lattice of degree-d integer polynomials integral at every
 * z^v. Rows of `basis` are coefficient vectors over `monomials`, in row
 * Hermite normal form.
 */
struct GradedLatticeBasis
{
    int degree = 0;
    std::vector<Exponent> monomials;
    IntMatrix basis;
    /// Common denominator of all monomial evaluations.
    Integer denominator;

    std::vector<Polynomial> polynomials() const;
    /// Smallest c > 0 with c * monomial k in the lattice.
    Integer clearing_integer(int k) const;
};

GradedLatticeBasis graded_basis(const CharacteristicPair& pair, int degree);

/// Whether an integer coefficient vector over basis.monomials lies in the lattice.
bool in_lattice(const GradedLatticeBasis& basis, const IntVector& coefficients);

/// One squarefree monomial per minimal non-face of the nerve.
std::vector<Polynomial> sr_ideal(const CombinatorialPolytope& q);

/// sum_i <lambda_i, e_j> x_i for j = 1..n.
std::vector<Polynomial> linear_ideal(const CharacteristicPair& pair);

/**
 * Generators for the ideal of the J-construction, in the variables of
 * wedge_layout(J): the n forms in the x_{i1} followed by x_{it} - x_{i1}.
 */
std::vector<Polynomial> j_ideal(const CharacteristicPair& pair, const JVector& j);

/**
 * z-vectors of the wedge pair at the facet, derived from those of the base
 * pair. Indexed by the vertices of polytopal_wedge(q, facet).polytope; each
 * is (m+1) x (n+1) with row 0 for Q+ and column 0 for u_0.
 */
std::vector<RatMatrix> wedge_z_vectors(const CharacteristicPair& pair, int facet);

struct CohomologyPresentation
{
    /// The pair whose ring is presented (the base pair or its J-construction).
    CharacteristicPair pair;
    FormalityReport formality;
    std::vector<GradedLatticeBasis> bases;
    std::vector<Polynomial> sr_ideal;
    std::vector<Polynomial> linear_ideal;
    /// Ranks of H^{2k} from a retraction sequence of the presented polytope.
    std::vector<long long> betti_ranks;
};

/**
 * Integrality lattices up to `max_degree` with the Stanley-Reisner and
 * linear ideals. The base pair must pass formality_check, otherwise a
 * HypothesisError is thrown. With J, the J-construction is presented with
 * the ideal from j_ideal().
 */
CohomologyPresentation cohomology_presentation(const CharacteristicPair& pair, int max_degree,
                                               const std::optional<JVector>& j = std::nullopt,
                                               std::uint64_t budget = kDefaultBudget);

}   // namespace toric

#endif
