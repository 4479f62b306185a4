#ifndef TORIC_CHARPAIR_HPP
#define TORIC_CHARPAIR_HPP

#include <vector>

#include "toric/complexes.hpp"
#include "toric/exact_linalg.hpp"
#include "toric/polytopes.hpp"

namespace toric {

/**
 * A simple n-polytope with m facets together with an integer vector per
 * facet, stored as the n x m characteristic matrix (column j = lambda(F_j)).
 *
 * The constructor only checks shapes; use validate() for the linear
 * independence condition at vertices.
 */
class CharacteristicPair
{
public:
    CharacteristicPair(CombinatorialPolytope polytope, IntMatrix lambda);

    const CombinatorialPolytope& polytope() const { return polytope_; }
    const IntMatrix& matrix() const { return lambda_; }
    IntVector vector(int facet) const { return lambda_.col(facet); }

    int dimension() const { return polytope_.dimension(); }
    int facet_count() const { return polytope_.facet_count(); }
    int vertex_count() const { return polytope_.vertex_count(); }

    friend bool operator==(const CharacteristicPair& a, const CharacteristicPair& b)
    {
        return a.polytope_ == b.polytope_ && a.lambda_.rows() == b.lambda_.rows()
            && a.lambda_.cols() == b.lambda_.cols() && a.lambda_ == b.lambda_;
    }

private:
    CombinatorialPolytope polytope_;
    IntMatrix lambda_;
};

/// Outcome of checking linear independence at every vertex.
struct ConditionReport
{
    bool ok = true;
    /// First offending vertex and its (zero) determinant when !ok.
    int vertex = -1;
    IndexSet facets;
};

/**
 * Checks that Lambda_v is nonsingular at every vertex. Independence at a
 * vertex implies independence on every subset of its facets, and every
 * nonempty face's facet set lies in some vertex's facet set, so checking
 * vertices suffices.
 */
ConditionReport validate(const CharacteristicPair& pair);

/// Throws ValidityError naming the offending vertex if validate() fails.
void require_valid(const CharacteristicPair& pair);

/**
 * The pair induced on a proper face E: the face as a polytope, with
 * lambda_E(E cap F_j) = primitive(projection * lambda(F_j)).
 */
struct InducedPair
{
    CharacteristicPair pair;
    /// (n-k) x n projection onto Z^n / saturation of the span of E's vectors.
    IntMatrix projection;
    /// Global facet index of each local facet.
    std::vector<int> facets;
    /// Global vertex index of each local vertex.
    std::vector<int> vertices;
};

InducedPair induced_pair(const CharacteristicPair& pair, const Face& e);

/// Same, with a caller-supplied projection (any surjection Z^n -> Z^(n-k)
/// whose kernel is the saturated span).
InducedPair induced_pair(const CharacteristicPair& pair, const Face& e, const IntMatrix& projection);

/**
 * Lambda_{E,v}: columns are the induced vectors of the facets of E at v, in
 * facet-index order. For E = Q these are lambda(F_s) for the facets at v.
 */
IntMatrix vertex_matrix(const CharacteristicPair& pair, const Face& e, int vertex);

/// |G_E(v)| = |det Lambda_{E,v}|.
Integer local_group_order(const CharacteristicPair& pair, const Face& e, int vertex);

/// |G_Q(v)| for every vertex, in vertex order.
std::vector<Integer> vertex_orders(const CharacteristicPair& pair);

struct LocalOrder
{
    Face face;
    int vertex = 0;
    Integer order;
};

/// |G_E(v)| for every face E and every vertex v of E.
std::vector<LocalOrder> all_local_orders(const CharacteristicPair& pair);

/**
 * Block characteristic matrix Lambda_(J), of size (d(J) - m + n) x d(J).
 * Columns follow wedge_layout(J). For each i with j_i >= 2 there is a block
 * of j_i - 1 rows with +1 in the columns w_{i,t}, t >= 2, and -1 in column
 * w_{i,1}; the last n rows hold Lambda in the w_{i,1} columns.
 */
IntMatrix lambda_J_matrix(const IntMatrix& lambda, const JVector& j);

/// (Q_(J), lambda_(J)), with Q_(J) dual to the wedge of the nerve.
CharacteristicPair lambda_J(const CharacteristicPair& pair, const JVector& j);

/**
 * Weighted projective space pair on the n-simplex for weights chi (length
 * n+1, gcd 1): sum chi_i lambda(F_i) = 0 and the lambda(F_i) span Z^n.
 * Vertex i of the simplex is the one omitting F_i. The matrix is returned
 * in row Hermite normal form.
 */
CharacteristicPair wps_pair(const std::vector<Integer>& chi);

}   // namespace toric

#endif
