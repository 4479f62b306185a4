#ifndef TORIC_POLYTOPES_HPP
#define TORIC_POLYTOPES_HPP

#include <string>
#include <vector>

#include "toric/complexes.hpp"
#include "toric/index_set.hpp"

namespace toric {

/**
 * A face of a simple polytope, identified by the set of facets whose
 * intersection it is. The empty set is the polytope itself.
 */
struct Face
{
    IndexSet facets;

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;
};

/**
 * A simple n-polytope given combinatorially: facet labels and, for every
 * vertex, the set of the n facets containing it.
 */
class CombinatorialPolytope
{
public:
    /// Validates simplicity, distinct vertices, and nonempty facets.
    CombinatorialPolytope(int dimension, std::vector<std::string> facet_labels,
                          std::vector<IndexSet> vertices);

    int dimension() const { return dimension_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    const std::vector<std::string>& facet_labels() const { return facets_; }
    const std::string& facet_label(int i) const { return facets_.at(static_cast<std::size_t>(i)); }
    int facet_index(std::string_view label) const;

    const std::vector<IndexSet>& vertices() const { return vertices_; }
    IndexSet vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
    /// Index of the vertex with the given facet set, or -1.
    int find_vertex(IndexSet facets) const;

    int face_dimension(const Face& e) const { return dimension_ - e.facets.size(); }
    /// True iff the facet set is realised at some vertex (nonempty face).
    bool is_face(const Face& e) const;
    /// Vertices whose facet set contains e.facets.
    std::vector<int> vertices_of(const Face& e) const;
    bool face_contains_vertex(const Face& e, int v) const
    {
        return e.facets.is_subset_of(vertex(v));
    }
    /// Facets F_j, j not in e, with E cap F_j nonempty, in index order.
    std::vector<int> facets_of(const Face& e) const;

    /// All nonempty faces (including the polytope itself), sorted by
    /// decreasing dimension and then lexicographically by facet set.
    std::vector<Face> faces() const;

    /// The face viewed as a simple polytope in its own right; facets are
    /// facets_of(e) in order, vertices are vertices_of(e) in order.
    CombinatorialPolytope face_polytope(const Face& e) const;

    friend bool operator==(const CombinatorialPolytope&, const CombinatorialPolytope&) = default;

private:
    int dimension_ = 0;
    std::vector<std::string> facets_;
    std::vector<IndexSet> vertices_;
};

/// Nerve complex: vertices are facet labels, faces are facet sets realised
/// at some vertex.
SimplicialComplex to_nerve(const CombinatorialPolytope& q);

/**
 * Dual polytope of a polytopal nerve: vertices are the maximal faces, sorted.
 * Checks purity (every maximal face has exactly n vertices) only; the
 * complex is trusted to be the nerve of some simple polytope.
 */
CombinatorialPolytope from_nerve(const SimplicialComplex& k, int dimension);

/**
 * Result of wedging a polytope at a facet F_i.
 *
 * Facets are ordered as the wedge nerve: Q+ first (label F_i_2), then the
 * original facets with F_i replaced by Q- (label F_i_1). Facet s of Q maps
 * to index s+1. Vertices are sorted.
 */
struct PolytopalWedge
{
    CombinatorialPolytope polytope;
    int facet = 0;
    /// plus[v] = index of v x {1} for v not on F_i, -1 otherwise.
    std::vector<int> plus;
    /// minus[v] = index of v x {0} (for v on F_i, the single image of v).
    std::vector<int> minus;

    static constexpr int kTop = 0;   ///< index of Q+
    int bottom() const { return facet + 1; }   ///< index of Q-
};

PolytopalWedge polytopal_wedge(const CombinatorialPolytope& q, int facet);

/// Same dimension and facet labels, and the same vertex facet-sets up to
/// vertex order.
bool same_combinatorics(const CombinatorialPolytope& a, const CombinatorialPolytope& b);

/// Cartesian product; facets of p come first.
CombinatorialPolytope product(const CombinatorialPolytope& p, const CombinatorialPolytope& q);

/// (f_0, ..., f_{n-1}): f_i = number of i-dimensional faces.
std::vector<long long> f_vector(const CombinatorialPolytope& q);
/// (h_0, ..., h_n) from sum h_i t^i = sum f_i (t-1)^i, with f_n = 1.
std::vector<long long> h_vector(const CombinatorialPolytope& q);

}   // namespace toric

#endif
