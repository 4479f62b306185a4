#ifndef TORIC_COMPLEXES_HPP
#define TORIC_COMPLEXES_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "toric/index_set.hpp"

namespace toric {

/**
 * A simplicial complex on a labelled vertex list, stored by its minimal
 * non-faces. Faces are enumerated on demand.
 *
 * Minimal non-faces must form an antichain of sets of size >= 2; a size-1
 * minimal non-face (ghost vertex) is rejected.
 */
class SimplicialComplex
{
public:
    /// The empty complex on zero vertices.
    SimplicialComplex() = default;

    SimplicialComplex(std::vector<std::string> vertices, std::vector<IndexSet> minimal_nonfaces);

    static SimplicialComplex from_labels(std::vector<std::string> vertices,
                                         const std::vector<std::vector<std::string>>& nonfaces);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& label(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }

    /// Index of a vertex label; throws LookupError if absent.
    int index_of(std::string_view label) const;
    bool has_vertex(std::string_view label) const;

    /// Sorted by IndexSet ordering (size, then lexicographic).
    const std::vector<IndexSet>& minimal_nonfaces() const { return nonfaces_; }

    /// Minimal non-faces as sets of labels, for order-independent comparison.
    std::set<std::set<std::string>> labelled_nonfaces() const;

    bool is_face(IndexSet s) const;

    /// All faces, including the empty face, sorted by IndexSet ordering.
    std::vector<IndexSet> faces() const;
    std::vector<IndexSet> maximal_faces() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<IndexSet> nonfaces_;
};

/// Positive multiplicities (j_1, ..., j_m), one per vertex of a base complex.
class JVector
{
public:
    explicit JVector(std::vector<int> entries);

    /// (1, ..., 1, 2, 1, ..., 1) with the 2 at `position`.
    static JVector single(int length, int position);
    static JVector ones(int length);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& entries() const { return entries_; }
    /// d(J), the sum of the entries.
    int total() const;

private:
    std::vector<int> entries_;
};

/// Label of the t-th copy (t >= 1) of a vertex in a wedge.
std::string wedge_label(std::string_view base, int t);

/**
 * Index layout of the wedge vertex list: all copies t >= 2 of every vertex,
 * block by block, followed by the first copies w_11, ..., w_m1.
 */
struct WedgeLayout
{
    /// copies[i][t-1] = position of w_{i,t} in the wedge vertex list.
    std::vector<std::vector<int>> copies;
    int total = 0;
};

WedgeLayout wedge_layout(const JVector& j);

/**
 * K_(J): each vertex w_i becomes the block {w_i1, ..., w_ij_i}, and each
 * minimal non-face becomes the union of the blocks of its vertices.
 * Vertices with j_i = 1 keep their label; others are labelled by
 * wedge_label(). Vertex order follows wedge_layout().
 */
SimplicialComplex wedge(const SimplicialComplex& k, const JVector& j);

/// Simplicial wedge at a single vertex: wedge() with J = (1,..,2,..,1).
SimplicialComplex wedge_at_vertex(const SimplicialComplex& k, std::string_view vertex);

/// Join on disjoint vertex sets; vertices of k1 come first.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// link_K{w}: vertices adjacent to w, with induced minimal non-faces.
SimplicialComplex link(const SimplicialComplex& k, std::string_view vertex);

/// Vertex deletion K \ {w}.
SimplicialComplex deletion(const SimplicialComplex& k, std::string_view vertex);

/// Boundary of the n-simplex on vertex labels prefix1..prefix(n+1).
SimplicialComplex simplex_boundary(int n, std::string_view prefix = "w");

}   // namespace toric

#endif
