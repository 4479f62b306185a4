#include "toric/charpair.hpp"

#include <algorithm>

namespace toric {

CharacteristicPair::CharacteristicPair(CombinatorialPolytope polytope, IntMatrix lambda)
    : polytope_(std::move(polytope)), lambda_(std::move(lambda))
{
    if (lambda_.rows() != polytope_.dimension() || lambda_.cols() != polytope_.facet_count())
        throw DimensionError("characteristic matrix is " + std::to_string(lambda_.rows()) + "x"
                             + std::to_string(lambda_.cols()) + ", expected "
                             + std::to_string(polytope_.dimension()) + "x"
                             + std::to_string(polytope_.facet_count()));
}

namespace {

IntMatrix columns(const IntMatrix& m, const std::vector<int>& cols)
{
    IntMatrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        out.col(static_cast<Eigen::Index>(c)) = m.col(cols[c]);
    return out;
}

int local_index(const std::vector<int>& globals, int global)
{
    auto it = std::find(globals.begin(), globals.end(), global);
    return it == globals.end() ? -1 : static_cast<int>(it - globals.begin());
}

}   // namespace

ConditionReport validate(const CharacteristicPair& pair)
{
    const CombinatorialPolytope& q = pair.polytope();
    for (int v = 0; v < q.vertex_count(); ++v)
    {
        if (det(columns(pair.matrix(), q.vertex(v).to_vector())) == 0)
            return ConditionReport{false, v, q.vertex(v)};
    }
    return {};
}

void require_valid(const CharacteristicPair& pair)
{
    const ConditionReport r = validate(pair);
    if (r.ok)
        return;
    std::string facets;
    for (int f : r.facets.to_vector())
        facets += (facets.empty() ? "" : ", ") + pair.polytope().facet_label(f);
    throw ValidityError("characteristic vectors are linearly dependent at vertex "
                        + std::to_string(r.vertex) + " (facets " + facets + ")");
}

InducedPair induced_pair(const CharacteristicPair& pair, const Face& e)
{
    const CombinatorialPolytope& q = pair.polytope();
    if (e.facets.empty())
        throw DomainError("induced_pair: the face must be proper (E = Q given)");
    if (!q.is_face(e))
        throw DomainError("induced_pair: facet set does not describe a nonempty face");
    return induced_pair(pair, e, saturation_projection(columns(pair.matrix(), e.facets.to_vector())));
}

InducedPair induced_pair(const CharacteristicPair& pair, const Face& e, const IntMatrix& projection)
{
    const CombinatorialPolytope& q = pair.polytope();
    if (e.facets.empty())
        throw DomainError("induced_pair: the face must be proper (E = Q given)");
    if (!q.is_face(e))
        throw DomainError("induced_pair: facet set does not describe a nonempty face");
    const int codim = e.facets.size();
    if (projection.rows() != pair.dimension() - codim || projection.cols() != pair.dimension())
        throw DimensionError("induced_pair: projection has the wrong shape");

    std::vector<int> facets = q.facets_of(e);
    IntMatrix local(projection.rows(), static_cast<Eigen::Index>(facets.size()));
    for (std::size_t c = 0; c < facets.size(); ++c)
    {
        IntVector image = projection * pair.matrix().col(facets[c]);
        local.col(static_cast<Eigen::Index>(c)) = primitive(image);
    }
    return InducedPair{CharacteristicPair(q.face_polytope(e), std::move(local)), projection,
                       std::move(facets), q.vertices_of(e)};
}

IntMatrix vertex_matrix(const CharacteristicPair& pair, const Face& e, int vertex)
{
    const CombinatorialPolytope& q = pair.polytope();
    if (vertex < 0 || vertex >= q.vertex_count())
        throw LookupError("vertex index " + std::to_string(vertex) + " out of range");
    if (!q.face_contains_vertex(e, vertex))
        throw LookupError("vertex " + std::to_string(vertex) + " is not a vertex of the face");
    if (e.facets.empty())
        return columns(pair.matrix(), q.vertex(vertex).to_vector());

    const InducedPair induced = induced_pair(pair, e);
    const int local = local_index(induced.vertices, vertex);
    return vertex_matrix(induced.pair, Face{}, local);
}

Integer local_group_order(const CharacteristicPair& pair, const Face& e, int vertex)
{
    return abs(det(vertex_matrix(pair, e, vertex)));
}

std::vector<Integer> vertex_orders(const CharacteristicPair& pair)
{
    std::vector<Integer> out;
    for (int v = 0; v < pair.vertex_count(); ++v)
        out.push_back(local_group_order(pair, Face{}, v));
    return out;
}

std::vector<LocalOrder> all_local_orders(const CharacteristicPair& pair)
{
    std::vector<LocalOrder> out;
    const CombinatorialPolytope& q = pair.polytope();
    for (const Face& e : q.faces())
    {
        if (e.facets.empty())
        {
            for (int v = 0; v < q.vertex_count(); ++v)
                out.push_back({e, v, local_group_order(pair, e, v)});
            continue;
        }
        const InducedPair induced = induced_pair(pair, e);
        for (std::size_t local = 0; local < induced.vertices.size(); ++local)
            out.push_back({e, induced.vertices[local],
                           local_group_order(induced.pair, Face{}, static_cast<int>(local))});
    }
    return out;
}

IntMatrix lambda_J_matrix(const IntMatrix& lambda, const JVector& j)
{
    const Eigen::Index n = lambda.rows();
    const int m = static_cast<int>(lambda.cols());
    if (j.size() != m)
        throw DimensionError("J has " + std::to_string(j.size()) + " entries but there are "
                             + std::to_string(m) + " facets");
    const WedgeLayout layout = wedge_layout(j);
    const int extra = j.total() - m;
    IntMatrix out = IntMatrix::Zero(extra + n, layout.total);
    int row = 0;
    for (int i = 0; i < m; ++i)
    {
        const auto& copies = layout.copies[static_cast<std::size_t>(i)];
        for (int t = 2; t <= j[i]; ++t, ++row)
        {
            out(row, copies[static_cast<std::size_t>(t - 1)]) = 1;
            out(row, copies[0]) = -1;
        }
    }
    for (int i = 0; i < m; ++i)
        out.block(extra, layout.copies[static_cast<std::size_t>(i)][0], n, 1) = lambda.col(i);
    return out;
}

CharacteristicPair lambda_J(const CharacteristicPair& pair, const JVector& j)
{
    const CombinatorialPolytope& q = pair.polytope();
    if (j.size() != q.facet_count())
        throw DimensionError("J has " + std::to_string(j.size()) + " entries but there are "
                             + std::to_string(q.facet_count()) + " facets");
    const int dim = q.dimension() + j.total() - q.facet_count();
    CombinatorialPolytope wedged = from_nerve(wedge(to_nerve(q), j), dim);
    return CharacteristicPair(std::move(wedged), lambda_J_matrix(pair.matrix(), j));
}

CharacteristicPair wps_pair(const std::vector<Integer>& chi)
{
    if (chi.size() < 2)
        throw DomainError("wps_pair: need at least two weights");
    Integer g = 0;
    for (const Integer& c : chi)
    {
        if (c <= 0)
            throw DomainError("wps_pair: weights must be positive");
        g = gcd(g, c);
    }
    if (g != 1)
        throw DomainError("wps_pair: weights must have gcd 1, got gcd " + g.str());

    const int n = static_cast<int>(chi.size()) - 1;
    IntMatrix weights(n + 1, 1);
    for (int i = 0; i <= n; ++i)
        weights(i, 0) = chi[static_cast<std::size_t>(i)];

    // Rows of the projection span the lattice orthogonal to chi.
    IntMatrix lambda = hermite_normal_form(saturation_projection(weights)).H;

    if ((lambda * weights).any() || smith_normal_form(lambda).diagonal() != std::vector<Integer>(
                                         static_cast<std::size_t>(n), Integer(1)))
        throw StructuralError("wps_pair: constructed vectors fail the weight or span condition");

    std::vector<std::string> labels;
    std::vector<IndexSet> verts;
    for (int i = 0; i <= n; ++i)
    {
        labels.push_back("F" + std::to_string(i + 1));
        verts.push_back(IndexSet::range(n + 1).without(i));
    }
    return CharacteristicPair(CombinatorialPolytope(n, std::move(labels), std::move(verts)),
                              std::move(lambda));
}

}   // namespace toric
