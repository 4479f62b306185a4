#include "toric/polytopes.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace toric {

CombinatorialPolytope::CombinatorialPolytope(int dimension, std::vector<std::string> facet_labels,
                                             std::vector<IndexSet> vertices)
    : dimension_(dimension), facets_(std::move(facet_labels)), vertices_(std::move(vertices))
{
    if (dimension_ < 0)
        throw DimensionError("polytope dimension must be nonnegative");
    if (facets_.size() > static_cast<std::size_t>(IndexSet::kCapacity))
        throw DimensionError("polytope has more than 64 facets");
    if (vertices_.empty())
        throw ValidityError("polytope has no vertices");

    std::unordered_set<std::string> labels;
    for (const auto& f : facets_)
        if (!labels.insert(f).second)
            throw NamingError("duplicate facet label '" + f + "'");

    const IndexSet all = IndexSet::range(facet_count());
    std::unordered_set<IndexSet> seen;
    IndexSet used;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
    {
        const IndexSet& s = vertices_[v];
        if (!s.is_subset_of(all))
            throw DimensionError("vertex " + std::to_string(v) + " refers to an unknown facet");
        if (s.size() != dimension_)
            throw ValidityError("vertex " + std::to_string(v) + " lies on " + std::to_string(s.size())
                                + " facets, expected " + std::to_string(dimension_)
                                + " (polytope is not simple)");
        if (!seen.insert(s).second)
            throw ValidityError("vertex " + std::to_string(v) + " repeats another vertex's facet set");
        used = used | s;
    }
    if (used != all)
        throw ValidityError("facet '" + facets_[static_cast<std::size_t>((all - used).front())]
                            + "' contains no vertex");
}

int CombinatorialPolytope::facet_index(std::string_view label) const
{
    auto it = std::find(facets_.begin(), facets_.end(), label);
    if (it == facets_.end())
        throw LookupError("unknown facet '" + std::string(label) + "'");
    return static_cast<int>(it - facets_.begin());
}

int CombinatorialPolytope::find_vertex(IndexSet facets) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), facets);
    return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

bool CombinatorialPolytope::is_face(const Face& e) const
{
    return std::any_of(vertices_.begin(), vertices_.end(),
                       [&](const IndexSet& v) { return e.facets.is_subset_of(v); });
}

std::vector<int> CombinatorialPolytope::vertices_of(const Face& e) const
{
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (face_contains_vertex(e, v))
            out.push_back(v);
    return out;
}

std::vector<int> CombinatorialPolytope::facets_of(const Face& e) const
{
    IndexSet found;
    for (const IndexSet& v : vertices_)
        if (e.facets.is_subset_of(v))
            found = found | (v - e.facets);
    return found.to_vector();
}

std::vector<Face> CombinatorialPolytope::faces() const
{
    std::set<IndexSet> all;
    for (const IndexSet& v : vertices_)
    {
        // every subset of a vertex's facet set is a face
        const std::vector<int> idx = v.to_vector();
        const std::uint64_t count = std::uint64_t{1} << idx.size();
        for (std::uint64_t mask = 0; mask < count; ++mask)
        {
            IndexSet s;
            for (std::size_t b = 0; b < idx.size(); ++b)
                if ((mask >> b) & 1u)
                    s.insert(idx[b]);
            all.insert(s);
        }
    }
    std::vector<Face> out;
    out.reserve(all.size());
    for (const IndexSet& s : all)
        out.push_back(Face{s});
    return out;
}

CombinatorialPolytope CombinatorialPolytope::face_polytope(const Face& e) const
{
    if (!is_face(e))
        throw LookupError("facet set does not describe a nonempty face");
    const std::vector<int> local_facets = facets_of(e);
    std::vector<int> position(static_cast<std::size_t>(facet_count()), -1);
    std::vector<std::string> labels;
    for (int f : local_facets)
    {
        position[static_cast<std::size_t>(f)] = static_cast<int>(labels.size());
        labels.push_back(facets_[static_cast<std::size_t>(f)]);
    }
    std::vector<IndexSet> verts;
    for (int v : vertices_of(e))
    {
        IndexSet s;
        for (int f : (vertex(v) - e.facets).to_vector())
            s.insert(position[static_cast<std::size_t>(f)]);
        verts.push_back(s);
    }
    return CombinatorialPolytope(face_dimension(e), std::move(labels), std::move(verts));
}

SimplicialComplex to_nerve(const CombinatorialPolytope& q)
{
    const int m = q.facet_count();
    std::vector<IndexSet> nonfaces;
    // A minimal non-face is a set not contained in any vertex all of whose
    // one-smaller subsets are. Enumerate candidates by growing faces by one.
    std::set<IndexSet> faces;
    for (const Face& f : q.faces())
        faces.insert(f.facets);
    std::set<IndexSet> candidates;
    for (const IndexSet& f : faces)
        for (int j = 0; j < m; ++j)
            if (!f.contains(j) && !faces.count(f.with(j)))
                candidates.insert(f.with(j));
    for (const IndexSet& c : candidates)
    {
        bool minimal = true;
        for (int j : c.to_vector())
            if (!faces.count(c.without(j)))
            {
                minimal = false;
                break;
            }
        if (minimal)
            nonfaces.push_back(c);
    }
    return SimplicialComplex(q.facet_labels(), std::move(nonfaces));
}

CombinatorialPolytope from_nerve(const SimplicialComplex& k, int dimension)
{
    std::vector<IndexSet> maximal = k.maximal_faces();
    for (const IndexSet& f : maximal)
        if (f.size() != dimension)
            throw ValidityError("nerve is not pure of dimension " + std::to_string(dimension - 1)
                                + ": found a maximal face with " + std::to_string(f.size())
                                + " vertices");
    std::sort(maximal.begin(), maximal.end());
    return CombinatorialPolytope(dimension, k.vertices(), std::move(maximal));
}

PolytopalWedge polytopal_wedge(const CombinatorialPolytope& q, int facet)
{
    if (facet < 0 || facet >= q.facet_count())
        throw LookupError("wedge facet index " + std::to_string(facet) + " out of range");
    if (q.facet_count() + 1 > IndexSet::kCapacity)
        throw DimensionError("wedge exceeds 64 facets");

    const int m = q.facet_count();
    const int top = PolytopalWedge::kTop;
    const int bottom = facet + 1;

    std::vector<std::string> labels(static_cast<std::size_t>(m + 1));
    labels[static_cast<std::size_t>(top)] = wedge_label(q.facet_label(facet), 2);
    for (int s = 0; s < m; ++s)
        labels[static_cast<std::size_t>(s + 1)] =
            s == facet ? wedge_label(q.facet_label(facet), 1) : q.facet_label(s);

    auto shifted = [](IndexSet v) { return IndexSet::from_bits(v.bits() << 1); };

    // Generated as (original vertex, sign) pairs, then sorted.
    struct Pending
    {
        IndexSet facets;
        int source;
        bool is_plus;
    };
    std::vector<Pending> pending;
    for (int v = 0; v < q.vertex_count(); ++v)
    {
        const IndexSet base = shifted(q.vertex(v));
        if (q.vertex(v).contains(facet))
        {
            // v in F_i: single vertex Q+ cap Q- cap (other facets)
            pending.push_back({base.with(top), v, false});
        }
        else
        {
            pending.push_back({base.with(top), v, true});
            pending.push_back({base.with(bottom), v, false});
        }
    }
    std::sort(pending.begin(), pending.end(),
              [](const Pending& a, const Pending& b) { return a.facets < b.facets; });

    std::vector<IndexSet> verts;
    std::vector<int> plus(static_cast<std::size_t>(q.vertex_count()), -1);
    std::vector<int> minus(static_cast<std::size_t>(q.vertex_count()), -1);
    for (const Pending& p : pending)
    {
        const int idx = static_cast<int>(verts.size());
        verts.push_back(p.facets);
        (p.is_plus ? plus : minus)[static_cast<std::size_t>(p.source)] = idx;
    }
    return PolytopalWedge{CombinatorialPolytope(q.dimension() + 1, std::move(labels), std::move(verts)),
                          facet, std::move(plus), std::move(minus)};
}

bool same_combinatorics(const CombinatorialPolytope& a, const CombinatorialPolytope& b)
{
    if (a.dimension() != b.dimension() || a.facet_labels() != b.facet_labels())
        return false;
    const std::set<IndexSet> va(a.vertices().begin(), a.vertices().end());
    const std::set<IndexSet> vb(b.vertices().begin(), b.vertices().end());
    return va == vb;
}

CombinatorialPolytope product(const CombinatorialPolytope& p, const CombinatorialPolytope& q)
{
    std::vector<std::string> labels = p.facet_labels();
    labels.insert(labels.end(), q.facet_labels().begin(), q.facet_labels().end());
    const int shift = p.facet_count();
    if (shift + q.facet_count() > IndexSet::kCapacity)
        throw DimensionError("product exceeds 64 facets");
    std::vector<IndexSet> verts;
    for (const IndexSet& a : p.vertices())
        for (const IndexSet& b : q.vertices())
            verts.push_back(a | IndexSet::from_bits(b.bits() << shift));
    std::sort(verts.begin(), verts.end());
    return CombinatorialPolytope(p.dimension() + q.dimension(), std::move(labels), std::move(verts));
}

std::vector<long long> f_vector(const CombinatorialPolytope& q)
{
    const int n = q.dimension();
    std::vector<long long> f(static_cast<std::size_t>(n + 1), 0);
    for (const Face& e : q.faces())
        ++f[static_cast<std::size_t>(q.face_dimension(e))];
    f.pop_back();   // the polytope itself
    return f;
}

std::vector<long long> h_vector(const CombinatorialPolytope& q)
{
    const int n = q.dimension();
    std::vector<long long> f = f_vector(q);
    f.push_back(1);
    // h(t) = sum_i f_i (t - 1)^i
    std::vector<long long> h(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i)
    {
        // expand (t - 1)^i with binomial coefficients
        long long binom = 1;
        for (int k = 0; k <= i; ++k)
        {
            const long long sign = ((i - k) % 2 == 0) ? 1 : -1;
            h[static_cast<std::size_t>(k)] += sign * binom * f[static_cast<std::size_t>(i)];
            binom = binom * (i - k) / (k + 1);
        }
    }
    return h;
}

}   // namespace toric
