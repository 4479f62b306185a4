#include "toric/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace toric {

namespace {

std::vector<IndexSet> minimal_elements(std::vector<IndexSet> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<IndexSet> out;
    for (const IndexSet& s : sets)
    {
        const bool dominated = std::any_of(out.begin(), out.end(),
                                           [&](const IndexSet& t) { return t.is_subset_of(s); });
        if (!dominated)
            out.push_back(s);
    }
    return out;
}

void enumerate_faces(const SimplicialComplex& k, IndexSet current, int next,
                     std::vector<IndexSet>& out)
{
    out.push_back(current);
    for (int v = next; v < k.vertex_count(); ++v)
    {
        IndexSet bigger = current.with(v);
        if (k.is_face(bigger))
            enumerate_faces(k, bigger, v + 1, out);
    }
}

}   // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<IndexSet> minimal_nonfaces)
    : vertices_(std::move(vertices)), nonfaces_(std::move(minimal_nonfaces))
{
    if (vertices_.size() > static_cast<std::size_t>(IndexSet::kCapacity))
        throw DimensionError("simplicial complex has more than 64 vertices");
    std::unordered_set<std::string> seen;
    for (const std::string& v : vertices_)
        if (!seen.insert(v).second)
            throw NamingError("duplicate vertex label '" + v + "'");

    const IndexSet all = IndexSet::range(vertex_count());
    std::sort(nonfaces_.begin(), nonfaces_.end());
    for (std::size_t a = 0; a < nonfaces_.size(); ++a)
    {
        const IndexSet& s = nonfaces_[a];
        if (!s.is_subset_of(all))
            throw DimensionError("minimal non-face refers to a vertex index out of range");
        if (s.size() < 2)
            throw ValidityError("minimal non-faces must have at least two vertices "
                                "(ghost vertices are not supported)");
        for (std::size_t b = 0; b < a; ++b)
            if (nonfaces_[b].is_subset_of(s))
                throw ValidityError("minimal non-faces do not form an antichain");
    }
}

SimplicialComplex SimplicialComplex::from_labels(
    std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& nonfaces)
{
    SimplicialComplex tmp(vertices, {});
    std::vector<IndexSet> sets;
    for (const auto& nf : nonfaces)
    {
        IndexSet s;
        for (const auto& label : nf)
            s.insert(tmp.index_of(label));
        sets.push_back(s);
    }
    return SimplicialComplex(std::move(vertices), std::move(sets));
}

int SimplicialComplex::index_of(std::string_view label) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end())
        throw LookupError("unknown vertex '" + std::string(label) + "'");
    return static_cast<int>(it - vertices_.begin());
}

bool SimplicialComplex::has_vertex(std::string_view label) const
{
    return std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end();
}

std::set<std::set<std::string>> SimplicialComplex::labelled_nonfaces() const
{
    std::set<std::set<std::string>> out;
    for (const IndexSet& s : nonfaces_)
    {
        std::set<std::string> labels;
        for (int i : s.to_vector())
            labels.insert(vertices_[static_cast<std::size_t>(i)]);
        out.insert(std::move(labels));
    }
    return out;
}

bool SimplicialComplex::is_face(IndexSet s) const
{
    if (!s.is_subset_of(IndexSet::range(vertex_count())))
        return false;
    return std::none_of(nonfaces_.begin(), nonfaces_.end(),
                        [&](const IndexSet& n) { return n.is_subset_of(s); });
}

std::vector<IndexSet> SimplicialComplex::faces() const
{
    std::vector<IndexSet> out;
    enumerate_faces(*this, IndexSet{}, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexSet> SimplicialComplex::maximal_faces() const
{
    std::vector<IndexSet> out;
    for (const IndexSet& f : faces())
    {
        bool maximal = true;
        for (int v = 0; v < vertex_count() && maximal; ++v)
            if (!f.contains(v) && is_face(f.with(v)))
                maximal = false;
        if (maximal)
            out.push_back(f);
    }
    return out;
}

JVector::JVector(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int j : entries_)
        if (j < 1)
            throw DomainError("J-vector entries must be positive, got " + std::to_string(j));
}

JVector JVector::single(int length, int position)
{
    if (position < 0 || position >= length)
        throw LookupError("wedge position " + std::to_string(position) + " out of range");
    std::vector<int> e(static_cast<std::size_t>(length), 1);
    e[static_cast<std::size_t>(position)] = 2;
    return JVector(std::move(e));
}

JVector JVector::ones(int length)
{
    return JVector(std::vector<int>(static_cast<std::size_t>(length), 1));
}

int JVector::total() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string wedge_label(std::string_view base, int t)
{
    return std::string(base) + "_" + std::to_string(t);
}

WedgeLayout wedge_layout(const JVector& j)
{
    WedgeLayout layout;
    const int m = j.size();
    layout.copies.resize(static_cast<std::size_t>(m));
    int pos = 0;
    for (int i = 0; i < m; ++i)
    {
        auto& c = layout.copies[static_cast<std::size_t>(i)];
        c.assign(static_cast<std::size_t>(j[i]), -1);
        for (int t = 2; t <= j[i]; ++t)
            c[static_cast<std::size_t>(t - 1)] = pos++;
    }
    for (int i = 0; i < m; ++i)
        layout.copies[static_cast<std::size_t>(i)][0] = pos++;
    layout.total = pos;
    return layout;
}

SimplicialComplex wedge(const SimplicialComplex& k, const JVector& j)
{
    if (j.size() != k.vertex_count())
        throw DimensionError("J has " + std::to_string(j.size()) + " entries but the complex has "
                             + std::to_string(k.vertex_count()) + " vertices");
    const WedgeLayout layout = wedge_layout(j);
    std::vector<std::string> labels(static_cast<std::size_t>(layout.total));
    std::vector<IndexSet> blocks(static_cast<std::size_t>(k.vertex_count()));
    for (int i = 0; i < k.vertex_count(); ++i)
    {
        const auto& c = layout.copies[static_cast<std::size_t>(i)];
        for (int t = 1; t <= j[i]; ++t)
        {
            const int pos = c[static_cast<std::size_t>(t - 1)];
            labels[static_cast<std::size_t>(pos)] = j[i] == 1 ? k.label(i) : wedge_label(k.label(i), t);
            blocks[static_cast<std::size_t>(i)].insert(pos);
        }
    }
    std::vector<IndexSet> nonfaces;
    for (const IndexSet& n : k.minimal_nonfaces())
    {
        IndexSet s;
        for (int i : n.to_vector())
            s = s | blocks[static_cast<std::size_t>(i)];
        nonfaces.push_back(s);
    }
    return SimplicialComplex(std::move(labels), std::move(nonfaces));
}

SimplicialComplex wedge_at_vertex(const SimplicialComplex& k, std::string_view vertex)
{
    return wedge(k, JVector::single(k.vertex_count(), k.index_of(vertex)));
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2)
{
    std::vector<std::string> labels = k1.vertices();
    for (const std::string& v : k2.vertices())
    {
        if (k1.has_vertex(v))
            throw NamingError("join: vertex label '" + v + "' appears in both complexes");
        labels.push_back(v);
    }
    std::vector<IndexSet> nonfaces = k1.minimal_nonfaces();
    const int shift = k1.vertex_count();
    for (const IndexSet& n : k2.minimal_nonfaces())
    {
        if (shift + n.size() > IndexSet::kCapacity)
            throw DimensionError("join exceeds 64 vertices");
        nonfaces.push_back(IndexSet::from_bits(n.bits() << shift));
    }
    return SimplicialComplex(std::move(labels), std::move(nonfaces));
}

SimplicialComplex link(const SimplicialComplex& k, std::string_view vertex)
{
    const int w = k.index_of(vertex);
    std::vector<int> keep;
    for (int u = 0; u < k.vertex_count(); ++u)
        if (u != w && k.is_face(IndexSet{u, w}))
            keep.push_back(u);
    IndexSet kept(keep);

    std::vector<IndexSet> candidates;
    for (const IndexSet& n : k.minimal_nonfaces())
    {
        IndexSet rest = n.without(w);
        if (rest.is_subset_of(kept))
            candidates.push_back(rest);
    }
    std::vector<int> position(static_cast<std::size_t>(k.vertex_count()), -1);
    std::vector<std::string> labels;
    for (int u : keep)
    {
        position[static_cast<std::size_t>(u)] = static_cast<int>(labels.size());
        labels.push_back(k.label(u));
    }
    std::vector<IndexSet> nonfaces;
    for (const IndexSet& s : minimal_elements(candidates))
    {
        IndexSet mapped;
        for (int u : s.to_vector())
            mapped.insert(position[static_cast<std::size_t>(u)]);
        nonfaces.push_back(mapped);
    }
    return SimplicialComplex(std::move(labels), std::move(nonfaces));
}

SimplicialComplex deletion(const SimplicialComplex& k, std::string_view vertex)
{
    const int w = k.index_of(vertex);
    std::vector<std::string> labels;
    std::vector<int> position(static_cast<std::size_t>(k.vertex_count()), -1);
    for (int u = 0; u < k.vertex_count(); ++u)
    {
        if (u == w)
            continue;
        position[static_cast<std::size_t>(u)] = static_cast<int>(labels.size());
        labels.push_back(k.label(u));
    }
    std::vector<IndexSet> nonfaces;
    for (const IndexSet& n : k.minimal_nonfaces())
    {
        if (n.contains(w))
            continue;
        IndexSet mapped;
        for (int u : n.to_vector())
            mapped.insert(position[static_cast<std::size_t>(u)]);
        nonfaces.push_back(mapped);
    }
    return SimplicialComplex(std::move(labels), std::move(nonfaces));
}

SimplicialComplex simplex_boundary(int n, std::string_view prefix)
{
    std::vector<std::string> labels;
    for (int i = 1; i <= n + 1; ++i)
        labels.push_back(std::string(prefix) + std::to_string(i));
    return SimplicialComplex(std::move(labels), {IndexSet::range(n + 1)});
}

}   // namespace toric
