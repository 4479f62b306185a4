#include "toric/retraction.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <unordered_set>

namespace toric {

FaceLattice::FaceLattice(CombinatorialPolytope q) : q_(std::move(q)), faces_(q_.faces())
{
    for (std::size_t i = 0; i < faces_.size(); ++i)
        index_.emplace(faces_[i].facets, static_cast<int>(i));
    for (int v = 0; v < q_.vertex_count(); ++v)
        vertex_face_.push_back(index_of(q_.vertex(v)));
    for (std::size_t i = 0; i < faces_.size(); ++i)
    {
        if (q_.face_dimension(faces_[i]) != 1)
            continue;
        const std::vector<int> ends = q_.vertices_of(faces_[i]);
        if (ends.size() != 2)
            throw StructuralError("edge with " + std::to_string(ends.size()) + " vertices");
        edges_.push_back({ends[0], ends[1], static_cast<int>(i)});
    }
}

int FaceLattice::index_of(IndexSet facets) const
{
    auto it = index_.find(facets);
    return it == index_.end() ? -1 : it->second;
}

Subcomplex::Subcomplex(std::shared_ptr<const FaceLattice> lattice, std::vector<bool> member)
    : lattice_(std::move(lattice)), member_(std::move(member)),
      count_(static_cast<int>(std::count(member_.begin(), member_.end(), true)))
{}

Subcomplex Subcomplex::whole(std::shared_ptr<const FaceLattice> lattice)
{
    std::vector<bool> member(static_cast<std::size_t>(lattice->size()), true);
    return Subcomplex(std::move(lattice), std::move(member));
}

Subcomplex Subcomplex::whole(const CombinatorialPolytope& q)
{
    return whole(std::make_shared<const FaceLattice>(q));
}

bool Subcomplex::contains(const Face& e) const
{
    const int i = lattice_->index_of(e.facets);
    return i >= 0 && member_[static_cast<std::size_t>(i)];
}

std::vector<Face> Subcomplex::faces() const
{
    std::vector<Face> out;
    for (std::size_t i = 0; i < member_.size(); ++i)
        if (member_[i])
            out.push_back(lattice_->faces()[i]);
    return out;
}

std::vector<Face> Subcomplex::maximal_faces() const
{
    const std::vector<Face> all = faces();
    std::vector<Face> out;
    for (const Face& e : all)
    {
        const bool covered = std::any_of(all.begin(), all.end(), [&](const Face& f) {
            return f.facets != e.facets && f.facets.is_subset_of(e.facets);
        });
        if (!covered)
            out.push_back(e);
    }
    return out;
}

std::vector<int> Subcomplex::vertices() const
{
    std::vector<int> out;
    for (int v = 0; v < polytope().vertex_count(); ++v)
        if (contains_vertex(v))
            out.push_back(v);
    return out;
}

bool Subcomplex::is_connected() const
{
    const int n = polytope().vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const FaceLattice::Edge& e : lattice_->edges())
        if (member_[static_cast<std::size_t>(e.face)])
            parent[static_cast<std::size_t>(find(e.a))] = find(e.b);
    int root = -1;
    for (int v = 0; v < n; ++v)
    {
        if (!contains_vertex(v))
            continue;
        if (root < 0)
            root = find(v);
        else if (find(v) != root)
            return false;
    }
    return true;
}

std::optional<Face> Subcomplex::maximal_face_at(int v) const
{
    if (v < 0 || v >= polytope().vertex_count())
        throw LookupError("vertex index " + std::to_string(v) + " out of range");
    if (!contains_vertex(v))
        return std::nullopt;
    // Faces of B at v form an up-closed family of subsets of the vertex's
    // facets; a unique maximal face means the family has a least element.
    const IndexSet at = polytope().vertex(v);
    const std::vector<int> idx = at.to_vector();
    IndexSet meet = at;
    const std::uint64_t count = std::uint64_t{1} << idx.size();
    for (std::uint64_t mask = 0; mask < count; ++mask)
    {
        IndexSet s;
        for (std::size_t b = 0; b < idx.size(); ++b)
            if ((mask >> b) & 1u)
                s.insert(idx[b]);
        if (member_[static_cast<std::size_t>(lattice_->index_of(s))])
            meet = meet & s;
    }
    if (!member_[static_cast<std::size_t>(lattice_->index_of(meet))])
        return std::nullopt;
    return Face{meet};
}

std::vector<int> free_vertices(const Subcomplex& b)
{
    std::vector<int> out;
    for (int v : b.vertices())
        if (b.maximal_face_at(v))
            out.push_back(v);
    return out;
}

Subcomplex remove_vertex(const Subcomplex& b, int vertex)
{
    const IndexSet at = b.polytope().vertex(vertex);
    std::vector<bool> member = b.member_;
    const auto& faces = b.lattice().faces();
    for (std::size_t i = 0; i < member.size(); ++i)
        if (member[i] && faces[i].facets.is_subset_of(at))
            member[i] = false;
    return Subcomplex(b.lattice_, std::move(member));
}

Subcomplex retract_step(const Subcomplex& b, int vertex)
{
    if (!b.maximal_face_at(vertex))
        throw PreconditionError("vertex " + std::to_string(vertex) + " is not a free vertex of the subcomplex");
    Subcomplex next = remove_vertex(b, vertex);
    if (!next.is_connected())
        throw StructuralError("retracting vertex " + std::to_string(vertex) + " disconnects the subcomplex");
    return next;
}

std::optional<std::string> sequence_error(const CombinatorialPolytope& q, const RetractionSequence& seq)
{
    if (seq.size() != static_cast<std::size_t>(q.vertex_count()))
        return "sequence has " + std::to_string(seq.size()) + " steps, expected "
             + std::to_string(q.vertex_count());
    Subcomplex b = Subcomplex::whole(q);
    for (std::size_t j = 0; j < seq.size(); ++j)
    {
        const int v = seq[j].vertex;
        const std::string step = "step " + std::to_string(j + 1) + ": ";
        if (v < 0 || v >= q.vertex_count())
            return step + "vertex index " + std::to_string(v) + " out of range";
        if (!b.contains_vertex(v))
            return step + "vertex " + std::to_string(v) + " was already removed";
        const std::optional<Face> e = b.maximal_face_at(v);
        if (!e)
            return step + "vertex " + std::to_string(v) + " is not free";
        if (*e != seq[j].face)
            return step + "face does not match the unique maximal face at vertex " + std::to_string(v);
        b = remove_vertex(b, v);
        if (!b.is_connected())
            return step + "removing vertex " + std::to_string(v) + " disconnects the subcomplex";
    }
    if (!b.empty())
        return std::string("subcomplex is not exhausted at the end of the sequence");
    return std::nullopt;
}

bool is_valid_sequence(const CombinatorialPolytope& q, const RetractionSequence& seq)
{
    return !sequence_error(q, seq).has_value();
}

RetractionSequence sequence_from_vertices(const CombinatorialPolytope& q, const std::vector<int>& order)
{
    if (order.size() != static_cast<std::size_t>(q.vertex_count()))
        throw PreconditionError("vertex order has " + std::to_string(order.size()) + " entries, expected "
                                + std::to_string(q.vertex_count()));
    Subcomplex b = Subcomplex::whole(q);
    RetractionSequence seq;
    for (int v : order)
    {
        if (v < 0 || v >= q.vertex_count())
            throw PreconditionError("vertex index " + std::to_string(v) + " out of range");
        const std::optional<Face> e = b.contains_vertex(v) ? b.maximal_face_at(v) : std::nullopt;
        if (!e)
            throw PreconditionError("vertex " + std::to_string(v) + " is not free at step "
                                    + std::to_string(seq.size() + 1));
        seq.push_back({v, *e});
        b = retract_step(b, v);
    }
    return seq;
}

std::vector<Subcomplex> subcomplexes(const CombinatorialPolytope& q, const RetractionSequence& seq)
{
    if (auto err = sequence_error(q, seq))
        throw PreconditionError("invalid retraction sequence: " + *err);
    std::vector<Subcomplex> out{Subcomplex::whole(q)};
    for (std::size_t j = 0; j + 1 < seq.size(); ++j)
        out.push_back(remove_vertex(out.back(), seq[j].vertex));
    return out;
}

namespace {

enum class Outcome
{
    found,
    dead,
    budget,
};

/// Depth-first search over retraction states; `accept` filters steps.
template <typename Accept>
class Search
{
public:
    Search(std::vector<int> preference, Accept accept, std::uint64_t budget)
        : preference_(std::move(preference)), accept_(std::move(accept)), budget_(budget)
    {}

    Outcome run(const Subcomplex& b, RetractionSequence& seq)
    {
        if (b.empty())
            return Outcome::found;
        if (dead_.count(b.membership()))
            return Outcome::dead;
        if (expansions_ >= budget_)
            return Outcome::budget;
        ++expansions_;

        bool exhausted = true;
        for (int v : preference_)
        {
            if (!b.contains_vertex(v))
                continue;
            const std::optional<Face> e = b.maximal_face_at(v);
            if (!e || !accept_(*e, v))
                continue;
            Subcomplex next = remove_vertex(b, v);
            if (!next.is_connected())
                continue;
            seq.push_back({v, *e});
            const Outcome r = run(next, seq);
            if (r == Outcome::found)
                return r;
            seq.pop_back();
            if (r == Outcome::budget)
                exhausted = false;
        }
        if (exhausted)
            dead_.insert(b.membership());
        return exhausted ? Outcome::dead : Outcome::budget;
    }

    std::uint64_t expansions() const { return expansions_; }

private:
    std::vector<int> preference_;
    Accept accept_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    std::unordered_set<std::vector<bool>> dead_;
};

std::vector<int> default_order(int n)
{
    std::vector<int> out(static_cast<std::size_t>(n));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

void enumerate(const Subcomplex& b, RetractionSequence& seq, std::vector<RetractionSequence>& out,
               std::size_t limit)
{
    if (out.size() >= limit)
        return;
    if (b.empty())
    {
        out.push_back(seq);
        return;
    }
    for (int v : b.vertices())
    {
        const std::optional<Face> e = b.maximal_face_at(v);
        if (!e)
            continue;
        Subcomplex next = remove_vertex(b, v);
        if (!next.is_connected())
            continue;
        seq.push_back({v, *e});
        enumerate(next, seq, out, limit);
        seq.pop_back();
    }
}

}   // namespace

RetractionSequence generic_sequence(const CombinatorialPolytope& q, std::vector<int> preference)
{
    if (preference.empty())
        preference = default_order(q.vertex_count());
    std::vector<int> sorted = preference;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != default_order(q.vertex_count()))
        throw PreconditionError("preference must be a permutation of the vertices");

    auto accept = [](const Face&, int) { return true; };
    Search<decltype(accept)> search(std::move(preference), accept, UINT64_MAX);
    RetractionSequence seq;
    if (search.run(Subcomplex::whole(q), seq) != Outcome::found)
        throw StructuralError("polytope admits no retraction sequence");
    return seq;
}

std::vector<RetractionSequence> enumerate_sequences(const CombinatorialPolytope& q, std::size_t limit)
{
    std::vector<RetractionSequence> out;
    RetractionSequence seq;
    enumerate(Subcomplex::whole(q), seq, out, limit);
    return out;
}

const Integer& LocalOrderTable::order(const Face& e, int vertex)
{
    auto [it, inserted] = cache_.try_emplace(e.facets);
    auto& table = it->second;
    if (inserted)
    {
        const CombinatorialPolytope& q = pair_.polytope();
        if (e.facets.empty())
        {
            const std::vector<Integer> orders = vertex_orders(pair_);
            for (int v = 0; v < q.vertex_count(); ++v)
                table.emplace(v, orders[static_cast<std::size_t>(v)]);
        }
        else if (q.face_dimension(e) == 0)
        {
            table.emplace(q.vertices_of(e).front(), Integer(1));
        }
        else
        {
            const InducedPair induced = induced_pair(pair_, e);
            for (std::size_t local = 0; local < induced.vertices.size(); ++local)
                table.emplace(induced.vertices[local],
                              local_group_order(induced.pair, Face{}, static_cast<int>(local)));
        }
    }
    auto found = table.find(vertex);
    if (found == table.end())
        throw LookupError("vertex " + std::to_string(vertex) + " is not a vertex of the face");
    return found->second;
}

std::vector<Integer> step_orders(const CharacteristicPair& pair, const RetractionSequence& seq)
{
    LocalOrderTable table(pair);
    std::vector<Integer> out;
    for (const RetractionStep& s : seq)
        out.push_back(table.order(s.face, s.vertex));
    return out;
}

bool avoids_prime(const CharacteristicPair& pair, const RetractionSequence& seq, const Integer& p)
{
    for (const Integer& o : step_orders(pair, seq))
        if (o % p == 0)
            return false;
    return true;
}

std::string to_string(SearchStatus s)
{
    switch (s)
    {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget: return "budget";
    }
    return "unknown";
}

SearchResult find_sequence_avoiding(const CharacteristicPair& pair, const Integer& p, std::uint64_t budget)
{
    if (p < 2 || prime_factors(p) != std::vector<Integer>{p})
        throw DomainError("find_sequence_avoiding: p must be a prime, got " + p.str());
    LocalOrderTable table(pair);
    auto accept = [&](const Face& e, int v) { return table.order(e, v) % p != 0; };
    Search<decltype(accept)> search(default_order(pair.vertex_count()), accept, budget);
    SearchResult result;
    const Outcome r = search.run(Subcomplex::whole(pair.polytope()), result.sequence);
    result.expansions = search.expansions();
    result.status = r == Outcome::found ? SearchStatus::found
                  : r == Outcome::dead  ? SearchStatus::none
                                        : SearchStatus::budget;
    if (result.status != SearchStatus::found)
        result.sequence.clear();
    return result;
}

std::string to_string(FormalityStatus s)
{
    switch (s)
    {
    case FormalityStatus::certified: return "certified formal";
    case FormalityStatus::inconclusive: return "criterion inconclusive";
    case FormalityStatus::budget: return "criterion inconclusive (budget)";
    }
    return "unknown";
}

FormalityReport formality_check(const CharacteristicPair& pair, std::uint64_t budget, bool parallel)
{
    FormalityReport report;
    report.generic = generic_sequence(pair.polytope());

    std::set<Integer> primes;
    for (const Integer& order : vertex_orders(pair))
        for (const Integer& p : prime_factors(order))
            primes.insert(p);
    report.relevant_primes.assign(primes.begin(), primes.end());

    if (parallel && primes.size() > 1)
    {
        std::vector<std::future<SearchResult>> futures;
        for (const Integer& p : report.relevant_primes)
            futures.push_back(std::async(std::launch::async,
                                         [&pair, p, budget] { return find_sequence_avoiding(pair, p, budget); }));
        for (std::size_t i = 0; i < futures.size(); ++i)
            report.searches.emplace(report.relevant_primes[i], futures[i].get());
    }
    else
    {
        for (const Integer& p : report.relevant_primes)
            report.searches.emplace(p, find_sequence_avoiding(pair, p, budget));
    }

    bool none = false;
    bool out_of_budget = false;
    for (const auto& [p, r] : report.searches)
    {
        none = none || r.status == SearchStatus::none;
        out_of_budget = out_of_budget || r.status == SearchStatus::budget;
    }
    report.status = none ? FormalityStatus::inconclusive
                  : out_of_budget ? FormalityStatus::budget
                                  : FormalityStatus::certified;
    return report;
}

RetractionSequence lift_sequence(const CombinatorialPolytope& q, const RetractionSequence& seq, int facet)
{
    if (auto err = sequence_error(q, seq))
        throw PreconditionError("invalid retraction sequence: " + *err);
    const PolytopalWedge w = polytopal_wedge(q, facet);

    std::vector<int> order;
    for (const RetractionStep& s : seq)
    {
        const auto v = static_cast<std::size_t>(s.vertex);
        if (!q.vertex(s.vertex).contains(facet))
            order.push_back(w.plus[v]);
        order.push_back(w.minus[v]);
    }
    try
    {
        return sequence_from_vertices(w.polytope, order);
    }
    catch (const PreconditionError& e)
    {
        throw StructuralError(std::string("lifted order is not a retraction sequence: ") + e.what());
    }
}

std::vector<int> cell_census(const CombinatorialPolytope& q, const RetractionSequence& seq)
{
    std::vector<int> out;
    for (const RetractionStep& s : seq)
        out.push_back(q.face_dimension(s.face));
    return out;
}

std::vector<long long> betti_ranks(const CombinatorialPolytope& q, const RetractionSequence& seq)
{
    std::vector<long long> ranks(static_cast<std::size_t>(q.dimension() + 1), 0);
    for (int d : cell_census(q, seq))
        ++ranks[static_cast<std::size_t>(d)];
    return ranks;
}

}   // namespace toric
