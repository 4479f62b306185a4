#ifndef TORIC_RETRACTION_HPP
#define TORIC_RETRACTION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toric/charpair.hpp"
#include "toric/polytopes.hpp"

namespace toric {

/// Face lattice of a polytope, shared by all subcomplexes of it.
class FaceLattice
{
public:
    explicit FaceLattice(CombinatorialPolytope q);

    const CombinatorialPolytope& polytope() const { return q_; }
    const std::vector<Face>& faces() const { return faces_; }
    int size() const { return static_cast<int>(faces_.size()); }
    /// Index of a face in faces(), or -1 if the facet set is not a face.
    int index_of(IndexSet facets) const;
    /// Index of the vertex face of vertex v.
    int vertex_face(int v) const { return vertex_face_[static_cast<std::size_t>(v)]; }
    /// Edges as pairs of vertex indices with their face index.
    struct Edge
    {
        int a, b, face;
    };
    const std::vector<Edge>& edges() const { return edges_; }

private:
    CombinatorialPolytope q_;
    std::vector<Face> faces_;
    std::unordered_map<IndexSet, int> index_;
    std::vector<int> vertex_face_;
    std::vector<Edge> edges_;
};

/**
 * A polytopal subcomplex of Q: a set of faces of Q closed under taking
 * faces. Membership is a bit per face of the shared lattice.
 */
class Subcomplex
{
public:
    /// The whole polytope.
    static Subcomplex whole(std::shared_ptr<const FaceLattice> lattice);
    static Subcomplex whole(const CombinatorialPolytope& q);

    const FaceLattice& lattice() const { return *lattice_; }
    const std::shared_ptr<const FaceLattice>& shared_lattice() const { return lattice_; }
    const CombinatorialPolytope& polytope() const { return lattice_->polytope(); }
    const std::vector<bool>& membership() const { return member_; }

    bool contains(const Face& e) const;
    bool contains_vertex(int v) const { return member_[static_cast<std::size_t>(lattice_->vertex_face(v))]; }
    bool empty() const { return count_ == 0; }
    int face_count() const { return count_; }
    std::vector<Face> faces() const;
    std::vector<Face> maximal_faces() const;
    std::vector<int> vertices() const;
    /// The 1-skeleton of the union is connected (true when empty).
    bool is_connected() const;

    /**
     * The unique maximal face of B containing v, if v is a vertex of B lying
     * in exactly one maximal face.
     */
    std::optional<Face> maximal_face_at(int v) const;

    friend bool operator==(const Subcomplex& a, const Subcomplex& b)
    {
        return a.lattice_ == b.lattice_ && a.member_ == b.member_;
    }

private:
    Subcomplex(std::shared_ptr<const FaceLattice> lattice, std::vector<bool> member);

    std::shared_ptr<const FaceLattice> lattice_;
    std::vector<bool> member_;
    int count_ = 0;

    friend Subcomplex retract_step(const Subcomplex& b, int vertex);
    friend Subcomplex remove_vertex(const Subcomplex& b, int vertex);
};

/// v is free iff it lies in exactly one maximal face of B.
std::vector<int> free_vertices(const Subcomplex& b);

/// All faces of B that avoid the vertex, without any checks.
Subcomplex remove_vertex(const Subcomplex& b, int vertex);

/**
 * Removes every face of B containing the free vertex. Throws
 * PreconditionError if the vertex is not free and StructuralError if the
 * result is disconnected.
 */
Subcomplex retract_step(const Subcomplex& b, int vertex);

struct RetractionStep
{
    int vertex = 0;
    /// Unique maximal face of B_j containing the vertex.
    Face face;

    friend bool operator==(const RetractionStep&, const RetractionStep&) = default;
};

using RetractionSequence = std::vector<RetractionStep>;

/// Empty when valid; otherwise a description of the first violation.
std::optional<std::string> sequence_error(const CombinatorialPolytope& q, const RetractionSequence& seq);
bool is_valid_sequence(const CombinatorialPolytope& q, const RetractionSequence& seq);

/**
 * Builds the sequence for the given order of vertices, deriving each E_j.
 * Throws PreconditionError if some vertex is not free when its turn comes.
 */
RetractionSequence sequence_from_vertices(const CombinatorialPolytope& q, const std::vector<int>& order);

/// The subcomplexes B_1, ..., B_l visited by a valid sequence.
std::vector<Subcomplex> subcomplexes(const CombinatorialPolytope& q, const RetractionSequence& seq);

/**
 * A retraction sequence following a vertex preference order: at each step the
 * first free vertex in `preference` whose removal keeps B connected is taken,
 * backtracking if this gets stuck. The default preference is 0, 1, 2, ...
 */
RetractionSequence generic_sequence(const CombinatorialPolytope& q, std::vector<int> preference = {});

/// Every retraction sequence of Q, up to `limit` of them.
std::vector<RetractionSequence> enumerate_sequences(const CombinatorialPolytope& q,
                                                    std::size_t limit = 1000000);

/// Memoised |G_E(v)| lookups for one pair.
class LocalOrderTable
{
public:
    explicit LocalOrderTable(const CharacteristicPair& pair) : pair_(pair) {}

    const Integer& order(const Face& e, int vertex);

private:
    const CharacteristicPair& pair_;
    std::unordered_map<IndexSet, std::unordered_map<int, Integer>> cache_;
};

/// |G_{E_j}(b_j)| for every step.
std::vector<Integer> step_orders(const CharacteristicPair& pair, const RetractionSequence& seq);

/// True iff p divides no |G_{E_j}(b_j)|.
bool avoids_prime(const CharacteristicPair& pair, const RetractionSequence& seq, const Integer& p);

enum class SearchStatus
{
    found,
    none,
    budget,
};

std::string to_string(SearchStatus s);

struct SearchResult
{
    SearchStatus status = SearchStatus::none;
    RetractionSequence sequence;
    std::uint64_t expansions = 0;
};

constexpr std::uint64_t kDefaultBudget = 2000000;

/**
 * Depth-first search for a retraction sequence with p not dividing any
 * |G_{E_j}(b_j)|, memoising dead subcomplexes. `budget` bounds the number of
 * expanded states.
 */
SearchResult find_sequence_avoiding(const CharacteristicPair& pair, const Integer& p,
                                    std::uint64_t budget = kDefaultBudget);

enum class FormalityStatus
{
    certified,
    inconclusive,
    budget,
};

std::string to_string(FormalityStatus s);

struct FormalityReport
{
    FormalityStatus status = FormalityStatus::certified;
    /// Primes dividing some |G_Q(v)|.
    std::vector<Integer> relevant_primes;
    /// One search result per relevant prime.
    std::map<Integer, SearchResult> searches;
    /// Any sequence, witnessing every prime outside relevant_primes.
    RetractionSequence generic;
};

/**
 * Sufficient criterion for torsion-free, even-concentrated homology: a
 * p-avoiding sequence for every relevant prime. Failure is reported as
 * inconclusive, never as a torsion claim. Searches for different primes run
 * concurrently when `parallel` is set.
 */
FormalityReport formality_check(const CharacteristicPair& pair, std::uint64_t budget = kDefaultBudget,
                                bool parallel = true);

/**
 * Lift of a sequence on Q to the wedge of Q at the facet: vertices are taken
 * in the order b_1+, b_1-, b_2+, ..., with only b_r- for b_r on the facet.
 * The result is a sequence on polytopal_wedge(q, facet).polytope.
 */
RetractionSequence lift_sequence(const CombinatorialPolytope& q, const RetractionSequence& seq, int facet);

/// dim E_j for every step.
std::vector<int> cell_census(const CombinatorialPolytope& q, const RetractionSequence& seq);

/// (r_0, ..., r_n) with r_k = #{j : dim E_j = k}.
std::vector<long long> betti_ranks(const CombinatorialPolytope& q, const RetractionSequence& seq);

}   // namespace toric

#endif
