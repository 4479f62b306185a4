#include <catch_amalgamated.hpp>

#include "toric/complexes.hpp"
#include "toric/errors.hpp"

using namespace toric;

namespace {

SimplicialComplex pentagon_nerve()
{
    return SimplicialComplex::from_labels({"a", "b", "c", "d", "e"},
                                          {{"a", "c"}, {"a", "d"}, {"b", "d"}, {"b", "e"}, {"c", "e"}});
}

SimplicialComplex square_nerve()
{
    return SimplicialComplex::from_labels({"p", "q", "r", "s"}, {{"p", "r"}, {"q", "s"}});
}

std::set<std::string> labels_of(const SimplicialComplex& k, IndexSet s)
{
    std::set<std::string> out;
    for (int i : s.to_vector())
        out.insert(k.label(i));
    return out;
}

/// Faces as label sets, by brute force over a predicate on label sets.
template <typename Pred>
std::set<std::set<std::string>> faces_by(const std::vector<std::string>& labels, Pred is_face)
{
    std::set<std::set<std::string>> out;
    const std::size_t n = labels.size();
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s)
    {
        std::set<std::string> sigma;
        for (std::size_t i = 0; i < n; ++i)
            if ((s >> i) & 1)
                sigma.insert(labels[i]);
        if (is_face(sigma))
            out.insert(sigma);
    }
    return out;
}

std::set<std::set<std::string>> face_labels(const SimplicialComplex& k)
{
    std::set<std::set<std::string>> out;
    for (IndexSet s : k.faces())
        out.insert(labels_of(k, s));
    return out;
}

bool base_face(const SimplicialComplex& k, const std::set<std::string>& sigma)
{
    std::vector<int> idx;
    for (const std::string& l : sigma)
        idx.push_back(k.index_of(l));
    return k.is_face(IndexSet(idx));
}

}   // namespace

TEST_CASE("construction rejects malformed non-faces")
{
    CHECK_THROWS_AS(SimplicialComplex::from_labels({"a", "b"}, {{"a"}}), ValidityError);
    CHECK_THROWS_AS(SimplicialComplex::from_labels({"a", "b", "c"}, {{"a", "b"}, {"a", "b", "c"}}),
                    ValidityError);
    CHECK_THROWS_AS(SimplicialComplex::from_labels({"a", "a"}, {}), NamingError);
    CHECK_THROWS_AS(pentagon_nerve().index_of("z"), LookupError);
}

TEST_CASE("faces of the pentagon nerve")
{
    const SimplicialComplex k = pentagon_nerve();
    CHECK(k.faces().size() == 11);
    CHECK(k.maximal_faces().size() == 5);
    CHECK(k.is_face(IndexSet{0, 1}));
    CHECK_FALSE(k.is_face(IndexSet{0, 2}));
}

TEST_CASE("wedge matches the block characterisation")
{
    // A subset of the wedge is a face iff the set of base vertices whose
    // whole block it contains is a face of the base.
    const SimplicialComplex k = pentagon_nerve();
    for (const JVector& j : {JVector({2, 1, 1, 1, 1}), JVector({1, 3, 1, 2, 1}), JVector({2, 2, 2, 2, 2})})
    {
        const SimplicialComplex w = wedge(k, j);
        CHECK(w.vertex_count() == j.total());
        const WedgeLayout layout = wedge_layout(j);
        auto oracle = [&](const std::set<std::string>& sigma) {
            std::set<std::string> full;
            for (int i = 0; i < k.vertex_count(); ++i)
            {
                bool all = true;
                for (int pos : layout.copies[static_cast<std::size_t>(i)])
                    all = all && sigma.count(w.label(pos)) > 0;
                if (all)
                    full.insert(k.label(i));
            }
            return base_face(k, full);
        };
        CHECK(face_labels(w) == faces_by(w.vertices(), oracle));
    }
}

TEST_CASE("wedge layout and labels")
{
    const WedgeLayout layout = wedge_layout(JVector({2, 1, 3}));
    CHECK(layout.total == 6);
    CHECK(layout.copies[0] == std::vector<int>{3, 0});
    CHECK(layout.copies[1] == std::vector<int>{4});
    CHECK(layout.copies[2] == std::vector<int>{5, 1, 2});

    const SimplicialComplex w = wedge_at_vertex(square_nerve(), "q");
    CHECK(w.vertices() == std::vector<std::string>{"q_2", "p", "q_1", "r", "s"});
    CHECK(w.labelled_nonfaces()
          == std::set<std::set<std::string>>{{"p", "r"}, {"q_1", "q_2", "s"}});
    CHECK_THROWS_AS(JVector({1, 0}), DomainError);
}

TEST_CASE("wedges of simplex boundaries are simplex boundaries")
{
    const SimplicialComplex w = wedge(simplex_boundary(2), JVector({2, 1, 3}));
    CHECK(w.minimal_nonfaces() == std::vector<IndexSet>{IndexSet::range(6)});
}

TEST_CASE("iterated single wedges agree with one wedge")
{
    const SimplicialComplex k = pentagon_nerve();
    const SimplicialComplex twice = wedge_at_vertex(wedge_at_vertex(k, "a"), "c");
    const SimplicialComplex once = wedge(k, JVector({2, 1, 2, 1, 1}));
    CHECK(twice.labelled_nonfaces() == once.labelled_nonfaces());
}

TEST_CASE("join and link")
{
    const SimplicialComplex k1 = pentagon_nerve();
    const SimplicialComplex k2 = square_nerve();
    const SimplicialComplex j = join(k1, k2);
    auto join_oracle = [&](const std::set<std::string>& sigma) {
        std::set<std::string> a, b;
        for (const std::string& l : sigma)
            (k1.has_vertex(l) ? a : b).insert(l);
        return base_face(k1, a) && base_face(k2, b);
    };
    CHECK(face_labels(j) == faces_by(j.vertices(), join_oracle));
    CHECK_THROWS_AS(join(k1, k1), NamingError);

    // Wedging distributes over joins.
    CHECK(wedge_at_vertex(j, "b").labelled_nonfaces() == join(wedge_at_vertex(k1, "b"), k2).labelled_nonfaces());

    const SimplicialComplex l = link(j, "a");
    auto link_oracle = [&](const std::set<std::string>& sigma) {
        if (sigma.count("a"))
            return false;
        std::set<std::string> with = sigma;
        with.insert("a");
        return join_oracle(with);
    };
    std::set<std::set<std::string>> expected = faces_by(j.vertices(), link_oracle);
    std::set<std::string> support;
    for (const auto& f : expected)
        support.insert(f.begin(), f.end());
    CHECK(std::set<std::string>(l.vertices().begin(), l.vertices().end()) == support);
    CHECK(face_labels(l) == expected);

    const SimplicialComplex d = deletion(k1, "a");
    auto deletion_oracle = [&](const std::set<std::string>& sigma) { return base_face(k1, sigma); };
    CHECK(face_labels(d) == faces_by(d.vertices(), deletion_oracle));
}
