#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "toric/fixtures.hpp"
#include "toric/polytopes.hpp"

using namespace toric;

namespace {

std::set<IndexSet> brute_faces(const CombinatorialPolytope& q)
{
    std::set<IndexSet> out;
    for (const IndexSet& v : q.vertices())
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << q.facet_count()); ++s)
            if ((s & ~v.bits()) == 0)
                out.insert(IndexSet::from_bits(s));
    return out;
}

}   // namespace

TEST_CASE("construction checks simplicity")
{
    CHECK_THROWS_AS(CombinatorialPolytope(2, {"a", "b", "c"}, {IndexSet{0, 1}, IndexSet{1}}), ValidityError);
    CHECK_THROWS_AS(CombinatorialPolytope(2, {"a", "b", "c"}, {IndexSet{0, 1}, IndexSet{0, 1}}), ValidityError);
    CHECK_THROWS_AS(CombinatorialPolytope(2, {"a", "b", "c"}, {IndexSet{0, 1}, IndexSet{1, 0}}), ValidityError);
    CHECK_THROWS_AS(CombinatorialPolytope(1, {"a", "a"}, {IndexSet{0}, IndexSet{1}}), NamingError);
    CHECK_THROWS_AS(fixtures::prism().facet_index("F9"), LookupError);
}

TEST_CASE("faces agree with brute force")
{
    for (const auto& [name, q] : fixtures::polytopes())
    {
        INFO(name);
        std::set<IndexSet> listed;
        for (const Face& e : q.faces())
        {
            listed.insert(e.facets);
            CHECK(q.is_face(e));
            CHECK(q.vertices_of(e).size() >= 1);
        }
        CHECK(listed == brute_faces(q));
        CHECK(listed.size() == q.faces().size());
        const std::vector<Face> faces = q.faces();
        for (std::size_t k = 1; k < faces.size(); ++k)
            CHECK(q.face_dimension(faces[k - 1]) >= q.face_dimension(faces[k]));
    }
}

TEST_CASE("f- and h-vectors")
{
    using V = std::vector<long long>;
    CHECK(f_vector(fixtures::pentagon()) == V{5, 5});
    CHECK(f_vector(fixtures::prism()) == V{6, 9, 5});
    CHECK(f_vector(fixtures::cube()) == V{8, 12, 6});
    CHECK(h_vector(fixtures::pentagon()) == V{1, 3, 1});
    CHECK(h_vector(fixtures::prism()) == V{1, 2, 2, 1});
    CHECK(h_vector(fixtures::simplex(3)) == V{1, 1, 1, 1});
    CHECK(h_vector(fixtures::square()) == V{1, 2, 1});
    CHECK(h_vector(fixtures::cube()) == V{1, 3, 3, 1});

    for (const auto& [name, q] : fixtures::polytopes())
    {
        INFO(name);
        const V h = h_vector(q);
        // Dehn-Sommerville and the vertex count.
        for (std::size_t i = 0; i < h.size(); ++i)
            CHECK(h[i] == h[h.size() - 1 - i]);
        long long total = 0;
        for (long long x : h)
            total += x;
        CHECK(total == q.vertex_count());
    }
}

TEST_CASE("nerve round trip")
{
    for (const auto& [name, q] : fixtures::polytopes())
    {
        INFO(name);
        const SimplicialComplex k = to_nerve(q);
        CHECK(k.labelled_nonfaces() == oracle::nerve_nonfaces(q));
        CHECK(same_combinatorics(from_nerve(k, q.dimension()), q));
    }
    CHECK(to_nerve(fixtures::prism()).labelled_nonfaces()
          == std::set<std::set<std::string>>{{"F4", "F5"}, {"F1", "F2", "F3"}});
}

TEST_CASE("polytopal wedge is dual to the simplicial wedge")
{
    for (const auto& [name, q] : fixtures::polytopes())
    {
        for (int i = 0; i < q.facet_count(); ++i)
        {
            INFO(name << " at " << q.facet_label(i));
            const PolytopalWedge w = polytopal_wedge(q, i);
            const CombinatorialPolytope& qw = w.polytope;
            CHECK(qw.dimension() == q.dimension() + 1);
            CHECK(qw.facet_count() == q.facet_count() + 1);
            const int on = static_cast<int>(q.vertices_of(Face{IndexSet{i}}).size());
            CHECK(qw.vertex_count() == 2 * q.vertex_count() - on);
            CHECK(oracle::nerve_nonfaces(qw)
                  == wedge_at_vertex(to_nerve(q), q.facet_label(i)).labelled_nonfaces());

            CHECK(qw.facet_label(PolytopalWedge::kTop) == q.facet_label(i) + "_2");
            CHECK(qw.facet_label(w.bottom()) == q.facet_label(i) + "_1");
            for (int v = 0; v < q.vertex_count(); ++v)
            {
                IndexSet shifted = IndexSet::from_bits(q.vertex(v).bits() << 1);
                if (q.vertex(v).contains(i))
                {
                    CHECK(w.plus[static_cast<std::size_t>(v)] == -1);
                    CHECK(qw.vertex(w.minus[static_cast<std::size_t>(v)]) == shifted.with(PolytopalWedge::kTop));
                }
                else
                {
                    CHECK(qw.vertex(w.plus[static_cast<std::size_t>(v)]) == shifted.with(PolytopalWedge::kTop));
                    CHECK(qw.vertex(w.minus[static_cast<std::size_t>(v)]) == shifted.with(w.bottom()));
                }
            }
        }
    }
}

TEST_CASE("face polytopes and products")
{
    const CombinatorialPolytope q = fixtures::prism();
    const CombinatorialPolytope top = q.face_polytope(Face{IndexSet{3}});
    CHECK(top.dimension() == 2);
    CHECK(top.facet_labels() == std::vector<std::string>{"F1", "F2", "F3"});
    CHECK(top.vertex_count() == 3);

    const CombinatorialPolytope side = q.face_polytope(Face{IndexSet{0}});
    CHECK(side.vertex_count() == 4);
    CHECK(side.facet_labels() == std::vector<std::string>{"F2", "F3", "F4", "F5"});

    CHECK_THROWS_AS(q.face_polytope(Face{IndexSet{3, 4}}), LookupError);

    auto interval = [](const std::string& a, const std::string& b) {
        return CombinatorialPolytope(1, {a, b}, {IndexSet{0}, IndexSet{1}});
    };
    const CombinatorialPolytope sq = product(interval("a0", "a1"), interval("b0", "b1"));
    CHECK(f_vector(sq) == f_vector(fixtures::square()));
    CHECK(f_vector(product(sq, interval("c0", "c1"))) == f_vector(fixtures::cube()));
    CHECK(f_vector(product(fixtures::simplex(2), interval("c0", "c1"))) == f_vector(fixtures::prism()));
    CHECK(oracle::nerve_nonfaces(product(sq, interval("c0", "c1")))
          == std::set<std::set<std::string>>{{"a0", "a1"}, {"b0", "b1"}, {"c0", "c1"}});
    CHECK_THROWS_AS(product(sq, sq), NamingError);
}
