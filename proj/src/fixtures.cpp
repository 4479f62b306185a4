#include "toric/fixtures.hpp"

namespace toric::fixtures {

namespace {

std::vector<std::string> labels(int m)
{
    std::vector<std::string> out;
    for (int i = 1; i <= m; ++i)
        out.push_back("F" + std::to_string(i));
    return out;
}

IntMatrix columns(int rows, const std::vector<std::vector<long>>& cols)
{
    IntMatrix out(rows, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < rows; ++r)
            out(r, static_cast<Eigen::Index>(c)) = cols[c][static_cast<std::size_t>(r)];
    return out;
}

}   // namespace

CombinatorialPolytope polygon(int k)
{
    if (k < 3)
        throw DomainError("polygon needs at least 3 sides");
    std::vector<IndexSet> verts;
    for (int j = 0; j < k; ++j)
        verts.push_back(IndexSet{(j + k - 1) % k, j});
    return CombinatorialPolytope(2, labels(k), std::move(verts));
}

CombinatorialPolytope pentagon()
{
    return polygon(5);
}

CombinatorialPolytope square()
{
    return polygon(4);
}

CombinatorialPolytope simplex(int n)
{
    if (n < 1)
        throw DomainError("simplex dimension must be positive");
    std::vector<IndexSet> verts;
    for (int i = 0; i <= n; ++i)
        verts.push_back(IndexSet::range(n + 1).without(i));
    return CombinatorialPolytope(n, labels(n + 1), std::move(verts));
}

CombinatorialPolytope prism()
{
    return CombinatorialPolytope(3, labels(5),
                                 {IndexSet{0, 2, 3}, IndexSet{0, 1, 3}, IndexSet{1, 2, 3},
                                  IndexSet{0, 1, 4}, IndexSet{1, 2, 4}, IndexSet{0, 2, 4}});
}

CombinatorialPolytope cube()
{
    std::vector<IndexSet> verts;
    for (int mask = 0; mask < 8; ++mask)
    {
        IndexSet v;
        for (int axis = 0; axis < 3; ++axis)
            v.insert(((mask >> axis) & 1) ? axis + 3 : axis);
        verts.push_back(v);
    }
    return CombinatorialPolytope(3, labels(6), std::move(verts));
}

CharacteristicPair prism_pair()
{
    return CharacteristicPair(prism(), columns(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 4}, {-1, -1, -1}}));
}

CharacteristicPair delzant_pentagon()
{
    return CharacteristicPair(pentagon(), columns(2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}}));
}

CharacteristicPair even_pentagon()
{
    return CharacteristicPair(pentagon(), columns(2, {{1, 0}, {1, 2}, {-1, 0}, {-1, -2}, {1, -2}}));
}

CharacteristicPair delzant_simplex(int n)
{
    IntMatrix lambda = IntMatrix::Zero(n, n + 1);
    for (int i = 0; i < n; ++i)
    {
        lambda(i, i) = 1;
        lambda(i, n) = -1;
    }
    return CharacteristicPair(simplex(n), std::move(lambda));
}

CharacteristicPair delzant_square()
{
    return CharacteristicPair(square(), columns(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
}

CharacteristicPair delzant_cube()
{
    return CharacteristicPair(cube(), columns(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
}

std::vector<std::vector<Integer>> wps_weights()
{
    return {{1, 1, 1}, {1, 1, 2}, {1, 2, 3}, {2, 3, 5}};
}

std::vector<NamedPolytope> polytopes()
{
    return {{"pentagon", pentagon()}, {"prism", prism()},   {"simplex2", simplex(2)},
            {"simplex3", simplex(3)}, {"square", square()}, {"cube", cube()}};
}

std::vector<NamedPair> pairs()
{
    std::vector<NamedPair> out{
        {"prism", prism_pair(), false},
        {"delzant-pentagon", delzant_pentagon(), true},
        {"even-pentagon", even_pentagon(), false},
        {"delzant-simplex2", delzant_simplex(2), true},
        {"delzant-simplex3", delzant_simplex(3), true},
        {"delzant-square", delzant_square(), true},
        {"delzant-cube", delzant_cube(), true},
    };
    for (const auto& chi : wps_weights())
    {
        std::string name = "wps";
        for (const Integer& c : chi)
            name += "-" + c.str();
        out.push_back({name, wps_pair(chi), false});
    }
    return out;
}

}   // namespace toric::fixtures
