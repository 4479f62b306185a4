#ifndef TORIC_TESTS_ORACLES_HPP
#define TORIC_TESTS_ORACLES_HPP

// Deliberately naive reference computations, independent of the library's
// algorithms, used to cross-check it.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toric/charpair.hpp"

namespace toric::oracle {

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m)
{
    const Eigen::Index n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Integer total = 0;
    for (Eigen::Index c = 0; c < n; ++c)
    {
        if (m(0, c) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index k = 0, kk = 0; k < n; ++k)
                if (k != c)
                    minor(r - 1, kk++) = m(r, k);
        const Integer term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

/// Gcd of all k x k minors of an n x k matrix (the index of its column span
/// in the saturation, when the columns are independent).
inline Integer maximal_minor_gcd(const IntMatrix& m)
{
    const int n = static_cast<int>(m.rows());
    const int k = static_cast<int>(m.cols());
    if (k == 0)
        return 1;
    Integer g = 0;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do
    {
        IntMatrix sub(k, k);
        for (int r = 0, rr = 0; r < n; ++r)
            if (pick[static_cast<std::size_t>(r)])
                sub.row(rr++) = m.row(r);
        g = gcd(g, cofactor_det(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return g;
}

inline IntMatrix columns(const IntMatrix& lambda, const std::vector<int>& cols)
{
    IntMatrix out(lambda.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        out.col(static_cast<Eigen::Index>(j)) = lambda.col(cols[j]);
    return out;
}

/**
 * |G_E(v)| without any projection: |det Lambda_v| divided by the index of
 * E's span in its saturation and by the content of each remaining vector
 * modulo that saturation.
 */
inline Integer local_order(const CharacteristicPair& pair, const Face& e, int v)
{
    const IndexSet at = pair.polytope().vertex(v);
    const std::vector<int> all = at.to_vector();
    const std::vector<int> inner = e.facets.to_vector();
    const IntMatrix lambda_e = columns(pair.matrix(), inner);
    const Integer base = maximal_minor_gcd(lambda_e);
    Integer divisor = base;
    for (int j : all)
    {
        if (e.facets.contains(j))
            continue;
        std::vector<int> with = inner;
        with.push_back(j);
        divisor *= maximal_minor_gcd(columns(pair.matrix(), with)) / base;
    }
    Integer d = cofactor_det(columns(pair.matrix(), all));
    if (d < 0)
        d = -d;
    return d / divisor;
}

/// Minimal non-faces of the nerve, straight from the vertex facet sets.
inline std::set<std::set<std::string>> nerve_nonfaces(const CombinatorialPolytope& q)
{
    const int m = q.facet_count();
    auto is_face = [&](std::uint64_t s) {
        for (const IndexSet& v : q.vertices())
            if ((s & ~v.bits()) == 0)
                return true;
        return false;
    };
    std::set<std::set<std::string>> out;
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << m); ++s)
    {
        if (is_face(s))
            continue;
        bool minimal = true;
        for (int i = 0; i < m && minimal; ++i)
            if ((s >> i) & 1)
                minimal = is_face(s & ~(std::uint64_t(1) << i));
        if (!minimal)
            continue;
        std::set<std::string> labels;
        for (int i = 0; i < m; ++i)
            if ((s >> i) & 1)
                labels.insert(q.facet_label(i));
        out.insert(labels);
    }
    return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo = -9, int hi = 9)
{
    std::uniform_int_distribution<int> entry(lo, hi);
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m(r, c) = entry(rng);
    return m;
}

inline std::vector<Integer> integers(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

}   // namespace toric::oracle

#endif
