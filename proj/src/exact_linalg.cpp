#include "toric/exact_linalg.hpp"

#include <string>

namespace toric {

Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return abs(a / gcd(a, b) * b);
}

std::vector<Integer> prime_factors(const Integer& a)
{
    std::vector<Integer> out;
    Integer n = abs(a);
    if (n < 2)
        return out;
    for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2))
    {
        if (n % d != 0)
            continue;
        out.push_back(d);
        while (n % d == 0)
            n /= d;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

Integer abs(const Integer& a)
{
    return a < 0 ? Integer(-a) : a;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

std::vector<Integer> SmithDecomposition::diagonal() const
{
    std::vector<Integer> d;
    const Eigen::Index n = std::min(S.rows(), S.cols());
    for (Eigen::Index i = 0; i < n; ++i)
        d.push_back(S(i, i));
    return d;
}

int SmithDecomposition::rank() const
{
    int r = 0;
    for (const Integer& x : diagonal())
        r += (x != 0);
    return r;
}

IntMatrix identity(int n)
{
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool is_unimodular(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        return false;
    Integer d = det(m);
    return d == 1 || d == -1;
}

IntMatrix to_integer(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
        {
            if (boost::multiprecision::denominator(m(i, j)) != 1)
                throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j)
                                  + ") = " + m(i, j).str() + " is not an integer");
            out(i, j) = Integer(boost::multiprecision::numerator(m(i, j)));
        }
    return out;
}

namespace {

RatMatrix gauss_jordan_inverse(RatMatrix a)
{
    const Eigen::Index n = a.rows();
    RatMatrix inv = RatMatrix::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
    {
        Eigen::Index p = k;
        while (p < n && a(p, k) == 0)
            ++p;
        // callers check singularity first
        a.row(k).swap(a.row(p));
        inv.row(k).swap(inv.row(p));
        const Rational pivot = a(k, k);
        a.row(k) /= pivot;
        inv.row(k) /= pivot;
        for (Eigen::Index i = 0; i < n; ++i)
        {
            if (i == k || a(i, k) == 0)
                continue;
            const Rational f = a(i, k);
            a.row(i) -= f * a.row(k);
            inv.row(i) -= f * inv.row(k);
        }
    }
    return inv;
}

}   // namespace

RatMatrix inverse(const IntMatrix& m)
{
    Integer d = det(m);
    if (d == 0)
        throw SingularMatrixError(d);
    return gauss_jordan_inverse(m.cast<Rational>());
}

RatMatrix inverse(const RatMatrix& m)
{
    if (det(m) == 0)
        throw SingularMatrixError(Integer(0));
    return gauss_jordan_inverse(m);
}

int rank(const IntMatrix& m)
{
    RatMatrix a = m.cast<Rational>();
    int r = 0;
    for (Eigen::Index col = 0; col < a.cols() && r < a.rows(); ++col)
    {
        Eigen::Index p = r;
        while (p < a.rows() && a(p, col) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.row(r).swap(a.row(p));
        for (Eigen::Index i = r + 1; i < a.rows(); ++i)
        {
            if (a(i, col) == 0)
                continue;
            const Rational f = a(i, col) / a(r, col);
            a.row(i) -= f * a.row(r);
        }
        ++r;
    }
    return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    SmithDecomposition out{identity(static_cast<int>(rows)), m, identity(static_cast<int>(cols))};
    IntMatrix& S = out.S;
    IntMatrix& U = out.U;
    IntMatrix& V = out.V;

    const Eigen::Index n = std::min(rows, cols);
    for (Eigen::Index t = 0; t < n; ++t)
    {
        for (;;)
        {
            // Smallest nonzero entry of the trailing block, first in
            // row-major order on ties.
            Eigen::Index pi = -1, pj = -1;
            Integer best;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j)
                {
                    if (S(i, j) == 0)
                        continue;
                    Integer a = abs(S(i, j));
                    if (pi < 0 || a < best)
                    {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0)
                return out;

            if (pi != t)
            {
                S.row(t).swap(S.row(pi));
                U.row(t).swap(U.row(pi));
            }
            if (pj != t)
            {
                S.col(t).swap(S.col(pj));
                V.col(t).swap(V.col(pj));
            }

            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i)
            {
                if (S(i, t) == 0)
                    continue;
                const Integer q = S(i, t) / S(t, t);
                S.row(i) -= q * S.row(t);
                U.row(i) -= q * U.row(t);
                clean = clean && S(i, t) == 0;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j)
            {
                if (S(t, j) == 0)
                    continue;
                const Integer q = S(t, j) / S(t, t);
                S.col(j) -= q * S.col(t);
                V.col(j) -= q * V.col(t);
                clean = clean && S(t, j) == 0;
            }
            if (!clean)
                continue;

            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (S(i, j) % S(t, t) != 0)
                    {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            S.row(t) += S.row(bad);
            U.row(t) += U.row(bad);
        }
        if (S(t, t) < 0)
        {
            S.row(t) = -S.row(t);
            U.row(t) = -U.row(t);
        }
    }
    return out;
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    HermiteDecomposition out{identity(static_cast<int>(rows)), m, 0, {}};
    IntMatrix& H = out.H;
    IntMatrix& U = out.U;

    Eigen::Index r = 0;
    for (Eigen::Index col = 0; col < cols && r < rows; ++col)
    {
        for (;;)
        {
            Eigen::Index p = -1;
            Integer best;
            for (Eigen::Index i = r; i < rows; ++i)
            {
                if (H(i, col) == 0)
                    continue;
                Integer a = abs(H(i, col));
                if (p < 0 || a < best)
                {
                    best = a;
                    p = i;
                }
            }
            if (p < 0)
                break;
            if (p != r)
            {
                H.row(r).swap(H.row(p));
                U.row(r).swap(U.row(p));
            }
            bool done = true;
            for (Eigen::Index i = r + 1; i < rows; ++i)
            {
                if (H(i, col) == 0)
                    continue;
                const Integer q = H(i, col) / H(r, col);
                H.row(i) -= q * H.row(r);
                U.row(i) -= q * U.row(r);
                done = done && H(i, col) == 0;
            }
            if (done)
                break;
        }
        if (H(r, col) == 0)
            continue;
        if (H(r, col) < 0)
        {
            H.row(r) = -H.row(r);
            U.row(r) = -U.row(r);
        }
        for (Eigen::Index i = 0; i < r; ++i)
        {
            const Integer q = floor_div(H(i, col), H(r, col));
            if (q == 0)
                continue;
            H.row(i) -= q * H.row(r);
            U.row(i) -= q * U.row(r);
        }
        out.pivot_columns.push_back(static_cast<int>(col));
        ++r;
    }
    out.rank = static_cast<int>(r);
    return out;
}

IntVector primitive(const IntVector& v)
{
    const Integer g = content(v);
    if (g == 0)
        throw DomainError("primitive: zero vector has no primitive vector");
    IntVector out = v;
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out(i) /= g;
    return out;
}

IntMatrix saturation_projection(const IntMatrix& generators)
{
    const Eigen::Index n = generators.rows();
    const Eigen::Index k = generators.cols();
    if (rank(generators) != k)
        throw RankError("saturation_projection: " + std::to_string(k)
                        + " generators are linearly dependent");
    SmithDecomposition snf = smith_normal_form(generators);
    return snf.U.bottomRows(n - k);
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    HermiteDecomposition h = hermite_normal_form(m.transpose());
    const Eigen::Index dim = m.cols() - h.rank;
    return h.U.bottomRows(dim).transpose();
}

}   // namespace toric
