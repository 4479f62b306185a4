/**
 * Exact integer and rational linear algebra.
 *
 * Matrices are plain Eigen dense matrices over arbitrary-precision GMP
 * scalars, so the usual Eigen expressions (products, blocks, transposes,
 * comparisons) work unchanged. Everything that Eigen would do in floating
 * point (determinants, inverses, decompositions) is provided here as free
 * functions with exact arithmetic.
 */

#ifndef TORIC_EXACT_LINALG_HPP
#define TORIC_EXACT_LINALG_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "toric/errors.hpp"

namespace toric {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

/// Raised by inverse() on a singular input; carries the zero determinant.
class SingularMatrixError : public DomainError
{
public:
    explicit SingularMatrixError(Integer det)
        : DomainError("matrix is singular (det = " + det.str() + ")"), det_(std::move(det))
    {}

    const Integer& det() const { return det_; }

private:
    Integer det_;
};

/**
 * U * A * V = S with U, V unimodular and S diagonal (in the rectangular
 * sense), diagonal entries nonnegative and each dividing the next.
 */
struct SmithDecomposition
{
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;

    /// The min(rows, cols) diagonal entries of S.
    std::vector<Integer> diagonal() const;
    /// Number of nonzero diagonal entries.
    int rank() const;
};

/**
 * U * A = H with U unimodular and H in row Hermite normal form: the first
 * `rank` rows are nonzero with strictly increasing pivot columns, pivots
 * positive, and entries above each pivot reduced into [0, pivot).
 */
struct HermiteDecomposition
{
    IntMatrix U;
    IntMatrix H;
    int rank = 0;
    std::vector<int> pivot_columns;
};

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

/// Quotient rounded towards negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

/// Distinct prime divisors of |a| in increasing order (empty for 0 and 1).
std::vector<Integer> prime_factors(const Integer& a);

/// Positive gcd of all entries (0 for the zero vector).
template <typename Derived>
Integer content(const Eigen::MatrixBase<Derived>& v)
{
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = gcd(g, v(i));
    return g;
}

// ---------------------------------------------------------------------------
// Determinant
// ---------------------------------------------------------------------------

/**
 * Fraction-free (Bareiss) determinant. Works for any exact scalar type in
 * which the Bareiss quotients are exact divisions (integers, rationals).
 */
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw DimensionError("det: matrix is " + std::to_string(m.rows()) + "x"
                             + std::to_string(m.cols()) + ", not square");
    const Eigen::Index n = m.rows();
    if (n == 0)
        return Scalar(1);

    Matrix<Scalar> a = m;
    Scalar prev(1);
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k)
    {
        if (a(k, k) == 0)
        {
            Eigen::Index swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return Scalar(0);
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
        {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Scalar(-a(n - 1, n - 1));
}

// ---------------------------------------------------------------------------
// Inverse and rank
// ---------------------------------------------------------------------------

/// Exact rational inverse. Throws SingularMatrixError when det(m) = 0.
RatMatrix inverse(const IntMatrix& m);
RatMatrix inverse(const RatMatrix& m);

/// Rank over Q.
int rank(const IntMatrix& m);

IntMatrix identity(int n);
bool is_unimodular(const IntMatrix& m);

/// Entrywise conversion; throws DomainError if any entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

SmithDecomposition smith_normal_form(const IntMatrix& m);
HermiteDecomposition hermite_normal_form(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Lattice operations
// ---------------------------------------------------------------------------

/// v divided by the positive gcd of its entries. Throws DomainError on v = 0.
IntVector primitive(const IntVector& v);

/**
 * Integer projection onto the quotient of Z^n by the saturation of the span
 * of the given columns.
 *
 * `generators` is n x k with linearly independent columns. The result P is
 * (n-k) x n, surjective onto Z^(n-k), with kernel exactly
 * span_Q(generators) intersected with Z^n. P is the bottom n-k rows of the
 * left transform of smith_normal_form(generators).
 */
IntMatrix saturation_projection(const IntMatrix& generators);

/**
 * Basis (as columns) of the integer kernel of m: all x in Z^cols with
 * m * x = 0.
 */
IntMatrix integer_kernel(const IntMatrix& m);

}   // namespace toric

#endif
