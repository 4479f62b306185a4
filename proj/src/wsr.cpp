#include "toric/wsr.hpp"

#include <algorithm>

namespace toric {

namespace {

Integer denominator_of(const Rational& r)
{
    return Integer(boost::multiprecision::denominator(r));
}

Integer numerator_of(const Rational& r)
{
    return Integer(boost::multiprecision::numerator(r));
}

void require_same_arity(const Polynomial& a, const Polynomial& b)
{
    if (a.variables() != b.variables())
        throw DimensionError("polynomials in " + std::to_string(a.variables()) + " and "
                             + std::to_string(b.variables()) + " variables");
}

void collect_monomials(int variables, int degree, Exponent& current, std::size_t index,
                       std::vector<Exponent>& out)
{
    if (index + 1 == static_cast<std::size_t>(variables))
    {
        current[index] = degree;
        out.push_back(current);
        return;
    }
    for (int e = degree; e >= 0; --e)
    {
        current[index] = e;
        collect_monomials(variables, degree - e, current, index + 1, out);
    }
    current[index] = 0;
}

/// Rational y with y^T h = v, for h square upper triangular with nonzero diagonal.
RatVector solve_left(const IntMatrix& h, const IntVector& v)
{
    const Eigen::Index n = h.rows();
    RatVector y(n);
    for (Eigen::Index j = 0; j < n; ++j)
    {
        Rational acc = Rational(v(j));
        for (Eigen::Index i = 0; i < j; ++i)
            acc -= y(i) * Rational(h(i, j));
        y(j) = acc / Rational(h(j, j));
    }
    return y;
}

}   // namespace

Polynomial Polynomial::constant(int variables, const Rational& c)
{
    Polynomial p(variables);
    p.add_term(Exponent(static_cast<std::size_t>(variables), 0), c);
    return p;
}

Polynomial Polynomial::variable(int variables, int index, const Rational& c)
{
    if (index < 0 || index >= variables)
        throw DimensionError("variable index " + std::to_string(index) + " out of range");
    Exponent e(static_cast<std::size_t>(variables), 0);
    e[static_cast<std::size_t>(index)] = 1;
    Polynomial p(variables);
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c)
{
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::linear(const RatVector& coefficients)
{
    const int n = static_cast<int>(coefficients.size());
    Polynomial p(n);
    for (int k = 0; k < n; ++k)
        if (coefficients(k) != 0)
            p += variable(n, k, coefficients(k));
    return p;
}

Polynomial Polynomial::linear(const IntVector& coefficients)
{
    return linear(RatVector(coefficients.cast<Rational>()));
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
    {
        int total = 0;
        for (int x : e)
            total += x;
        d = std::max(d, total);
    }
    return d;
}

bool Polynomial::is_homogeneous() const
{
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        int total = 0;
        for (int x : t.first)
            total += x;
        return total == d;
    });
}

Rational Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return denominator_of(t.second) == 1; });
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (e.size() != static_cast<std::size_t>(variables_))
        throw DimensionError("exponent has " + std::to_string(e.size()) + " entries, expected "
                             + std::to_string(variables_));
    for (int x : e)
        if (x < 0)
            throw DomainError("negative exponent");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same_arity(*this, other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_same_arity(*this, other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0)
    {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_arity(a, b);
    Polynomial out(a.variables());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
        {
            Exponent e = ea;
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] += eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial Polynomial::pow(int k) const
{
    if (k < 0)
        throw DomainError("negative power");
    Polynomial out = constant(variables_, 1);
    for (int i = 0; i < k; ++i)
        out = out * *this;
    return out;
}

Polynomial Polynomial::substitute(const RatMatrix& forms) const
{
    if (forms.rows() != variables_)
        throw DimensionError("substitution has " + std::to_string(forms.rows()) + " forms for "
                             + std::to_string(variables_) + " variables");
    const int target = static_cast<int>(forms.cols());
    std::vector<Polynomial> linear_forms;
    for (int j = 0; j < variables_; ++j)
        linear_forms.push_back(linear(RatVector(forms.row(j).transpose())));

    Polynomial out(target);
    for (const auto& [e, c] : terms_)
    {
        Polynomial term = constant(target, c);
        for (int j = 0; j < variables_ && !term.is_zero(); ++j)
            if (e[static_cast<std::size_t>(j)] > 0)
                term = term * linear_forms[static_cast<std::size_t>(j)].pow(e[static_cast<std::size_t>(j)]);
        out += term;
    }
    return out;
}

std::string to_string(const Rational& r)
{
    return r.str();
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names)
{
    if (p.is_zero())
        return "0";
    auto name = [&](std::size_t k) {
        return k < names.size() ? names[k] : "x" + std::to_string(k + 1);
    };
    std::string out;
    // highest-degree terms first, lexicographically decreasing
    std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a.first)
            da += x;
        for (int x : b.first)
            db += x;
        return da != db ? da > db : a.first > b.first;
    });
    for (const auto& [e, c] : terms)
    {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k)
        {
            if (e[k] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += name(k);
            if (e[k] > 1)
                mono += "^" + std::to_string(e[k]);
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string coeff = mag == 1 && !mono.empty() ? "" : to_string(mag);
        if (!coeff.empty() && !mono.empty())
            coeff += "*";
        if (out.empty())
            out = (negative ? "-" : "") + coeff + mono;
        else
            out += (negative ? " - " : " + ") + coeff + mono;
    }
    return out;
}

RatMatrix z_vector(const CharacteristicPair& pair, int vertex)
{
    const CombinatorialPolytope& q = pair.polytope();
    if (vertex < 0 || vertex >= q.vertex_count())
        throw LookupError("vertex index " + std::to_string(vertex) + " out of range");
    const std::vector<int> facets = q.vertex(vertex).to_vector();
    const RatMatrix inv = inverse(vertex_matrix(pair, Face{}, vertex));
    RatMatrix z = RatMatrix::Zero(pair.facet_count(), pair.dimension());
    for (std::size_t a = 0; a < facets.size(); ++a)
        z.row(facets[a]) = inv.row(static_cast<Eigen::Index>(a));
    return z;
}

MembershipResult int_membership(const CharacteristicPair& pair, const Polynomial& f)
{
    if (f.variables() != pair.facet_count())
        throw DimensionError("polynomial has " + std::to_string(f.variables()) + " variables, expected "
                             + std::to_string(pair.facet_count()));
    for (int v = 0; v < pair.vertex_count(); ++v)
    {
        const Polynomial g = f.substitute(z_vector(pair, v));
        for (const auto& [e, c] : g.terms())
            if (denominator_of(c) != 1)
                return MembershipResult{false, MembershipWitness{v, e, c}};
    }
    return {};
}

std::vector<Exponent> monomials(int variables, int degree)
{
    if (variables < 0 || degree < 0)
        throw DomainError("monomials: negative variable count or degree");
    std::vector<Exponent> out;
    if (variables == 0)
    {
        if (degree == 0)
            out.emplace_back();
        return out;
    }
    Exponent current(static_cast<std::size_t>(variables), 0);
    collect_monomials(variables, degree, current, 0, out);
    return out;
}

std::vector<Polynomial> GradedLatticeBasis::polynomials() const
{
    std::vector<Polynomial> out;
    for (Eigen::Index r = 0; r < basis.rows(); ++r)
    {
        Polynomial p(monomials.empty() ? 0 : static_cast<int>(monomials.front().size()));
        for (Eigen::Index k = 0; k < basis.cols(); ++k)
            if (basis(r, k) != 0)
                p.add_term(monomials[static_cast<std::size_t>(k)], Rational(basis(r, k)));
        out.push_back(std::move(p));
    }
    return out;
}

Integer GradedLatticeBasis::clearing_integer(int k) const
{
    IntVector unit = IntVector::Zero(basis.cols());
    unit(k) = 1;
    Integer c = 1;
    const RatVector y = solve_left(basis, unit);
    for (Eigen::Index i = 0; i < y.size(); ++i)
        c = lcm(c, denominator_of(y(i)));
    return c;
}

bool in_lattice(const GradedLatticeBasis& basis, const IntVector& coefficients)
{
    if (coefficients.size() != basis.basis.cols())
        throw DimensionError("coefficient vector has the wrong length");
    const RatVector y = solve_left(basis.basis, coefficients);
    for (Eigen::Index i = 0; i < y.size(); ++i)
        if (denominator_of(y(i)) != 1)
            return false;
    return true;
}

GradedLatticeBasis graded_basis(const CharacteristicPair& pair, int degree)
{
    if (degree < 1)
        throw DomainError("graded_basis: degree must be at least 1");
    GradedLatticeBasis out;
    out.degree = degree;
    out.monomials = monomials(pair.facet_count(), degree);
    const auto n = static_cast<Eigen::Index>(out.monomials.size());

    // Coefficients of every monomial evaluated at every z^v.
    std::map<std::pair<int, Exponent>, Eigen::Index> rows;
    std::vector<std::vector<std::pair<Eigen::Index, Rational>>> columns(static_cast<std::size_t>(n));
    for (int v = 0; v < pair.vertex_count(); ++v)
    {
        const RatMatrix z = z_vector(pair, v);
        for (Eigen::Index k = 0; k < n; ++k)
        {
            const Polynomial g = Polynomial::monomial(out.monomials[static_cast<std::size_t>(k)]).substitute(z);
            for (const auto& [e, c] : g.terms())
            {
                auto [it, inserted] = rows.try_emplace({v, e}, static_cast<Eigen::Index>(rows.size()));
                columns[static_cast<std::size_t>(k)].emplace_back(it->second, c);
            }
        }
    }
    Integer d = 1;
    for (const auto& col : columns)
        for (const auto& [r, c] : col)
            d = lcm(d, denominator_of(c));
    out.denominator = d;

    IntMatrix b = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), n);
    for (Eigen::Index k = 0; k < n; ++k)
        for (const auto& [r, c] : columns[static_cast<std::size_t>(k)])
            b(r, k) = numerator_of(c * Rational(d));

    // c is in the lattice iff b c = 0 mod d. With U b V = S this reads
    // s_k y_k = 0 mod d for y = V^{-1} c.
    IntMatrix generators;
    if (b.rows() == 0)
    {
        generators = identity(static_cast<int>(n));
    }
    else
    {
        const SmithDecomposition snf = smith_normal_form(b);
        const std::vector<Integer> diag = snf.diagonal();
        generators = snf.V;
        for (Eigen::Index k = 0; k < n; ++k)
        {
            const Integer s = static_cast<std::size_t>(k) < diag.size() ? diag[static_cast<std::size_t>(k)] : Integer(0);
            generators.col(k) *= d / gcd(d, s);
        }
    }
    const HermiteDecomposition hnf = hermite_normal_form(generators.transpose());
    out.basis = hnf.H.topRows(hnf.rank);
    return out;
}

std::vector<Polynomial> sr_ideal(const CombinatorialPolytope& q)
{
    std::vector<Polynomial> out;
    const int m = q.facet_count();
    const SimplicialComplex nerve = to_nerve(q);
    for (const IndexSet& s : nerve.minimal_nonfaces())
    {
        Exponent e(static_cast<std::size_t>(m), 0);
        for (int i : s.to_vector())
            e[static_cast<std::size_t>(i)] = 1;
        out.push_back(Polynomial::monomial(e));
    }
    return out;
}

std::vector<Polynomial> linear_ideal(const CharacteristicPair& pair)
{
    std::vector<Polynomial> out;
    for (Eigen::Index j = 0; j < pair.matrix().rows(); ++j)
        out.push_back(Polynomial::linear(IntVector(pair.matrix().row(j).transpose())));
    return out;
}

std::vector<Polynomial> j_ideal(const CharacteristicPair& pair, const JVector& j)
{
    const int m = pair.facet_count();
    if (j.size() != m)
        throw DimensionError("J has " + std::to_string(j.size()) + " entries but there are "
                             + std::to_string(m) + " facets");
    const WedgeLayout layout = wedge_layout(j);
    std::vector<Polynomial> out;
    for (Eigen::Index r = 0; r < pair.matrix().rows(); ++r)
    {
        IntVector coeffs = IntVector::Zero(layout.total);
        for (int i = 0; i < m; ++i)
            coeffs(layout.copies[static_cast<std::size_t>(i)][0]) = pair.matrix()(r, i);
        out.push_back(Polynomial::linear(coeffs));
    }
    for (int i = 0; i < m; ++i)
    {
        const auto& copies = layout.copies[static_cast<std::size_t>(i)];
        for (int t = 2; t <= j[i]; ++t)
            out.push_back(Polynomial::variable(layout.total, copies[static_cast<std::size_t>(t - 1)])
                          - Polynomial::variable(layout.total, copies[0]));
    }
    return out;
}

std::vector<RatMatrix> wedge_z_vectors(const CharacteristicPair& pair, int facet)
{
    const CombinatorialPolytope& q = pair.polytope();
    const PolytopalWedge w = polytopal_wedge(q, facet);
    const int m = q.facet_count();
    const int n = q.dimension();
    const auto top = static_cast<Eigen::Index>(PolytopalWedge::kTop);
    const auto bottom = static_cast<Eigen::Index>(w.bottom());
    std::vector<RatMatrix> out(static_cast<std::size_t>(w.polytope.vertex_count()));

    for (int v = 0; v < q.vertex_count(); ++v)
    {
        const RatMatrix z = z_vector(pair, v);
        // Base entries shifted down one row and right one column (u_0 first).
        RatMatrix lifted = RatMatrix::Zero(m + 1, n + 1);
        lifted.block(1, 1, m, n) = z;

        if (q.vertex(v).contains(facet))
        {
            RatMatrix minus = lifted;
            minus(top, 0) = 1;
            minus.block(top, 1, 1, n) = z.row(facet);
            out[static_cast<std::size_t>(w.minus[static_cast<std::size_t>(v)])] = minus;
            continue;
        }

        RatMatrix plus = lifted;
        plus(top, 0) = 1;
        out[static_cast<std::size_t>(w.plus[static_cast<std::size_t>(v)])] = plus;

        const std::vector<int> facets = q.vertex(v).to_vector();
        const RatVector gamma = inverse(vertex_matrix(pair, Face{}, v)) * pair.vector(facet).cast<Rational>();
        RatMatrix minus = lifted;
        for (std::size_t a = 0; a < facets.size(); ++a)
            minus(facets[a] + 1, 0) = gamma(static_cast<Eigen::Index>(a));
        minus(bottom, 0) = -1;
        out[static_cast<std::size_t>(w.minus[static_cast<std::size_t>(v)])] = minus;
    }
    return out;
}

CohomologyPresentation cohomology_presentation(const CharacteristicPair& pair, int max_degree,
                                               const std::optional<JVector>& j, std::uint64_t budget)
{
    if (max_degree < 1)
        throw DomainError("cohomology_presentation: degree bound must be at least 1");
    require_valid(pair);
    FormalityReport formality = formality_check(pair, budget);
    if (formality.status != FormalityStatus::certified)
        throw HypothesisError("pair is not certified by the retraction criterion ("
                              + to_string(formality.status) + "); odd cohomology may be nonzero");

    CharacteristicPair target = j ? lambda_J(pair, *j) : pair;
    std::vector<GradedLatticeBasis> bases;
    for (int d = 1; d <= max_degree; ++d)
        bases.push_back(graded_basis(target, d));
    std::vector<Polynomial> sr = sr_ideal(target.polytope());
    std::vector<Polynomial> linear = j ? j_ideal(pair, *j) : linear_ideal(pair);
    std::vector<long long> ranks = betti_ranks(target.polytope(), generic_sequence(target.polytope()));
    return CohomologyPresentation{std::move(target), std::move(formality), std::move(bases),
                                  std::move(sr), std::move(linear), std::move(ranks)};
}

}   // namespace toric
