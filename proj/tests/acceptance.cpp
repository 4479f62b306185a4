#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "document.hpp"
#include "oracles.hpp"
#include "toric/fixtures.hpp"
#include "toric/wsr.hpp"

using namespace toric;

namespace {

struct Verdict
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
        {
            if (pass)
                detail << what;
            else
                detail << "; " << what;
        }
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str(const std::vector<Integer>& xs)
{
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + xs[i].str();
    return out + ")";
}

std::string str(const std::vector<long long>& xs)
{
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + ")";
}

bool divides_none(const CharacteristicPair& pair, const RetractionSequence& seq, const Integer& p)
{
    for (const RetractionStep& s : seq)
        if (oracle::local_order(pair, s.face, s.vertex) % p == 0)
            return false;
    return true;
}

// 1. Prism local groups through the CLI and the induced primitive vector.
void prism_orders(Verdict& v)
{
    const auto start = Clock::now();
    std::ostringstream out, err;
    const int code = cli::run({"orders", "--format", "machine", std::string(TORIC_FIXTURE_DIR) + "/prism.json"},
                              out, err);
    v.require(code == cli::kOk, "orders exited with " + std::to_string(code));
    if (code != cli::kOk)
        return;
    const io::Json report = io::Json::parse(out.str());
    v.require(report["results"]["vertex_orders"] == io::Json::parse("[2, 4, 1, 1, 1, 1]"),
              "vertex orders " + report["results"]["vertex_orders"].dump());
    std::map<int, long> on_f4;
    for (const auto& entry : report["results"]["local_orders"])
        if (entry["face"] == io::Json::parse(R"(["F4"])"))
            on_f4[entry["vertex"].get<int>()] = entry["order"].get<long>();
    v.require(on_f4[0] == 1 && on_f4[1] == 2, "F4 orders at v1, v2 are " + std::to_string(on_f4[0]) + ", "
                                                  + std::to_string(on_f4[1]));

    const CharacteristicPair pair = fixtures::prism_pair();
    IntMatrix projection(2, 3);
    projection << -2, 1, 0, -4, 0, 1;
    const IntVector image = projection * pair.vector(0);
    const InducedPair induced = induced_pair(pair, Face{IndexSet{3}}, projection);
    v.require(image(0) == -2 && image(1) == -4, "projected lambda(F1) is not (-2,-4)");
    v.require(induced.pair.vector(0)(0) == -1 && induced.pair.vector(0)(1) == -2,
              "induced lambda on F1 cap F4 is not (-1,-2)");
    const double t = seconds_since(start);
    v.require(t < 1.0, "took " + std::to_string(t) + " s");
    v.detail << (v.pass ? "orders (2,4,1,1,1,1), F4: 1,2, primitive(-2,-4) = (-1,-2)" : "");
}

// 2. Polytopal and simplicial wedges are dual.
void wedge_duality(Verdict& v)
{
    const auto start = Clock::now();
    int checked = 0;
    for (const auto& [name, q] : fixtures::polytopes())
        for (int i = 0; i < q.facet_count(); ++i)
        {
            const CombinatorialPolytope w = polytopal_wedge(q, i).polytope;
            const auto expected = wedge_at_vertex(to_nerve(q), q.facet_label(i)).labelled_nonfaces();
            v.require(to_nerve(w).labelled_nonfaces() == expected, name + " at " + q.facet_label(i));
            v.require(oracle::nerve_nonfaces(w) == expected, name + " at " + q.facet_label(i) + " (brute force)");
            ++checked;
        }
    const double t = seconds_since(start);
    v.require(t < 10.0, "took " + std::to_string(t) + " s");
    if (v.pass)
        v.detail << checked << " wedges, " << t << " s";
}

// 3. Vertex orders of a single wedge equal the base orders.
void wedge_orders(Verdict& v)
{
    int checked = 0;
    for (const auto& np : fixtures::pairs())
    {
        const CombinatorialPolytope& q = np.pair.polytope();
        for (int i = 0; i < q.facet_count(); ++i)
        {
            const CharacteristicPair big = lambda_J(np.pair, JVector::single(q.facet_count(), i));
            const PolytopalWedge w = polytopal_wedge(q, i);
            for (int u = 0; u < q.vertex_count(); ++u)
            {
                const Integer base = oracle::local_order(np.pair, Face{}, u);
                std::vector<int> images{w.minus[static_cast<std::size_t>(u)]};
                if (w.plus[static_cast<std::size_t>(u)] >= 0)
                    images.push_back(w.plus[static_cast<std::size_t>(u)]);
                for (int image : images)
                {
                    v.require(local_group_order(big, Face{}, image) == base
                                  && oracle::local_order(big, Face{}, image) == base,
                              np.name + " facet " + std::to_string(i) + " vertex " + std::to_string(u));
                    ++checked;
                }
            }
        }
    }
    if (v.pass)
        v.detail << checked << " wedge vertices";
}

// 4. Double wedge versus the triple J-construction.
void double_wedge(Verdict& v)
{
    for (const auto& np : fixtures::pairs())
    {
        const int m = np.pair.facet_count();
        std::vector<int> three(static_cast<std::size_t>(m), 1);
        three[0] = 3;
        const CharacteristicPair direct = lambda_J(np.pair, JVector(three));
        const CharacteristicPair once = lambda_J(np.pair, JVector::single(m, 0));
        const CharacteristicPair twice = lambda_J(once, JVector::single(m + 1, 0));

        const std::string f1 = np.pair.polytope().facet_label(0);
        const std::map<std::string, std::string> rename{
            {wedge_label(wedge_label(f1, 2), 2), wedge_label(f1, 2)},
            {wedge_label(wedge_label(f1, 2), 1), wedge_label(f1, 3)}};
        auto relabel = [&](const std::string& l) {
            const auto it = rename.find(l);
            return it == rename.end() ? l : it->second;
        };
        std::set<std::set<std::string>> nonfaces;
        for (const auto& s : to_nerve(twice.polytope()).labelled_nonfaces())
        {
            std::set<std::string> r;
            for (const std::string& l : s)
                r.insert(relabel(l));
            nonfaces.insert(r);
        }
        v.require(nonfaces == to_nerve(direct.polytope()).labelled_nonfaces(), np.name + ": minimal non-faces");

        std::vector<std::string> labels;
        for (const std::string& l : twice.polytope().facet_labels())
            labels.push_back(relabel(l));
        v.require(labels == direct.polytope().facet_labels(), np.name + ": facet correspondence");

        IntMatrix u = identity(static_cast<int>(direct.matrix().rows()));
        u(0, 1) = -1;
        v.require(oracle::cofactor_det(u) == 1, "left factor not unimodular");
        v.require(IntMatrix(u * direct.matrix()) == twice.matrix(), np.name + ": matrices");

        for (int k = 0; k < direct.vertex_count(); ++k)
        {
            const int t = twice.polytope().find_vertex(direct.polytope().vertex(k));
            v.require(t >= 0 && local_group_order(twice, Face{}, t) == local_group_order(direct, Face{}, k),
                      np.name + ": order at vertex " + std::to_string(k));
        }
    }
    if (v.pass)
        v.detail << "all " << fixtures::pairs().size() << " pairs";
}

// 5. Weighted projective spaces and their J-constructions.
void weighted_projective(Verdict& v)
{
    for (const std::vector<Integer>& chi : fixtures::wps_weights())
    {
        const CharacteristicPair pair = wps_pair(chi);
        for (int u = 0; u < pair.vertex_count(); ++u)
        {
            const IndexSet omitted = IndexSet::range(pair.facet_count()) - pair.polytope().vertex(u);
            v.require(oracle::local_order(pair, Face{}, u) == chi[static_cast<std::size_t>(omitted.front())],
                      "wps" + str(chi) + " vertex " + std::to_string(u));
        }
        for (const JVector& j : {JVector({2, 1, 1}), JVector({1, 1, 2}), JVector({2, 2, 1})})
        {
            const CharacteristicPair big = lambda_J(pair, j);
            const WedgeLayout layout = wedge_layout(j);
            std::vector<Integer> chi_j(static_cast<std::size_t>(layout.total));
            for (int i = 0; i < j.size(); ++i)
                for (int pos : layout.copies[static_cast<std::size_t>(i)])
                    chi_j[static_cast<std::size_t>(pos)] = chi[static_cast<std::size_t>(i)];
            for (int u = 0; u < big.vertex_count(); ++u)
            {
                const IndexSet omitted = IndexSet::range(layout.total) - big.polytope().vertex(u);
                const IntMatrix at = oracle::columns(big.matrix(), big.polytope().vertex(u).to_vector());
                v.require(abs(oracle::cofactor_det(at)) == chi_j[static_cast<std::size_t>(omitted.front())],
                          "wps" + str(chi) + " with J at vertex " + std::to_string(u));
            }
        }
    }
    if (v.pass)
        v.detail << fixtures::wps_weights().size() << " weight vectors, 3 J each";
}

// 6. Formality certificates with independently checked witnesses.
std::map<std::string, FormalityReport> certify(Verdict& v)
{
    const auto start = Clock::now();
    std::map<std::string, FormalityReport> reports;
    for (const auto& np : fixtures::pairs())
    {
        if (np.name == "even-pentagon")
            continue;
        FormalityReport r = formality_check(np.pair);
        v.require(r.status == FormalityStatus::certified, np.name + ": " + to_string(r.status));
        v.require(is_valid_sequence(np.pair.polytope(), r.generic), np.name + ": generic sequence invalid");
        for (const auto& [p, s] : r.searches)
        {
            v.require(s.status == SearchStatus::found, np.name + " p=" + p.str() + ": " + to_string(s.status));
            if (s.status != SearchStatus::found)
                continue;
            const auto err = sequence_error(np.pair.polytope(), s.sequence);
            v.require(!err.has_value(), np.name + " p=" + p.str() + ": " + err.value_or(""));
            v.require(divides_none(np.pair, s.sequence, p), np.name + " p=" + p.str() + ": witness hits p");
        }
        reports.emplace(np.name, std::move(r));
    }
    const double t = seconds_since(start);
    v.require(t < 30.0, "took " + std::to_string(t) + " s");
    if (v.pass)
        v.detail << reports.size() << " pairs certified, " << t << " s";
    return reports;
}

// 7. Lifts of the witnesses to every single wedge.
void lifts(Verdict& v, const std::map<std::string, FormalityReport>& reports, std::string& note)
{
    int total = 0, failed = 0, wedge_found = 0, wedge_total = 0;
    for (const auto& np : fixtures::pairs())
    {
        const auto it = reports.find(np.name);
        if (it == reports.end() || it->second.status != FormalityStatus::certified)
            continue;
        const CombinatorialPolytope& q = np.pair.polytope();
        for (const auto& [p, s] : it->second.searches)
        {
            for (int i = 0; i < q.facet_count(); ++i)
            {
                ++total;
                const CharacteristicPair big = lambda_J(np.pair, JVector::single(q.facet_count(), i));
                const RetractionSequence lifted = lift_sequence(q, s.sequence, i);
                const bool valid = is_valid_sequence(big.polytope(), lifted);
                const bool avoids = valid && divides_none(big, lifted, p);
                if (!avoids)
                {
                    ++failed;
                    std::string where = np.name + " p=" + p.str() + " " + q.facet_label(i);
                    if (valid)
                    {
                        const std::vector<Integer> orders = step_orders(big, lifted);
                        for (std::size_t k = 0; k < orders.size(); ++k)
                            if (orders[k] % p == 0)
                            {
                                where += " (step " + std::to_string(k + 1) + " order " + orders[k].str() + ")";
                                break;
                            }
                    }
                    v.require(false, valid ? where : where + " (invalid lift)");
                }
                ++wedge_total;
                wedge_found += find_sequence_avoiding(big, p).status == SearchStatus::found;
            }
        }
    }
    if (!v.pass)
        v.detail << " [" << failed << " of " << total << " lifts hit p]";
    else
        v.detail << total << " lifts";
    note = "p-avoiding sequences found directly on " + std::to_string(wedge_found) + " of "
         + std::to_string(wedge_total) + " single wedges";
}

// 8. Derived wedge z-vectors against the direct computation.
void wedge_z(Verdict& v)
{
    int checked = 0;
    for (const auto& np : fixtures::pairs())
    {
        const int m = np.pair.facet_count();
        for (int i = 0; i < m; ++i)
        {
            const CharacteristicPair big = lambda_J(np.pair, JVector::single(m, i));
            const std::vector<RatMatrix> derived = wedge_z_vectors(np.pair, i);
            v.require(static_cast<int>(derived.size()) == big.vertex_count(), np.name + ": vertex count");
            for (int u = 0; u < big.vertex_count() && u < static_cast<int>(derived.size()); ++u)
            {
                v.require(derived[static_cast<std::size_t>(u)] == z_vector(big, u),
                          np.name + " facet " + std::to_string(i) + " vertex " + std::to_string(u));
                ++checked;
            }
        }
    }
    if (v.pass)
        v.detail << checked << " wedge vertices";
}

// 9. Cell census against h-vectors.
void census(Verdict& v)
{
    // A simple 3-polytope has a symmetric h-vector of length 4; for the
    // triangular prism it is (1,2,2,1).
    const std::vector<std::pair<std::string, std::vector<long long>>> expected{
        {"pentagon", {1, 3, 1}}, {"prism", {1, 2, 2, 1}}, {"simplex3", {1, 1, 1, 1}}};
    for (const auto& [name, q] : fixtures::polytopes())
    {
        const std::vector<long long> h = h_vector(q);
        for (const auto& [n, h_ref] : expected)
            if (n == name)
                v.require(h == h_ref, name + " h-vector " + str(h));
        const auto seqs = enumerate_sequences(q, 8);
        v.require(seqs.size() >= 5, name + ": fewer than 5 sequences");
        std::set<std::vector<long long>> seen;
        for (const RetractionSequence& s : seqs)
        {
            v.require(is_valid_sequence(q, s), name + ": invalid sequence");
            seen.insert(betti_ranks(q, s));
        }
        v.require(seen.size() == 1 && *seen.begin() == h, name + ": census differs from h-vector");
    }
    if (v.pass)
        v.detail << "pentagon (1,3,1), prism (1,2,2,1), simplex3 (1,1,1,1), 8 sequences each";
}

// 10. Integrality lattice properties.
void weighted_sr(Verdict& v)
{
    std::mt19937 rng(2024);
    int products = 0;
    for (const CharacteristicPair& pair : {fixtures::prism_pair(), wps_pair(oracle::integers({1, 1, 2}))})
    {
        const int m = pair.facet_count();
        std::vector<Polynomial> members;
        std::vector<GradedLatticeBasis> bases;
        for (int d = 1; d <= 3; ++d)
        {
            bases.push_back(graded_basis(pair, d));
            const GradedLatticeBasis& b = bases.back();
            for (const Polynomial& p : b.polynomials())
            {
                v.require(int_membership(pair, p).member, "basis element not integral: " + to_string(p));
                if (d <= 2)
                    members.push_back(p);
            }
            const long den = b.denominator.convert_to<long>();
            const auto n = static_cast<Eigen::Index>(b.monomials.size());
            // Smallest integral multiple of each monomial by scanning 1..D.
            for (Eigen::Index k = 0; k < n; ++k)
            {
                long first = 0;
                for (long c = 1; c <= den && first == 0; ++c)
                    if (int_membership(pair, Polynomial::monomial(b.monomials[static_cast<std::size_t>(k)], c)).member)
                        first = c;
                v.require(Integer(first) == b.clearing_integer(static_cast<int>(k)), "clearing integer mismatch");
            }
            // Random residues modulo D: lattice membership equals integrality.
            std::uniform_int_distribution<long> residue(0, den - 1);
            std::uniform_int_distribution<int> sparse(0, 2);
            for (int trial = 0; trial < 200; ++trial)
            {
                IntVector coeffs = IntVector::Zero(n);
                Polynomial f(m);
                for (Eigen::Index k = 0; k < n; ++k)
                {
                    if (sparse(rng) != 0)
                        continue;
                    const long c = residue(rng);
                    coeffs(k) = c;
                    f.add_term(b.monomials[static_cast<std::size_t>(k)], Rational(c));
                }
                v.require(in_lattice(b, coeffs) == int_membership(pair, f).member, "lattice is not maximal");
            }
        }
        const std::vector<Polynomial> sr = sr_ideal(pair.polytope());
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        std::uniform_int_distribution<int> scalar(-5, 5);
        for (int trial = 0; trial < 200; ++trial)
        {
            const Polynomial f = members[pick(rng)] * Rational(scalar(rng)) + members[pick(rng)];
            const Polynomial g = members[pick(rng)] + members[pick(rng)] * Rational(scalar(rng));
            v.require(int_membership(pair, f * g).member, "product left the ring");
            ++products;
            for (const Polynomial& s : sr)
            {
                const Polynomial h = s * (Polynomial::variable(m, trial % m, Rational(1, 3 + trial % 5))
                                          + Polynomial::constant(m, Rational(trial, 7)));
                v.require(int_membership(pair, h).member, "Stanley-Reisner multiple not integral");
            }
        }
    }
    if (v.pass)
        v.detail << products << " products, degrees 1..3";
}

// 11. Exact linear algebra against naive oracles.
void linear_algebra(Verdict& v)
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> size(1, 5);
    std::uniform_int_distribution<int> scale(1, 12);
    int inverted = 0;
    for (int trial = 0; trial < 500; ++trial)
    {
        const int n = size(rng);
        const IntMatrix a = oracle::random_matrix(rng, n, n);
        const Integer d = oracle::cofactor_det(a);
        v.require(det(a) == d, "det mismatch");
        Integer product = 1;
        for (const Integer& s : smith_normal_form(a).diagonal())
            product *= s;
        v.require(abs(d) == product, "|det| differs from the Smith diagonal product");
        if (d != 0)
        {
            const RatMatrix inv = inverse(a);
            v.require(RatMatrix(inv * a.cast<Rational>()) == RatMatrix::Identity(n, n), "inverse * A is not I");
            v.require(RatMatrix(a.cast<Rational>() * inv) == RatMatrix::Identity(n, n), "A * inverse is not I");
            ++inverted;
        }
        const IntVector x = oracle::random_matrix(rng, n, 1);
        if (!x.isZero())
        {
            const IntVector p = primitive(x);
            v.require(primitive(IntVector(x * Integer(scale(rng)))) == p, "primitive not scale invariant");
            v.require(content(p) == 1 && IntVector(p * content(x)) == x, "primitive is not x / content");
        }
    }
    if (v.pass)
        v.detail << "500 matrices, " << inverted << " inverted";
}

}   // namespace

int main()
{
    int failures = 0;
    auto report = [&](int n, const std::string& title, const std::function<void(Verdict&)>& check) {
        Verdict v;
        try
        {
            check(v);
        }
        catch (const std::exception& e)
        {
            v.require(false, std::string("exception: ") + e.what());
        }
        failures += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << n << " " << title << ": " << v.detail.str() << std::endl;
    };

    std::map<std::string, FormalityReport> reports;
    std::string lift_note;
    report(1, "prism local groups", prism_orders);
    report(2, "wedge duality", wedge_duality);
    report(3, "wedge vertex orders", wedge_orders);
    report(4, "double wedge", double_wedge);
    report(5, "weighted projective spaces", weighted_projective);
    report(6, "formality certificates", [&](Verdict& v) { reports = certify(v); });
    report(7, "lifted witnesses", [&](Verdict& v) { lifts(v, reports, lift_note); });
    if (!lift_note.empty())
        std::cout << "     note: " << lift_note << std::endl;
    report(8, "wedge z-vectors", wedge_z);
    report(9, "cell census", census);
    report(10, "integrality lattices", weighted_sr);
    report(11, "exact linear algebra", linear_algebra);

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
